#include "perimin/hyperbolic.hpp"

#include <algorithm>

namespace perimin::hyp {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

Complex mobius(const std::array<Complex, 4>& m, Complex z) {
    return (m[0] * z + m[1]) / (m[2] * z + m[3]);
}

// (q - p) / (1 - conj(p) q): image of q under the automorphism sending p to 0.
Complex mobius_sub(Complex p, Complex q) {
    return (q - p) / (1.0 - std::conj(p) * q);
}

Complex mobius_add(Complex p, Complex w) {
    return (w + p) / (1.0 + std::conj(p) * w);
}

} // namespace

bool HPoint::valid() const {
    if (chart == Chart::disk) return u * u + v * v < (1.0 - kIdealGuard) * (1.0 - kIdealGuard);
    return v > 0.0;
}

IdealPoint::IdealPoint(double a) {
    angle = std::fmod(a, kTwoPi);
    if (angle < 0.0) angle += kTwoPi;
}

IdealPoint IdealPoint::from_complex(Complex z) { return IdealPoint(std::arg(z)); }

HPoint origin() { return HPoint::disk(0.0, 0.0); }

Complex cayley_halfplane_to_disk(Complex zeta) {
    return Complex(0, 1) * (zeta - Complex(0, 1)) / (zeta + Complex(0, 1));
}

Complex cayley_disk_to_halfplane(Complex w) {
    return (1.0 - Complex(0, 1) * w) / (w - Complex(0, 1));
}

Complex disk_coord(const HPoint& p) {
    if (!p.valid()) throw OutOfDomain("HPoint outside its chart domain");
    if (p.chart == Chart::disk) return Complex(p.u, p.v);
    return cayley_halfplane_to_disk(Complex(p.u, p.v));
}

Complex halfplane_coord(const HPoint& p) {
    if (!p.valid()) throw OutOfDomain("HPoint outside its chart domain");
    if (p.chart == Chart::halfplane) return Complex(p.u, p.v);
    return cayley_disk_to_halfplane(Complex(p.u, p.v));
}

HPoint to_chart(const HPoint& p, Chart target) {
    if (p.chart == target) return p;
    Complex z = (target == Chart::disk) ? disk_coord(p) : halfplane_coord(p);
    return HPoint(target, z.real(), z.imag());
}

double conformal_factor(const HPoint& p) {
    if (p.chart == Chart::disk) return 2.0 / (1.0 - p.u * p.u - p.v * p.v);
    return 1.0 / p.v;
}

HGeodesic::HGeodesic(IdealPoint a, IdealPoint b) : e0(a), e1(b) {
    double d = std::abs(a.unit() - b.unit());
    if (d < 1e-12) throw CoincidentPoints("geodesic endpoints coincide");
}

HGeodesic gamma_theta(double theta) {
    Complex w(std::sin(theta), std::cos(theta));
    return HGeodesic(IdealPoint::from_complex(-w), IdealPoint::from_complex(w));
}

HGeodesic g_mu(double mu) {
    if (std::abs(mu) >= 1.0) throw BadParameter("g(mu) requires |mu| < 1");
    double ell = 2.0 * std::atanh(mu);
    double phi = std::asin(std::tanh(ell));
    return HGeodesic(IdealPoint(M_PI - phi), IdealPoint(phi));
}

double sector_angle(const HPoint& p) {
    Complex z = disk_coord(p);
    return std::atan2(z.real(), z.imag());
}

bool in_sector(const HPoint& p, const AngularSector& s, double slack) {
    Complex z = disk_coord(p);
    if (std::abs(z) == 0.0) return true;
    double u = sector_angle(p);
    return u >= -slack && u <= s.theta + slack;
}

// ---------------------------------------------------------------------------
// HIsometry

Complex HIsometry::apply(Complex z) const {
    return mobius(m, reverses ? std::conj(z) : z);
}

HPoint HIsometry::operator()(const HPoint& p) const { return HPoint::disk(apply(disk_coord(p))); }

IdealPoint HIsometry::operator()(const IdealPoint& q) const {
    return IdealPoint::from_complex(apply(q.unit()));
}

HGeodesic HIsometry::operator()(const HGeodesic& g) const {
    return HGeodesic((*this)(g.e0), (*this)(g.e1));
}

HIsometry HIsometry::compose(const HIsometry& other) const {
    std::array<Complex, 4> b = other.m;
    if (reverses)
        for (auto& x : b) x = std::conj(x);
    HIsometry out;
    out.m = {m[0] * b[0] + m[1] * b[2], m[0] * b[1] + m[1] * b[3],
             m[2] * b[0] + m[3] * b[2], m[2] * b[1] + m[3] * b[3]};
    out.reverses = reverses != other.reverses;
    return out;
}

HIsometry HIsometry::inverse() const {
    HIsometry out;
    out.m = {m[3], -m[1], -m[2], m[0]};
    if (reverses)
        for (auto& x : out.m) x = std::conj(x);
    out.reverses = reverses;
    return out;
}

HIsometry HIsometry::normalized() const {
    Complex det = m[0] * m[3] - m[1] * m[2];
    Complex s = std::sqrt(det);
    HIsometry out = *this;
    for (auto& x : out.m) x /= s;
    return out;
}

HIsometry HIsometry::identity() { return HIsometry(); }

HIsometry HIsometry::rotation(const HPoint& center, double angle) {
    Complex c = disk_coord(center);
    Complex e(std::cos(angle), std::sin(angle));
    // conjugate z -> e z by the automorphism moving the center to 0
    HIsometry move;
    move.m = {Complex(1, 0), -c, -std::conj(c), Complex(1, 0)};
    HIsometry rot;
    rot.m = {e, Complex(0, 0), Complex(0, 0), Complex(1, 0)};
    HIsometry back;
    back.m = {Complex(1, 0), c, std::conj(c), Complex(1, 0)};
    return back.compose(rot).compose(move);
}

HIsometry frame_geodesic(const HGeodesic& g) {
    Complex a = g.e0.unit(), b = g.e1.unit();
    // nearest point of g to the origin
    Complex p0(0, 0);
    double det = a.real() * b.imag() - a.imag() * b.real();
    if (std::abs(det) > 1e-14) {
        Complex w((b.imag() - a.imag()) / det, (a.real() - b.real()) / det);
        double r = std::sqrt(std::norm(w) - 1.0);
        p0 = w * (1.0 - r / std::abs(w));
    }
    HIsometry move;
    move.m = {Complex(1, 0), -p0, -std::conj(p0), Complex(1, 0)};
    Complex ib = move.apply(b);
    Complex rho = Complex(0, 1) * std::conj(ib) / std::abs(ib);
    HIsometry rot;
    rot.m = {rho, Complex(0, 0), Complex(0, 0), Complex(1, 0)};
    return rot.compose(move);
}

HIsometry HIsometry::reflection(const HGeodesic& mirror) {
    HIsometry frame = frame_geodesic(mirror);
    HIsometry flip; // z -> -conj(z), the reflection across gamma_0
    flip.m = {Complex(-1, 0), Complex(0, 0), Complex(0, 0), Complex(1, 0)};
    flip.reverses = true;
    return frame.inverse().compose(flip).compose(frame);
}

HIsometry HIsometry::translation(const HGeodesic& axis, double tau) {
    HIsometry frame = frame_geodesic(axis);
    double l = std::tanh(tau / 2.0);
    HIsometry shift; // along gamma_0 toward +i
    shift.m = {Complex(1, 0), Complex(0, l), Complex(0, -l), Complex(1, 0)};
    return frame.inverse().compose(shift).compose(frame);
}

HIsometry HIsometry::phi_flow(double theta, double l) {
    if (std::abs(l) >= 1.0) throw BadParameter("phi_flow requires |l| < 1");
    Complex w(std::sin(theta), std::cos(theta));
    HIsometry out;
    out.m = {Complex(1, 0), l * w, l * std::conj(w), Complex(1, 0)};
    return out;
}

double phi_param_to_length(double l) { return std::log((1.0 + l) / (1.0 - l)); }
double phi_length_to_param(double tau) { return std::tanh(tau / 2.0); }

// ---------------------------------------------------------------------------
// H2RIsometry

H2RPoint H2RIsometry::operator()(const H2RPoint& p) const {
    auto [q, t] = apply(p.base, p.t);
    return H2RPoint{q, t};
}

std::pair<HPoint, double> H2RIsometry::apply(const HPoint& p, double t) const {
    double tt = vertical_flip ? vertical_shift - t : vertical_shift + t;
    return {horizontal(p), tt};
}

H2RIsometry H2RIsometry::compose(const H2RIsometry& other) const {
    H2RIsometry out;
    out.horizontal = horizontal.compose(other.horizontal);
    double s1 = vertical_flip ? -1.0 : 1.0;
    out.vertical_shift = s1 * other.vertical_shift + vertical_shift;
    out.vertical_flip = vertical_flip != other.vertical_flip;
    return out;
}

H2RIsometry H2RIsometry::inverse() const {
    H2RIsometry out;
    out.horizontal = horizontal.inverse();
    out.vertical_flip = vertical_flip;
    out.vertical_shift = vertical_flip ? vertical_shift : -vertical_shift;
    return out;
}

H2RIsometry H2RIsometry::identity() { return H2RIsometry(); }

H2RIsometry H2RIsometry::vertical_translation(double h) {
    H2RIsometry out;
    out.vertical_shift = h;
    return out;
}

H2RIsometry H2RIsometry::from_horizontal(const HIsometry& iso) {
    H2RIsometry out;
    out.horizontal = iso;
    return out;
}

H2RIsometry H2RIsometry::rotation_pi_horizontal_geodesic(const HGeodesic& g, double height) {
    H2RIsometry out;
    out.horizontal = HIsometry::reflection(g);
    out.vertical_flip = true;
    out.vertical_shift = 2.0 * height;
    return out;
}

H2RIsometry H2RIsometry::rotation_pi_vertical_line(const HPoint& p) {
    H2RIsometry out;
    out.horizontal = HIsometry::rotation_pi(p);
    return out;
}

H2RIsometry H2RIsometry::mirror_vertical_plane(const HGeodesic& g) {
    H2RIsometry out;
    out.horizontal = HIsometry::reflection(g);
    return out;
}

H2RIsometry H2RIsometry::mirror_horizontal_slice(double t0) {
    H2RIsometry out;
    out.vertical_flip = true;
    out.vertical_shift = 2.0 * t0;
    return out;
}

// ---------------------------------------------------------------------------
// Metric operations

double dist(const HPoint& p, const HPoint& q) {
    Complex zp = disk_coord(p), zq = disk_coord(q);
    double r = std::abs(mobius_sub(zp, zq));
    return 2.0 * std::atanh(std::min(r, 1.0 - 1e-17));
}

double dist_product(const HPoint& p, double tp, const HPoint& q, double tq) {
    double dh = dist(p, q);
    return std::hypot(dh, tq - tp);
}

HGeodesic geodesic_through(const HPoint& p, const HPoint& q) {
    Complex zp = disk_coord(p), zq = disk_coord(q);
    Complex m = mobius_sub(zp, zq);
    if (std::abs(m) < 1e-14) throw CoincidentPoints("geodesic_through: p == q");
    Complex u = m / std::abs(m);
    return HGeodesic(IdealPoint::from_complex(mobius_add(zp, -u)),
                     IdealPoint::from_complex(mobius_add(zp, u)));
}

FermiCoords fermi(const HGeodesic& g, const HPoint& p) {
    HIsometry frame = frame_geodesic(g);
    Complex w = frame.apply(disk_coord(p));
    Complex zeta = cayley_disk_to_halfplane(w);
    FermiCoords fc;
    fc.tau = std::log(std::abs(zeta));
    fc.s = std::asinh(zeta.real() / zeta.imag());
    return fc;
}

HPoint equidistant_point(const HGeodesic& g, double arc_param, double s) {
    HIsometry frame = frame_geodesic(g);
    Complex zeta = std::exp(arc_param) * Complex(std::tanh(s), 1.0 / std::cosh(s));
    Complex w = cayley_halfplane_to_disk(zeta);
    return HPoint::disk(frame.inverse().apply(w));
}

HPoint foot_of_perpendicular(const HPoint& p, const HGeodesic& g) {
    FermiCoords fc = fermi(g, p);
    return equidistant_point(g, fc.tau, 0.0);
}

double dist_to_geodesic(const HPoint& p, const HGeodesic& g) {
    return std::abs(fermi(g, p).s);
}

double angle_at(const HPoint& p, const HPoint& q1, const HPoint& q2) {
    Complex zp = disk_coord(p);
    Complex m1 = mobius_sub(zp, disk_coord(q1));
    Complex m2 = mobius_sub(zp, disk_coord(q2));
    if (std::abs(m1) < 1e-14 || std::abs(m2) < 1e-14)
        throw CoincidentPoints("angle_at: ray endpoint equals the apex");
    Complex r = std::conj(m1 / std::abs(m1)) * (m2 / std::abs(m2));
    return std::atan2(std::abs(r.imag()), r.real());
}

HPoint walk(const HPoint& p, const HPoint& q, double s) {
    Complex zp = disk_coord(p);
    Complex m = mobius_sub(zp, disk_coord(q));
    if (std::abs(m) < 1e-14) throw CoincidentPoints("walk: p == q");
    Complex u = m / std::abs(m);
    return HPoint::disk(mobius_add(zp, std::tanh(s / 2.0) * u));
}

HPoint lerp(const HPoint& p, const HPoint& q, double f) {
    if (f == 0.0) return to_chart(p, Chart::disk);
    if (f == 1.0) return to_chart(q, Chart::disk);
    return walk(p, q, f * dist(p, q));
}

double triangle_area(const HPoint& a, const HPoint& b, const HPoint& c) {
    return M_PI - angle_at(a, b, c) - angle_at(b, c, a) - angle_at(c, a, b);
}

Complex direction_at(const HPoint& p, const HPoint& q) {
    Complex zp = disk_coord(p);
    Complex m = mobius_sub(zp, disk_coord(q));
    if (std::abs(m) < 1e-14) throw CoincidentPoints("direction_at: p == q");
    Complex u = m / std::abs(m);
    // push the frame direction back to p: derivative of w -> (w+p)/(1+conj(p)w) at 0
    // is (1-|p|^2), a positive real factor, so the chart direction is unchanged.
    return u;
}

IdealPoint ray_ideal_endpoint(const HPoint& p, const HPoint& q) {
    Complex zp = disk_coord(p);
    Complex m = mobius_sub(zp, disk_coord(q));
    if (std::abs(m) < 1e-14) throw CoincidentPoints("ray_ideal_endpoint: p == q");
    Complex u = m / std::abs(m);
    return IdealPoint::from_complex(mobius_add(zp, u));
}

} // namespace perimin::hyp
