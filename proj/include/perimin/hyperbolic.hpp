#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <utility>

#include "perimin/errors.hpp"

// Hyperbolic geometry kernel for the Poincare disk model of H^2 and the
// product H^2 x R.  The disk chart is canonical: every cross-module
// coordinate is a disk coordinate.  The half-plane chart is provided because
// the closed-form comparison surfaces are naturally written there.
//
// Conventions:
//   * disk chart: (x, y) with x^2 + y^2 < 1, metric factor 2 / (1 - |z|^2);
//   * half-plane chart: (x1, x2) with x2 > 0, metric factor 1 / x2;
//   * gamma_theta is the diameter {-x cos t + y sin t = 0}, oriented from
//     -(sin t, cos t) to (sin t, cos t);
//   * points of the ideal circle are a separate type (IdealPoint).

namespace perimin::hyp {

using Complex = std::complex<double>;

inline constexpr double kIdealGuard = 1e-9; // points this close to |z|=1 are rejected

enum class Chart { disk, halfplane };

// ---------------------------------------------------------------------------
// Points

struct HPoint {
    Chart chart = Chart::disk;
    double u = 0.0;
    double v = 0.0;

    HPoint() = default;
    HPoint(Chart c, double a, double b) : chart(c), u(a), v(b) {}

    static HPoint disk(double x, double y) { return HPoint(Chart::disk, x, y); }
    static HPoint disk(Complex z) { return HPoint(Chart::disk, z.real(), z.imag()); }
    static HPoint halfplane(double x1, double x2) { return HPoint(Chart::halfplane, x1, x2); }

    bool valid() const;
};

struct IdealPoint {
    double angle = 0.0; // position on the unit circle, in [0, 2*pi)

    IdealPoint() = default;
    explicit IdealPoint(double a);
    static IdealPoint from_complex(Complex z);

    Complex unit() const { return Complex(std::cos(angle), std::sin(angle)); }
};

HPoint origin();

// Disk coordinate of a point in any chart (validates the point).
Complex disk_coord(const HPoint& p);
// Half-plane coordinate (x1, x2) of a point in any chart.
Complex halfplane_coord(const HPoint& p);
HPoint to_chart(const HPoint& p, Chart target);

// Cayley maps used for the chart conversion.  halfplane -> disk sends the
// geodesic {x1 = 0} onto gamma_0 with (0,1) -> 0 and {x1 > 0} -> {x > 0}.
Complex cayley_halfplane_to_disk(Complex zeta);
Complex cayley_disk_to_halfplane(Complex w);

// Conformal factor of the chart metric at p: 2/(1-|z|^2) resp. 1/x2.
double conformal_factor(const HPoint& p);

// ---------------------------------------------------------------------------
// Geodesics, equidistants, sectors

struct HGeodesic {
    // Oriented from e0 to e1; endpoints must be distinct.
    IdealPoint e0, e1;

    HGeodesic() = default;
    HGeodesic(IdealPoint a, IdealPoint b);

    HGeodesic reversed() const { return HGeodesic(e1, e0); }
};

// gamma_theta = {-x cos t + y sin t = 0}, oriented toward (sin t, cos t).
HGeodesic gamma_theta(double theta);
// g(mu): the complete geodesic orthogonal to gamma_0 at q_mu = (0, mu),
// oriented toward {x > 0}.
HGeodesic g_mu(double mu);

struct Equidistant {
    HGeodesic base;
    double signed_distance = 0.0; // hyperbolic length units, >0 on the left of the orientation? see equidistant_point
};

struct AngularSector {
    double theta = 0.0; // apex is always the origin; sector {(r sin u, r cos u), u in [0, theta]}
};

bool in_sector(const HPoint& p, const AngularSector& s, double slack = 0.0);
// Angular coordinate u of p in the (sin u, cos u) parameterization, in (-pi, pi].
double sector_angle(const HPoint& p);

// ---------------------------------------------------------------------------
// Isometries of H^2 (Mobius representatives)

struct HIsometry {
    // z -> (a z + b)/(c z + d), applied to conj(z) first when reverses is set.
    std::array<Complex, 4> m{Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(1, 0)};
    bool reverses = false;

    Complex apply(Complex z) const;
    HPoint operator()(const HPoint& p) const;
    IdealPoint operator()(const IdealPoint& q) const;
    HGeodesic operator()(const HGeodesic& g) const;

    HIsometry compose(const HIsometry& other) const; // this after other
    HIsometry inverse() const;
    // Scale the matrix to unit determinant (sign of the root is immaterial).
    HIsometry normalized() const;

    static HIsometry identity();
    static HIsometry rotation(const HPoint& center, double angle);
    static HIsometry rotation_pi(const HPoint& center) { return rotation(center, M_PI); }
    static HIsometry reflection(const HGeodesic& mirror);
    // Hyperbolic translation along the oriented geodesic by hyperbolic length tau.
    static HIsometry translation(const HGeodesic& axis, double tau);
    // The paper's flow phi_l of Y_theta: phi_l(0) = (l sin theta, l cos theta).
    static HIsometry phi_flow(double theta, double l);
};

// Displacement conversion for phi_l: the Euclidean parameter l corresponds to
// hyperbolic displacement tau = ln((1+l)/(1-l)); phi is not unit speed in l.
double phi_param_to_length(double l);
double phi_length_to_param(double tau);

// Mobius transform carrying the oriented geodesic g onto gamma_0 (e0 -> -i,
// e1 -> +i) with the point of g nearest the origin going to 0.
HIsometry frame_geodesic(const HGeodesic& g);

// ---------------------------------------------------------------------------
// Isometries of H^2 x R

struct H2RPoint {
    HPoint base;
    double t = 0.0;
};

struct H2RIsometry {
    HIsometry horizontal;
    double vertical_shift = 0.0;
    bool vertical_flip = false; // t -> shift - t when set, else t -> t + shift

    H2RPoint operator()(const H2RPoint& p) const;
    std::pair<HPoint, double> apply(const HPoint& p, double t) const;
    H2RIsometry compose(const H2RIsometry& other) const; // this after other
    H2RIsometry inverse() const;

    static H2RIsometry identity();
    static H2RIsometry vertical_translation(double h); // T(h)
    static H2RIsometry from_horizontal(const HIsometry& iso);
    static H2RIsometry rotation_pi_horizontal_geodesic(const HGeodesic& g, double height);
    static H2RIsometry rotation_pi_vertical_line(const HPoint& p);
    static H2RIsometry mirror_vertical_plane(const HGeodesic& g);
    static H2RIsometry mirror_horizontal_slice(double t0);
};

// ---------------------------------------------------------------------------
// Metric operations

double dist(const HPoint& p, const HPoint& q);
double dist_product(const HPoint& p, double tp, const HPoint& q, double tq);

HGeodesic geodesic_through(const HPoint& p, const HPoint& q);

// Signed Fermi coordinates of p with respect to the oriented geodesic g:
// tau = arclength position of the foot along g (0 at the point of g nearest
// the origin of the frame), s = signed distance (s > 0 on the side lying to
// the right of the orientation; for gamma_0 that is {x > 0}).
struct FermiCoords {
    double tau = 0.0;
    double s = 0.0;
};
FermiCoords fermi(const HGeodesic& g, const HPoint& p);

// The point with Fermi coordinates (arc_param, s); s = 0 gives the foot.
HPoint equidistant_point(const HGeodesic& g, double arc_param, double s);

HPoint foot_of_perpendicular(const HPoint& p, const HGeodesic& g);
double dist_to_geodesic(const HPoint& p, const HGeodesic& g);

// Interior angle at p between the geodesic rays p->q1 and p->q2, in [0, pi].
double angle_at(const HPoint& p, const HPoint& q1, const HPoint& q2);

// Point reached from p after hyperbolic length s along the ray p->q.
HPoint walk(const HPoint& p, const HPoint& q, double s);
// Point at parameter fraction f in [0,1] along the geodesic segment p->q.
HPoint lerp(const HPoint& p, const HPoint& q, double f);

// Area of the geodesic triangle (angle deficit).
double triangle_area(const HPoint& a, const HPoint& b, const HPoint& c);

// Unit (hyperbolic) tangent direction at p of the ray p->q, as a chart vector
// normalized to Euclidean length 1 (conformality makes angles chart angles).
Complex direction_at(const HPoint& p, const HPoint& q);

// Ideal endpoint hit by the ray from p through q.
IdealPoint ray_ideal_endpoint(const HPoint& p, const HPoint& q);

} // namespace perimin::hyp
