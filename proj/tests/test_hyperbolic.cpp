#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "perimin/hyperbolic.hpp"

using namespace perimin;
using namespace perimin::hyp;

namespace {

// Composite Simpson quadrature, used as the independent metric-length oracle.
template <class F>
double simpson(F&& f, double a, double b, int n) {
    if (n % 2) ++n;
    double h = (b - a) / n, s = f(a) + f(b);
    for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
}

// Golden-section minimization on [a, b].
template <class F>
double golden_min(F&& f, double a, double b, double tol) {
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - invphi * (b - a), d = a + invphi * (b - a);
    while (std::abs(b - a) > tol) {
        if (f(c) < f(d)) {
            b = d;
        } else {
            a = c;
        }
        c = b - invphi * (b - a);
        d = a + invphi * (b - a);
    }
    return 0.5 * (a + b);
}

std::mt19937 rng(12345);

HPoint random_point(double rmax = 0.9) {
    std::uniform_real_distribution<double> ur(0.0, rmax), ua(0.0, 2.0 * M_PI);
    double r = std::sqrt(ur(rng) * rmax); // area-ish biased, fine
    double a = ua(rng);
    return HPoint::disk(r * std::cos(a), r * std::sin(a));
}

H2RIsometry random_isometry() {
    std::uniform_real_distribution<double> u01(0.0, 1.0), uang(0.0, 2.0 * M_PI),
        ush(-2.0, 2.0);
    int kind = std::uniform_int_distribution<int>(0, 3)(rng);
    switch (kind) {
        case 0:
            return H2RIsometry::from_horizontal(
                HIsometry::rotation(random_point(0.7), uang(rng)));
        case 1: {
            HGeodesic ax = geodesic_through(random_point(0.7), random_point(0.7));
            return H2RIsometry::rotation_pi_horizontal_geodesic(ax, ush(rng));
        }
        case 2: {
            HGeodesic ax = geodesic_through(random_point(0.7), random_point(0.7));
            H2RIsometry a = H2RIsometry::from_horizontal(HIsometry::translation(ax, u01(rng) * 2.0));
            return a.compose(H2RIsometry::vertical_translation(ush(rng)));
        }
        default: {
            HGeodesic ax = geodesic_through(random_point(0.7), random_point(0.7));
            return H2RIsometry::mirror_vertical_plane(ax);
        }
    }
}

} // namespace

TEST_CASE("distance basics and closed forms") {
    CHECK(dist(origin(), origin()) == doctest::Approx(0.0).epsilon(1e-15));

    for (double mu : {0.1, 0.3, 0.5, 0.9}) {
        double expect = std::log((1.0 + mu) / (1.0 - mu));
        CHECK(std::abs(dist(origin(), HPoint::disk(0, mu)) - expect) < 1e-12);
    }

    // quadrature oracle along the diameter: integral of 2/(1-r^2) dr
    auto metric = [](double r) { return 2.0 / (1.0 - r * r); };
    double oracle = simpson(metric, 0.3, 0.6, 4000);
    CHECK(std::abs(dist(HPoint::disk(0, 0.3), HPoint::disk(0, 0.6)) - oracle) < 1e-12);
    // antipodal-side variant with the product closed form ln((1.6*1.3)/(0.4*0.7))
    double expect2 = std::log((1.6 * 1.3) / (0.4 * 0.7));
    CHECK(std::abs(dist(HPoint::disk(0, -0.3), HPoint::disk(0, 0.6)) - expect2) < 1e-12);

    // symmetry, positivity, triangle inequality on random triples
    for (int i = 0; i < 200; ++i) {
        HPoint a = random_point(), b = random_point(), c = random_point();
        CHECK(dist(a, b) == doctest::Approx(dist(b, a)).epsilon(1e-13));
        CHECK(dist(a, b) >= 0.0);
        CHECK(dist(a, c) <= dist(a, b) + dist(b, c) + 1e-12);
    }
}

TEST_CASE("chart conversion round-trips within 1e-12") {
    for (int i = 0; i < 500; ++i) {
        HPoint p = random_point(0.98);
        HPoint q = to_chart(to_chart(p, Chart::halfplane), Chart::disk);
        CHECK(dist(p, q) < 1e-12);
    }
    // ops agree across charts
    for (int i = 0; i < 200; ++i) {
        HPoint p = random_point(), q = random_point();
        HPoint ph = to_chart(p, Chart::halfplane), qh = to_chart(q, Chart::halfplane);
        CHECK(std::abs(dist(p, q) - dist(ph, qh)) < 1e-10);
    }
}

TEST_CASE("geodesic_through: diameters, orthogonality, circle oracle") {
    HGeodesic g0 = geodesic_through(origin(), HPoint::disk(0, 0.5));
    CHECK(std::abs(g0.e1.unit().imag() - 1.0) < 1e-12); // oriented toward (0,1)
    CHECK(std::abs(g0.e0.unit().imag() + 1.0) < 1e-12);

    for (double mu : {0.2, 0.5, 0.8}) {
        HPoint qmu = HPoint::disk(0, mu);
        HGeodesic gm = g_mu(mu);
        // passes through q_mu and is orthogonal to gamma_0 there
        CHECK(dist_to_geodesic(qmu, gm) < 1e-10);
        HPoint on = equidistant_point(gm, 0.3, 0.0);
        HGeodesic through = geodesic_through(qmu, on);
        HPoint a = equidistant_point(through, 0.2, 0.0);
        double ang = angle_at(qmu, a, HPoint::disk(0, mu + 0.5 * (1 - mu)));
        CHECK(std::abs(ang - M_PI / 2) < 1e-10);
    }

    // orthogonal-circle oracle: solve for the center from the two incidences
    for (int i = 0; i < 100; ++i) {
        HPoint p = random_point(), q = random_point();
        Complex zp = disk_coord(p), zq = disk_coord(q);
        double det = zp.real() * zq.imag() - zp.imag() * zq.real();
        if (std::abs(det) < 1e-4) continue; // collinear with 0: diameter case
        double rp = (1.0 + std::norm(zp)) / 2.0, rq = (1.0 + std::norm(zq)) / 2.0;
        Complex c((rp * zq.imag() - rq * zp.imag()) / det,
                  (zp.real() * rq - zq.real() * rp) / det);
        double r = std::sqrt(std::norm(c) - 1.0);
        HGeodesic g = geodesic_through(p, q);
        CHECK(std::abs(std::abs(g.e0.unit() - c) - r) < 1e-9);
        CHECK(std::abs(std::abs(g.e1.unit() - c) - r) < 1e-9);
    }
}

TEST_CASE("foot_of_perpendicular") {
    HGeodesic g0 = gamma_theta(0.0);
    CHECK(dist(foot_of_perpendicular(HPoint::disk(0, 0.5), g0), HPoint::disk(0, 0.5)) < 1e-12);
    CHECK(dist(foot_of_perpendicular(HPoint::disk(0.4, 0), g0), origin()) < 1e-12);

    // golden-section oracle for a generic point
    HPoint p = HPoint::disk(0.3, 0.3);
    auto fdist = [&](double tau) {
        return dist(p, HPoint::disk(0, std::tanh(tau / 2.0)));
    };
    double tau_star = golden_min(fdist, -3.0, 3.0, 1e-12);
    HPoint oracle = HPoint::disk(0, std::tanh(tau_star / 2.0));
    HPoint foot = foot_of_perpendicular(p, g0);
    CHECK(dist(foot, oracle) < 1e-7);
    // orthogonality of the dropped segment
    CHECK(std::abs(angle_at(foot, p, HPoint::disk(0, 0.9)) - M_PI / 2) < 1e-9);

    for (int i = 0; i < 100; ++i) {
        HPoint a = random_point(), b = random_point();
        HPoint x = random_point();
        HGeodesic g;
        try {
            g = geodesic_through(a, b);
        } catch (const CoincidentPoints&) {
            continue;
        }
        HPoint f = foot_of_perpendicular(x, g);
        // the foot minimizes distance among nearby geodesic points
        FermiCoords fc = fermi(g, f);
        double d0 = dist(x, f);
        for (double eps : {-1e-3, 1e-3}) {
            HPoint other = equidistant_point(g, fc.tau + eps, 0.0);
            CHECK(dist(x, other) >= d0 - 1e-12);
        }
    }
}

TEST_CASE("isometries of H2xR") {
    // T(h)
    H2RIsometry T = H2RIsometry::vertical_translation(1.25);
    auto [p1, t1] = T.apply(HPoint::disk(0.2, -0.1), 0.5);
    CHECK(dist(p1, HPoint::disk(0.2, -0.1)) < 1e-14);
    CHECK(t1 == doctest::Approx(1.75));

    // phi_l(0) = (l sin t, l cos t)
    for (double theta : {0.0, 0.7, M_PI / 3}) {
        for (double l : {0.3, 0.6}) {
            HIsometry phi = HIsometry::phi_flow(theta, l);
            HPoint im = phi(origin());
            CHECK(dist(im, HPoint::disk(l * std::sin(theta), l * std::cos(theta))) < 1e-12);
        }
    }

    // mirror symmetry: reflection across gamma_0 fixes (0, mu), flips (mu, 0);
    // reflection across gamma_{pi/2} = {y=0} maps (0, mu) to (0, -mu)
    double mu = 0.37;
    HIsometry refl0 = HIsometry::reflection(gamma_theta(0.0));
    CHECK(dist(refl0(HPoint::disk(0, mu)), HPoint::disk(0, mu)) < 1e-12);
    CHECK(dist(refl0(HPoint::disk(mu, 0)), HPoint::disk(-mu, 0)) < 1e-12);
    HIsometry reflp = HIsometry::reflection(gamma_theta(M_PI / 2));
    CHECK(dist(reflp(HPoint::disk(0, mu)), HPoint::disk(0, -mu)) < 1e-12);

    // rotation by pi about a horizontal geodesic at height t0 maps t to 2 t0 - t
    HGeodesic ax = g_mu(0.3);
    H2RIsometry rot = H2RIsometry::rotation_pi_horizontal_geodesic(ax, 0.75);
    auto [q2, t2] = rot.apply(HPoint::disk(0, 0.3), 0.2);
    CHECK(t2 == doctest::Approx(2 * 0.75 - 0.2));
    CHECK(dist(q2, HPoint::disk(0, 0.3)) < 1e-12); // axis point fixed

    // product-distance preservation, 1000 random cases
    std::uniform_real_distribution<double> uh(-2.0, 2.0);
    for (int i = 0; i < 1000; ++i) {
        H2RIsometry iso = random_isometry();
        HPoint a = random_point(), b = random_point();
        double ta = uh(rng), tb = uh(rng);
        auto [ia, ta2] = iso.apply(a, ta);
        auto [ib, tb2] = iso.apply(b, tb);
        CHECK(std::abs(dist_product(ia, ta2, ib, tb2) - dist_product(a, ta, b, tb)) < 1e-10);
    }

    // flow composition: phi_a then phi_b equals one translation, lengths add
    HGeodesic axis = gamma_theta(0.4);
    double tau_a = 0.8, tau_b = 1.1;
    HIsometry comp = HIsometry::translation(axis, tau_b).compose(HIsometry::translation(axis, tau_a));
    HIsometry single = HIsometry::translation(axis, tau_a + tau_b);
    for (int i = 0; i < 50; ++i) {
        HPoint p = random_point();
        CHECK(dist(comp(p), single(p)) < 1e-11);
    }
    // and the l-parameterization converts to additive lengths
    double l1 = 0.3, l2 = 0.5;
    HIsometry c2 = HIsometry::phi_flow(0.0, l2).compose(HIsometry::phi_flow(0.0, l1));
    double tau_sum = phi_param_to_length(l1) + phi_param_to_length(l2);
    HIsometry s2 = HIsometry::phi_flow(0.0, phi_length_to_param(tau_sum));
    for (int i = 0; i < 50; ++i) {
        HPoint p = random_point();
        CHECK(dist(c2(p), s2(p)) < 1e-11);
    }
}

TEST_CASE("equidistant points") {
    HGeodesic g0 = gamma_theta(0.0);
    CHECK(dist_to_geodesic(equidistant_point(g0, 0.7, 0.0), g0) < 1e-12);

    std::uniform_real_distribution<double> utau(-2.0, 2.0);
    for (int i = 0; i < 20; ++i) {
        double tau = utau(rng);
        double s = 0.45;
        HPoint p = equidistant_point(g0, tau, s);
        CHECK(std::abs(dist_to_geodesic(p, g0) - s) < 1e-10);
        // projection oracle: the foot sits at arc parameter tau
        HPoint f = foot_of_perpendicular(p, g0);
        CHECK(std::abs(fermi(g0, f).tau - tau) < 1e-10);
        CHECK(std::abs(dist(p, f) - s) < 1e-10);
    }

    // the locus of points at distance h/2 used by the period solver
    double h = 1.8;
    for (double tau : {-1.0, 0.0, 0.5, 1.5}) {
        HPoint p = equidistant_point(g0, tau, h / 2);
        CHECK(std::abs(dist_to_geodesic(p, g0) - h / 2) < 1e-10);
        CHECK(p.u > 0.0); // s > 0 lands in {x > 0}
    }
}

TEST_CASE("angles and Gauss-Bonnet") {
    CHECK(std::abs(angle_at(origin(), HPoint::disk(0.5, 0), HPoint::disk(0, 0.5)) - M_PI / 2) <
          1e-12);

    int count = 0;
    for (int i = 0; i < 1000; ++i) {
        HPoint a = random_point(), b = random_point(), c = random_point();
        try {
            double area = triangle_area(a, b, c);
            double sum = angle_at(a, b, c) + angle_at(b, c, a) + angle_at(c, a, b);
            CHECK(sum < M_PI + 1e-12);
            CHECK(std::abs((M_PI - sum) - area) < 1e-8);
            ++count;
        } catch (const CoincidentPoints&) {
        }
    }
    CHECK(count > 900);
}

TEST_CASE("isometry invariance of dist (1000 samples)") {
    for (int i = 0; i < 1000; ++i) {
        H2RIsometry iso = random_isometry();
        HPoint p = random_point(), q = random_point();
        CHECK(std::abs(dist(iso.horizontal(p), iso.horizontal(q)) - dist(p, q)) < 1e-10);
    }
}

TEST_CASE("fermi coordinates invert equidistant_point on generic axes") {
    for (int i = 0; i < 100; ++i) {
        HGeodesic g;
        try {
            g = geodesic_through(random_point(), random_point());
        } catch (const CoincidentPoints&) {
            continue;
        }
        std::uniform_real_distribution<double> u(-1.5, 1.5);
        double tau = u(rng), s = u(rng);
        HPoint p = equidistant_point(g, tau, s);
        FermiCoords fc = fermi(g, p);
        CHECK(std::abs(fc.tau - tau) < 1e-9);
        CHECK(std::abs(fc.s - s) < 1e-9);
    }
}

TEST_CASE("guards") {
    CHECK_THROWS_AS(dist(HPoint::disk(0.9999999999, 0), origin()), OutOfDomain);
    CHECK_THROWS_AS(geodesic_through(origin(), origin()), CoincidentPoints);
    CHECK_THROWS_AS(angle_at(origin(), origin(), HPoint::disk(0.1, 0)), CoincidentPoints);
    CHECK_FALSE(HPoint(Chart::halfplane, 0.0, -1.0).valid());
    CHECK_THROWS_AS(disk_coord(HPoint::halfplane(0.0, -1.0)), OutOfDomain);
}
