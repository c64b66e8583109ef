#include <doctest.h>

#include <cmath>
#include <random>

#include "crpc/planar.hpp"
#include "crpc/surface.hpp"

using namespace crpc;

TEST_CASE("plane section basics") {
    Tolerances tol;
    double phi = M_PI / 2.0;
    PlanarProfile pp = plane_section(3.0, 1.0, 0.5, phi, 801, std::nullopt, tol);
    CHECK(pp.plane_angle == phi);
    CHECK(pp.points.size() == 801);

    // symmetric about the glue point: z odd, u even in t
    const PlanarSample& mid = pp.points[400];
    CHECK(std::abs(mid.t) < 1e-12);
    CHECK(std::abs(mid.z) < 1e-9);
    for (int i : {0, 100, 250}) {
        const PlanarSample& a = pp.points[i];
        const PlanarSample& b = pp.points[800 - i];
        CHECK(a.s == doctest::Approx(b.s).epsilon(1e-10));
        CHECK(a.u == doctest::Approx(b.u).epsilon(1e-8));
        CHECK(a.z == doctest::Approx(-b.z).epsilon(1e-8));
    }

    // pieces switch where the top view crosses the axis plane (g = 0),
    // once per arm for C > C_k
    CHECK(pp.piece_boundaries.size() == 2);
    CHECK(pp.points.front().piece == 0);
    CHECK(pp.points.back().piece == 2);
    GluedProfile prof = GluedProfile::make({3.0, 1.0, 0.5}, BranchTag::Full, tol);
    for (double sb : pp.piece_boundaries) {
        // boundary s sits at the C-independent zero of g: s^2 = (k+1)/(k-1)
        CHECK(sb == doctest::Approx(std::sqrt(2.0)).epsilon(0.05));
    }
}

TEST_CASE("every section point lies on the surface") {
    Tolerances tol;
    double phi = 0.7;
    double k = 3.0, C = 1.0, pitch = 0.5;
    PlanarProfile pp = plane_section(k, C, pitch, phi, 201, std::nullopt, tol);
    HelicalPatch patch{GluedProfile::make({k, C, pitch}, BranchTag::Full, tol)};
    patch.pitch = pitch;
    for (int i : {10, 60, 100, 140, 190}) {
        const PlanarSample& p = pp.points[i];
        Vec3 in_plane{p.u * std::cos(phi), p.u * std::sin(phi), p.z};
        // recover the screw angle from the height difference, then re-evaluate
        double v = (p.z / (2.0 * pitch) - patch.profile.point(p.t).z) * 2.0;
        Vec3 on_surface = evaluate_surface(patch, v, p.t);
        CHECK((on_surface - in_plane).norm() < 1e-8 * (1.0 + in_plane.norm()));
    }
}

TEST_CASE("sections at plane angles phi and phi + pi describe the same plane") {
    Tolerances tol;
    PlanarProfile a = plane_section(3.0, 1.0, 0.5, 0.4, 101, std::nullopt, tol);
    PlanarProfile b = plane_section(3.0, 1.0, 0.5, 0.4 + M_PI, 101, std::nullopt, tol);
    for (size_t i = 0; i < a.points.size(); i += 10) {
        CHECK(a.points[i].u == doctest::Approx(-b.points[i].u).epsilon(1e-10));
        CHECK(a.points[i].z == doctest::Approx(b.points[i].z).epsilon(1e-8));
    }
}

TEST_CASE("positive-curvature sections keep a single piece") {
    Tolerances tol;
    PlanarProfile minus = plane_section(0.5, 2.0, 0.5, M_PI / 2.0, 101,
                                        BranchTag::Minus, tol);
    CHECK(minus.piece_boundaries.empty());
    for (const PlanarSample& p : minus.points) CHECK(p.piece == 0);
    // one-sided k > 1 shape below the critical constant likewise
    PlanarProfile one = plane_section(3.0, 0.01, 0.5, M_PI / 2.0, 101,
                                      std::nullopt, tol);
    CHECK(one.piece_boundaries.empty());
}

TEST_CASE("shape classification against the critical constant") {
    CHECK(classify_shape(3.0, 0.125).cls == ShapeClass::OneSided);
    CHECK(classify_shape(3.0, 0.375).cls == ShapeClass::AxisTouching);
    CHECK(classify_shape(3.0, 10.0).cls == ShapeClass::SelfIntersecting);
    CHECK(classify_shape(3.0, 1.0).C_k == 0.375);
    CHECK_THROWS_AS(classify_shape(0.5, 2.0), Error);
    try {
        classify_shape(0.5, 2.0);
    } catch (const Error& e) {
        CHECK(e.code() == errc::invalid_k);
    }
}

TEST_CASE("self-intersection point") {
    Tolerances tol;
    SUBCASE("present and matching the frozen location for k=3, C=1") {
        auto si = self_intersection(3.0, 1.0, 0.5, tol);
        REQUIRE(si);
        CHECK(si->s_preimage == doctest::Approx(4.0835269571550310488).epsilon(1e-9));
        CHECK(si->y == doctest::Approx(-4.3478143394347084672).epsilon(1e-9));
        CHECK(std::abs(si->z) < 1e-9);
    }
    SUBCASE("the two preimages re-evaluate to the same point") {
        double k = 3.0, C = 1.0, pitch = 0.5;
        auto si = self_intersection(k, C, pitch, tol);
        REQUIRE(si);
        GluedProfile prof = GluedProfile::make({k, C, pitch}, BranchTag::Full, tol);
        double s = si->s_preimage;
        double t = t_of_s(s, k, C, tol), g = g_of_s(s, k, C);
        double z = prof.z_at_s(s);
        double theta = std::atan2(g, t / 2.0);
        double r = std::hypot(t / 2.0, g);
        // branch X0 screwed by -pi/2 - theta, branch X1 by pi/2 - theta + pi
        double za = 2.0 * pitch * (z + 0.5 * (-M_PI / 2.0 - theta));
        double zb = 2.0 * pitch * (-z + 0.5 * (theta - 3.0 * M_PI / 2.0) + M_PI);
        double y = -2.0 * pitch * r;
        CHECK(std::abs(za - si->z) <= 1e-8);
        CHECK(std::abs(zb - si->z) <= 1e-8);
        CHECK(std::abs(y - si->y) <= 1e-8);
    }
    SUBCASE("absent for one-sided shapes") {
        CHECK(!self_intersection(3.0, 0.01, 0.5, tol));
        CHECK(!self_intersection(3.0, 0.375, 0.5, tol));
    }
}

TEST_CASE("minimum of g over the domain agrees with the class") {
    Tolerances tol;
    std::mt19937 rng(424242);
    std::uniform_real_distribution<double> kd(1.05, 10.0);
    std::uniform_real_distribution<double> ld(-2.0, 2.0);
    int done = 0;
    while (done < 20) {
        double k = kd(rng);
        double lg = ld(rng);
        if (std::abs(lg) < 0.1) continue; // stay clear of the critical band
        double C = critical_C(k) * std::pow(10.0, lg);
        ShapeClass cls = classify_shape(k, C, tol).cls;
        DomainInfo dom = compute_domain(k, C, tol);
        double min_g = g_of_s(dom.s0, k, C);
        for (int j = 1; j <= 400; ++j) {
            double u = double(j) / 400.0;
            double s = dom.s0 + (4.0 * dom.s0 + 10.0) * u * u;
            min_g = std::min(min_g, g_of_s(s, k, C));
        }
        CAPTURE(k);
        CAPTURE(C);
        if (cls == ShapeClass::SelfIntersecting)
            CHECK(min_g < 0.0);
        else
            CHECK(min_g > 0.0);
        ++done;
    }
}
