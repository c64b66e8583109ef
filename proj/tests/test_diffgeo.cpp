#include <doctest.h>

#include <cmath>
#include <tuple>

#include "crpc/diffgeo.hpp"

using namespace crpc;

TEST_CASE("principal curvatures of a stored quadratic are stable") {
    // sphere of radius 2: E = G = 4, L = N = -2 (inward normal), ratio = 1
    FundamentalForms f{4, 0, 4, -2, 0, -2};
    CHECK_THROWS_AS(principal_curvatures(f), Error); // umbilic by construction
    // cylinder-like: one curvature zero-ish triggers nothing, ratio tiny
    FundamentalForms c{1, 0, 1, -1, 0, -1e-6};
    CurvatureReport r = principal_curvatures(c);
    CHECK(r.kappa2 == doctest::Approx(-1.0).epsilon(1e-9));
    CHECK(std::abs(r.kappa1) < 1e-5);
    CHECK(std::abs(r.ratio) <= 1.0);
}

TEST_CASE("fundamental forms reject degenerate first forms") {
    Partials d;
    d.Xv = {1, 0, 0};
    d.Xt = {2, 0, 0}; // parallel: EG - F^2 = 0
    CHECK_THROWS_AS(fundamental_forms(d, Vec3{0, 0, 1}), Error);
}

TEST_CASE("curvature-ratio certificate on the six reference configurations") {
    struct Cfg {
        double k, C;
        BranchTag tag;
    };
    for (Cfg cfg : {Cfg{3.0, 1.0, BranchTag::Full}, {3.0, 0.375, BranchTag::Full},
                    {3.0, 0.01, BranchTag::Full}, {2.0, 1.0, BranchTag::Full},
                    {0.5, 2.0, BranchTag::Minus}, {0.5, 2.0, BranchTag::Plus}}) {
        CAPTURE(cfg.k);
        CAPTURE(cfg.C);
        CertificateReport rep =
            crpc_certificate(cfg.k, cfg.C, 0.5, 16, 16, false, cfg.tag);
        CHECK(rep.max_rel_deviation <= 1e-8);
        CHECK(rep.evaluated > 0);
        // the ratio pair is the expected (a, 1/a)
        auto [lo, hi] = a_pair_from_k(cfg.k);
        CHECK(rep.a_low == lo);
        CHECK(rep.a_high == hi);
    }
}

TEST_CASE("finite-difference-only certificate stays within the relaxed bound") {
    CertificateReport rep = crpc_certificate(3.0, 1.0, 0.5, 12, 12, true);
    CHECK(rep.fd_only);
    CHECK(rep.max_rel_deviation <= 1e-4);
}

TEST_CASE("negative control: a 1% profile tamper breaks the certificate") {
    CertificateReport rep =
        crpc_certificate(3.0, 1.0, 0.5, 12, 12, false, BranchTag::Full, 1.01);
    CHECK(rep.max_rel_deviation > 1e-3);
}

TEST_CASE("Gaussian curvature sign is sign(1 - k)") {
    Tolerances tol;
    for (auto cfg : {std::tuple{3.0, 1.0, BranchTag::Full},
                     {2.0, 1.0, BranchTag::Full},
                     {0.5, 2.0, BranchTag::Minus},
                     {0.5, 2.0, BranchTag::Plus}}) {
        auto [k, C, tag] = cfg;
        HelicalPatch patch{GluedProfile::make({k, C, 0.5}, tag, tol)};
        auto [t_lo, t_hi] = patch.effective_t_range();
        for (double f : {0.1, 0.35, 0.6, 0.9}) {
            double t = t_lo + (t_hi - t_lo) * f;
            Partials d = surface_partials(patch, 0.7, t);
            Vec3 n = d.Xv.cross(d.Xt).normalized();
            CurvatureReport r = principal_curvatures(fundamental_forms(d, n), tol);
            CHECK(r.gauss_sign == (k < 1.0 ? GaussSign::Positive : GaussSign::Negative));
        }
    }
}

TEST_CASE("reduced ODE residual vanishes on the closed form") {
    Tolerances tol;
    for (double s : {1.2, 2.0, 4.0, 9.0}) {
        CHECK(ode_residual(s, 3.0, 1.0, tol) < 1e-12);
        CHECK(ode_residual(s, 2.0, 1.0, tol) < 1e-12);
    }
    for (double s : {0.6, 1.0, 1.5}) CHECK(ode_residual(s, 0.5, 2.0, tol) < 1e-12);
    // tampering the profile breaks the ODE
    CHECK(ode_residual(2.0, 3.0, 1.0, tol, 1.01) > 1e-4);
    CHECK_THROWS_AS(ode_residual(0.5, 3.0, 1.0, tol), Error); // outside the domain
    CHECK_THROWS_AS(ode_residual(2.0, 1.0, 1.0, tol), Error); // k = 1 excluded
}

TEST_CASE("Steiner involution-center diagnostic gives ratio k") {
    Tolerances tol;
    for (double s : {1.2, 2.0, 5.0}) {
        SteinerDiagnostic d = steiner_diagnostic(s, 3.0, 1.0, tol);
        CHECK(d.ratio == doctest::Approx(3.0).epsilon(1e-12));
        CHECK(d.r_s > 0);
        CHECK(d.d_s == doctest::Approx(d.ratio * d.r_s));
    }
    for (double s : {0.6, 1.0, 1.6}) {
        SteinerDiagnostic d = steiner_diagnostic(s, 0.5, 2.0, tol);
        CHECK(d.ratio == doctest::Approx(0.5).epsilon(1e-12));
    }
}

TEST_CASE("residual statistics over a branch") {
    Tolerances tol;
    ResidualStats st = residual_stats(3.0, 1.0, 500, BranchTag::Full, tol);
    CHECK(st.max_ode_residual <= 1e-9);
    CHECK(st.max_steiner_deviation <= 1e-8);
    ResidualStats sp = residual_stats(0.5, 2.0, 500, BranchTag::Plus, tol);
    CHECK(sp.max_ode_residual <= 1e-9);
    CHECK(sp.max_steiner_deviation <= 1e-8);
}

TEST_CASE("axis-point curvature-ratio limits") {
    Tolerances tol;
    // k < 1: the two branch limits approach a = 1/3 and a = 3 for huge C
    CHECK(axis_point_ratio(0.5, 1e6, BranchTag::Minus, tol)
          == doctest::Approx(1.0 / 3.0).epsilon(0.01));
    CHECK(axis_point_ratio(0.5, 1e6, BranchTag::Plus, tol)
          == doctest::Approx(3.0).epsilon(0.01));
    // k > 1: the frame rotates by 90 degrees between the small-C and large-C
    // regimes, swapping the ratio between a and 1/a
    CHECK(axis_point_ratio(3.0, 1e-4, BranchTag::Minus, tol)
          == doctest::Approx(-2.0).epsilon(0.02));
    CHECK(axis_point_ratio(3.0, 1e4, BranchTag::Minus, tol)
          == doctest::Approx(-0.5).epsilon(0.02));
    // Plus requires the second root, absent for k > 1
    CHECK_THROWS_AS(axis_point_ratio(3.0, 1.0, BranchTag::Plus, tol), Error);
}

TEST_CASE("characteristic angle") {
    CHECK(characteristic_angle(1.0 / 3.0)
          == doctest::Approx(std::atan(1.0 / std::sqrt(3.0))).epsilon(1e-15));
    CHECK(characteristic_angle(-3.0) == doctest::Approx(std::atan(std::sqrt(3.0))));
    CHECK_THROWS_AS(characteristic_angle(-1.0), Error);
}

TEST_CASE("path tangent and steepest descent are conjugate") {
    Tolerances tol;
    for (auto cfg : {std::tuple{3.0, 1.0, BranchTag::Full},
                     {0.5, 2.0, BranchTag::Minus}}) {
        auto [k, C, tag] = cfg;
        HelicalPatch patch{GluedProfile::make({k, C, 0.5}, tag, tol)};
        auto [t_lo, t_hi] = patch.effective_t_range();
        for (double f : {0.2, 0.5, 0.8}) {
            double t = t_lo + (t_hi - t_lo) * f;
            Partials d = surface_partials(patch, 1.1, t);
            Vec3 n = d.Xv.cross(d.Xt).normalized();
            FundamentalForms ff = fundamental_forms(d, n);
            CHECK(conjugacy_residual(d, ff) <= 1e-8);
        }
    }
}
