#include <doctest.h>

#include <cmath>
#include <random>

#include "crpc/params.hpp"
#include "crpc/profile.hpp"

using namespace crpc;

TEST_CASE("k_from_a basics") {
    CHECK(k_from_a(3.0) == 0.5);
    CHECK(k_from_a(1.0 / 3.0) == 0.5);
    CHECK(k_from_a(-3.0) == 2.0);
    CHECK(k_from_a(-1.0 / 3.0) == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("k is agnostic to a <-> 1/a, bit for bit") {
    std::mt19937 rng(20240817);
    std::uniform_real_distribution<double> mag(-3.0, 3.0);
    for (int i = 0; i < 200; ++i) {
        double a = std::copysign(std::pow(10.0, mag(rng)), i % 2 ? 1.0 : -1.0);
        if (a == 1.0 || a == -1.0) continue;
        CHECK(k_from_a(a) == k_from_a(1.0 / a));
    }
}

TEST_CASE("degenerate ratios are rejected with the right case") {
    CHECK_THROWS_AS(k_from_a(-1.0), DegenerateRatioError);
    CHECK_THROWS_AS(k_from_a(1.0), DegenerateRatioError);
    CHECK_THROWS_AS(k_from_a(0.0), DegenerateRatioError);
    try {
        k_from_a(-1.0);
    } catch (const DegenerateRatioError& e) {
        CHECK(e.excluded_case() == degenerate_case::minimal);
    }
    try {
        k_from_a(1.0);
    } catch (const DegenerateRatioError& e) {
        CHECK(e.excluded_case() == degenerate_case::sphere_plane);
    }
    try {
        k_from_a(0.0);
    } catch (const DegenerateRatioError& e) {
        CHECK(e.excluded_case() == degenerate_case::developable);
    }
}

TEST_CASE("a_pair_from_k inverts k_from_a") {
    auto [lo, hi] = a_pair_from_k(0.5);
    CHECK(lo == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(hi == doctest::Approx(3.0).epsilon(1e-15));
    auto [lo2, hi2] = a_pair_from_k(2.0);
    CHECK(std::min(std::abs(lo2), std::abs(hi2)) == doctest::Approx(1.0 / 3.0));
    CHECK(lo2 < 0);
    CHECK(hi2 < 0);

    std::mt19937 rng(7);
    std::uniform_real_distribution<double> dist(0.01, 8.0);
    for (int i = 0; i < 100; ++i) {
        double k = dist(rng);
        if (std::abs(k - 1.0) < 1e-3) continue;
        auto [a1, a2] = a_pair_from_k(k);
        CHECK(k_from_a(a1) == doctest::Approx(k).epsilon(1e-13));
        CHECK(k_from_a(a2) == doctest::Approx(k).epsilon(1e-13));
        CHECK(a1 * a2 == doctest::Approx(1.0).epsilon(1e-13));
    }

    CHECK_THROWS_AS(a_pair_from_k(1.0), Error);
    CHECK_THROWS_AS(a_pair_from_k(0.0), Error);
    CHECK_THROWS_AS(a_pair_from_k(-2.0), Error);
}

TEST_CASE("critical C") {
    // k (k-1)^{(k-1)/2} / (k+1)^{(k+1)/2}; at k = 3 this is 3*2/16 = 3/8 exactly
    CHECK(critical_C(3.0) == 0.375);
    CHECK(critical_C(2.0) == doctest::Approx(2.0 / std::pow(3.0, 1.5)).epsilon(1e-14));
    // continuous limit 1/2 as k -> 1+
    CHECK(critical_C(1.0 + 1e-7) == doctest::Approx(0.5).epsilon(1e-5));
    CHECK_THROWS_AS(critical_C(0.5), Error);
    // monotone decreasing in k
    double prev = critical_C(1.001);
    for (double k = 1.1; k < 12.0; k += 0.25) {
        double c = critical_C(k);
        CHECK(c < prev);
        prev = c;
    }
}

TEST_CASE("min C for k < 1") {
    // closed forms of h(s_k) = 1
    CHECK(min_C(0.5) == doctest::Approx(0.87738267530166164055).epsilon(1e-14));
    CHECK(min_C(0.6) == doctest::Approx(0.82469244423305891211).epsilon(1e-14));
    CHECK_THROWS_AS(min_C(3.0), Error);
    // h attains its max over s > 0 at s_k, so C slightly above min_C opens a domain
    double k = 0.7, cm = min_C(k);
    CHECK_NOTHROW(compute_domain(k, cm * 1.001));
    CHECK_THROWS_AS(compute_domain(k, cm * 0.5), Error);
}

TEST_CASE("cusp parameter") {
    CHECK(cusp_parameter(0.5) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
    CHECK(cusp_parameter(0.6) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK_THROWS_AS(cusp_parameter(2.0), Error);
}

TEST_CASE("domain roots: golden values") {
    Tolerances tol;
    SUBCASE("k=2, C=1 has s0 = 1") {
        DomainInfo d = compute_domain(2.0, 1.0, tol);
        CHECK(d.s0 == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(!d.s0_prime);
        CHECK(!d.s_k);
        CHECK(std::isinf(d.upper()));
    }
    SUBCASE("k=3, C=3/8 has s0 = sqrt(2)") {
        DomainInfo d = compute_domain(3.0, 0.375, tol);
        CHECK(d.s0 == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    }
    SUBCASE("k=1/2, C=2 has both roots around s_k = sqrt(3)") {
        DomainInfo d = compute_domain(0.5, 2.0, tol);
        CHECK(d.s0 == doctest::Approx(0.44840640832948274984).epsilon(1e-10));
        REQUIRE(d.s0_prime);
        CHECK(*d.s0_prime == doctest::Approx(15.873755861724316671).epsilon(1e-10));
        REQUIRE(d.s_k);
        CHECK(*d.s_k == doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));
        CHECK(d.contains(1.0));
        CHECK(!d.contains(0.1));
        CHECK(!d.contains(20.0));
    }
    SUBCASE("roots satisfy h = 1") {
        for (auto [k, C] : {std::pair{3.0, 1.0}, {3.0, 0.01}, {2.0, 1.0}, {0.5, 2.0}}) {
            DomainInfo d = compute_domain(k, C, tol);
            CHECK(std::abs(h_of_s(d.s0, k, C) - 1.0) < 1e-11);
            if (d.s0_prime) CHECK(std::abs(h_of_s(*d.s0_prime, k, C) - 1.0) < 1e-11);
        }
    }
}

TEST_CASE("empty domains are reported") {
    CHECK_THROWS_AS(compute_domain(0.5, 0.5, Tolerances{}), Error);
    try {
        compute_domain(0.5, 0.5);
    } catch (const Error& e) {
        CHECK(e.code() == errc::empty_domain);
    }
}

TEST_CASE("ShapeParams validation") {
    CHECK_NOTHROW((ShapeParams{3.0, 1.0}.validate()));
    CHECK_THROWS_AS((ShapeParams{3.0, -1.0}.validate()), Error);
    CHECK_THROWS_AS((ShapeParams{3.0, 0.0}.validate()), Error);
    CHECK_THROWS_AS((ShapeParams{1.0, 1.0}.validate()), Error);
    CHECK_THROWS_AS((ShapeParams{-2.0, 1.0}.validate()), Error);
    CHECK_THROWS_AS((ShapeParams{0.5, 0.5}.validate()), Error); // below min_C
}

TEST_CASE("CurvatureSpec round trip") {
    CurvatureSpec s = CurvatureSpec::from_a(-3.0);
    CHECK(s.k == 2.0);
    CHECK(s.gauss_sign == GaussSign::Negative);
    CurvatureSpec p = CurvatureSpec::from_k(0.5);
    CHECK(std::abs(p.a) < 1.0);
    CHECK(p.gauss_sign == GaussSign::Positive);
    CHECK(k_from_a(p.a) == doctest::Approx(0.5).epsilon(1e-14));
}
