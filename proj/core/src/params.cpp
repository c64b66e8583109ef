#include "crpc/params.hpp"

#include <cmath>
#include <limits>

#include <fmt/core.h>

namespace crpc {

namespace {

void check_a(double a) {
    if (!std::isfinite(a))
        throw DegenerateRatioError(degenerate_case::developable,
                                   "curvature ratio a must be finite");
    if (a == 1.0)
        throw DegenerateRatioError(degenerate_case::sphere_plane,
                                   "a = 1 (k = 0) corresponds to sphere/plane");
    if (a == -1.0)
        throw DegenerateRatioError(degenerate_case::minimal,
                                   "a = -1 (k = inf) corresponds to minimal surfaces");
    if (a == 0.0)
        throw DegenerateRatioError(degenerate_case::developable,
                                   "a = 0 (k = 1) corresponds to developable surfaces");
}

void check_k(double k) {
    if (!std::isfinite(k) || k < 0)
        throw DegenerateRatioError(degenerate_case::minimal, "k must be finite and positive");
    if (k == 0.0)
        throw DegenerateRatioError(degenerate_case::sphere_plane, "k = 0 excluded");
    if (k == 1.0)
        throw DegenerateRatioError(degenerate_case::developable, "k = 1 excluded");
}

} // namespace

double k_from_a(double a) {
    check_a(a);
    // k is invariant under a <-> 1/a, and callers expect that invariance to
    // hold bit for bit even though floating-point reciprocation is not an
    // exact involution. Project a onto the reciprocal map's stable two-cycle
    // {r, 1/r} (reached after one reciprocation under round-to-nearest) and
    // evaluate on the cycle member of magnitude <= 1, so a and 1/a always
    // select the identical representative.
    double r = 1.0 / a;
    double rr = 1.0 / r;
    double b;
    if (!std::isfinite(rr) || rr == 0.0 || std::abs(r) == 1.0)
        b = a; // reciprocation under/overflowed or grazed 1; use a verbatim
    else
        b = std::abs(r) >= 1.0 ? r : rr;
    return std::abs(1.0 - b) / std::abs(1.0 + b);
}

std::pair<double, double> a_pair_from_k(double k) {
    check_k(k);
    return {(1.0 - k) / (1.0 + k), (1.0 + k) / (1.0 - k)};
}

CurvatureSpec CurvatureSpec::from_a(double a) {
    double k = k_from_a(a);
    return {a, k, k < 1.0 ? GaussSign::Positive : GaussSign::Negative};
}

CurvatureSpec CurvatureSpec::from_k(double k) {
    auto [a_low, a_high] = a_pair_from_k(k);
    (void)a_high;
    return {a_low, k, k < 1.0 ? GaussSign::Positive : GaussSign::Negative};
}

double critical_C(double k) {
    if (!(k > 1.0))
        throw Error(errc::invalid_k, "critical_C is defined for k > 1 only");
    return k * std::pow(k - 1.0, (k - 1.0) / 2.0) / std::pow(k + 1.0, (k + 1.0) / 2.0);
}

double cusp_parameter(double k) {
    if (!(k > 0.0 && k < 1.0))
        throw Error(errc::invalid_k, "cusp parameter s_k exists for 0 < k < 1 only");
    return std::sqrt((1.0 + k) / (1.0 - k));
}

double min_C(double k) {
    if (!(k > 0.0 && k < 1.0))
        throw Error(errc::invalid_k, "min_C is defined for 0 < k < 1 only");
    double sk = cusp_parameter(k);
    return (sk * sk + 1.0) / (2.0 * std::pow(sk, k + 1.0));
}

void ShapeParams::validate(const Tolerances& tol) const {
    check_k(k);
    if (!(C > 0.0) || !std::isfinite(C))
        throw Error(errc::invalid_config, "shape constant C must be positive");
    if (pitch == 0.0 || !std::isfinite(pitch))
        throw Error(errc::invalid_config, "pitch must be nonzero");
    if (k < 1.0) {
        double cm = min_C(k);
        if (C - cm <= tol.sliver_rel * cm)
            throw Error(errc::empty_domain,
                        fmt::format("C = {} is at or below C_min(k) = {}", C, cm));
    }
}

double DomainInfo::upper() const {
    return s0_prime ? *s0_prime : std::numeric_limits<double>::infinity();
}

namespace {

double h_eval(double s, double k, double C) {
    return 2.0 * C * std::pow(s, k + 1.0) / (s * s + 1.0);
}

double h_deriv(double s, double k, double C) {
    double s2 = s * s;
    return 2.0 * C * std::pow(s, k) * ((k - 1.0) * s2 + 1.0 + k) / ((s2 + 1.0) * (s2 + 1.0));
}

// Bisection to relative tolerance, then two Newton polish steps.
double refine_root(double lo, double hi, double k, double C, const Tolerances& tol) {
    double flo = h_eval(lo, k, C) - 1.0;
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        if (hi - lo <= tol.root_rel * mid) break;
        double fm = h_eval(mid, k, C) - 1.0;
        if ((fm > 0) == (flo > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    double s = 0.5 * (lo + hi);
    for (int i = 0; i < 2; ++i) {
        double d = h_deriv(s, k, C);
        if (d == 0) break;
        double next = s - (h_eval(s, k, C) - 1.0) / d;
        if (next > 0 && std::isfinite(next)) s = next;
    }
    return s;
}

} // namespace

DomainInfo compute_domain(double k, double C, const Tolerances& tol) {
    ShapeParams{k, C, 0.5}.validate(tol);

    DomainInfo info;
    if (k > 1.0) {
        // h is strictly increasing on s > 0: (k-1)s^2 + k + 1 > 0. One root.
        double lo = 1e-6;
        while (h_eval(lo, k, C) >= 1.0) lo *= 0.5;
        double hi = lo;
        while (h_eval(hi, k, C) < 1.0) hi *= 2.0;
        info.s0 = refine_root(lo, hi, k, C, tol);
    } else {
        // h rises to its max at s_k then decays; two roots straddle s_k.
        double sk = cusp_parameter(k);
        if (h_eval(sk, k, C) <= 1.0)
            throw Error(errc::empty_domain, "I_C is empty: h(s_k) <= 1");
        double lo = std::min(1e-6, sk * 0.5);
        while (h_eval(lo, k, C) >= 1.0) lo *= 0.5;
        info.s0 = refine_root(lo, sk, k, C, tol);
        double hi = sk * 2.0;
        while (h_eval(hi, k, C) > 1.0) hi *= 2.0;
        info.s0_prime = refine_root(sk, hi, k, C, tol);
        info.s_k = sk;
    }
    return info;
}

} // namespace crpc
