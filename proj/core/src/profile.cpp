#include "crpc/profile.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <fmt/core.h>

namespace crpc {

namespace {

void require_positive_s(double s) {
    if (!(s > 0.0))
        throw Error(errc::non_positive_s, fmt::format("s = {} must be positive", s));
}

// g(s) = B4(s) sqrt(h),   B4 = ((k-1)s^2 - (k+1))/(4ks)
// g'(s) = h'(s) B8(s)/sqrt(h), B8 = ((k+1)s^2 - (k-1))/(8ks)
double b4(double s, double k) { return ((k - 1.0) * s * s - (k + 1.0)) / (4.0 * k * s); }
double b8(double s, double k) { return ((k + 1.0) * s * s - (k - 1.0)) / (8.0 * k * s); }
double b8_prime(double s, double k) { return ((k + 1.0) + (k - 1.0) / (s * s)) / (8.0 * k); }

} // namespace

double h_of_s(double s, double k, double C) {
    require_positive_s(s);
    return 2.0 * C * std::pow(s, k + 1.0) / (s * s + 1.0);
}

double h_prime_of_s(double s, double k, double C) {
    require_positive_s(s);
    double s2 = s * s;
    return 2.0 * C * std::pow(s, k) * ((k - 1.0) * s2 + 1.0 + k) / ((s2 + 1.0) * (s2 + 1.0));
}

double h_second_of_s(double s, double k, double C) {
    require_positive_s(s);
    double s2 = s * s;
    double num = ((k - 1.0) * (k + 2.0) * s2 + k * (k + 1.0)) * (s2 + 1.0)
                 - 4.0 * s2 * ((k - 1.0) * s2 + k + 1.0);
    return 2.0 * C * std::pow(s, k - 1.0) * num / std::pow(s2 + 1.0, 3);
}

double t_of_s(double s, double k, double C, const Tolerances& tol) {
    double hm1 = h_of_s(s, k, C) - 1.0;
    if (hm1 < 0.0) {
        if (hm1 > -100.0 * tol.root_rel) return 0.0;
        throw Error(errc::outside_domain,
                    fmt::format("h(s) = {} < 1 at s = {}", hm1 + 1.0, s));
    }
    return std::sqrt(hm1);
}

double g_of_s(double s, double k, double C) {
    return b4(s, k) * std::sqrt(h_of_s(s, k, C));
}

double g_prime_of_s(double s, double k, double C) {
    return h_prime_of_s(s, k, C) * b8(s, k) / std::sqrt(h_of_s(s, k, C));
}

double g_second_of_s(double s, double k, double C) {
    double h = h_of_s(s, k, C);
    double hp = h_prime_of_s(s, k, C);
    double hpp = h_second_of_s(s, k, C);
    double sq = std::sqrt(h);
    return hpp * b8(s, k) / sq + hp * b8_prime(s, k) / sq
           - hp * hp * b8(s, k) / (2.0 * h * sq);
}

double q0_of_s(double s, double k, double C) {
    // 2 g'/h' with the common h' factor cancelled: regular at s = s_k
    return 2.0 * b8(s, k) / std::sqrt(h_of_s(s, k, C));
}

double q0_prime_of_s(double s, double k, double C) {
    double h = h_of_s(s, k, C);
    double sq = std::sqrt(h);
    return 2.0 * b8_prime(s, k) / sq - b8(s, k) * h_prime_of_s(s, k, C) / (h * sq);
}

double branch_discriminant(double t, double g, double k) {
    return 16.0 * k * k * g * g + 4.0 * (k * k - 1.0) * (1.0 + t * t);
}

namespace {

using quad31 = boost::math::quadrature::gauss_kronrod<double, 31>;

void check_quad_error(double err, double val, const Tolerances& tol, const char* form,
                      double a, double b) {
    if (!(err <= std::max(tol.quad_abs, 1e-9 * std::abs(val))))
        throw Error(errc::quadrature_failure,
                    fmt::format("z-quadrature ({}, [{}, {}]) error estimate {} exceeds "
                                "tolerance",
                                form, a, b, err));
}

// Integral of g'/t in s directly; smooth only when t is bounded away from 0
// on [a, b] (used for the part of a piece adjacent to s_k, where h' -> 0 but
// t stays positive).
double integrate_s_form(double a, double b, double k, double C, const Tolerances& tol) {
    if (a == b) return 0.0;
    auto f = [&](double s) { return g_prime_of_s(s, k, C) / t_of_s(s, k, C, tol); };
    double err = 0;
    double val = quad31::integrate(f, a, b, 15, 1e-10, &err);
    check_quad_error(err, val, tol, "s-form", a, b);
    return val;
}

// Same integral with t as the variable: the integrand becomes q0(s(t)) =
// 2g'/h', smooth across t = 0 roots (ds = 2t/h' dt absorbs the 1/sqrt
// endpoint singularity); s(t) recovered per node by bisection. Requires h
// strictly monotone on [a, b], so it must stay clear of s_k.
double integrate_t_form(double a, double b, double k, double C, const Tolerances& tol) {
    if (a == b) return 0.0;
    double ha = h_of_s(a, k, C), hb = h_of_s(b, k, C);
    double ta = std::sqrt(std::max(ha - 1.0, 0.0));
    double tb = std::sqrt(std::max(hb - 1.0, 0.0));
    bool increasing = hb >= ha;

    auto s_of_t = [&](double t) {
        double target = 1.0 + t * t;
        double lo = a, hi = b;
        for (int i = 0; i < 200; ++i) {
            double mid = 0.5 * (lo + hi);
            if (hi - lo <= 4e-16 * std::max(1.0, mid)) break;
            if ((h_of_s(mid, k, C) < target) == increasing)
                lo = mid;
            else
                hi = mid;
        }
        return 0.5 * (lo + hi);
    };
    auto f = [&](double t) { return q0_of_s(s_of_t(t), k, C); };

    double lo_t = std::min(ta, tb), hi_t = std::max(ta, tb);
    if (lo_t == hi_t) return 0.0;

    // On sliver s-intervals (adjacent to a root of h = 1) the bisection noise
    // in s(t) is comparable to the interval width, so the Gauss-Kronrod error
    // estimate stalls; the integrand is smooth and the span in t is tiny, so
    // Simpson's rule is accurate to far below the quadrature tolerance there.
    if (b - a <= 1e-8 * std::max(1.0, std::abs(b))) {
        double w = hi_t - lo_t;
        double val = w / 6.0 * (f(lo_t) + 4.0 * f(0.5 * (lo_t + hi_t)) + f(hi_t));
        return increasing ? val : -val;
    }

    double err = 0;
    double val = quad31::integrate(f, lo_t, hi_t, 15, 1e-10, &err);
    check_quad_error(err, val, tol, "t-form", a, b);
    return increasing ? val : -val;
}

// Integral of g'/t over [a, b] (a <= b). The integrand is 1/sqrt-singular at
// roots of h = 1 (the outer ends of each monotone span) and the t-variable
// form is derivative-singular at s_k; split at the midpoint and use the form
// that is smooth on each half.
double integrate_piece(double a, double b, double k, double C, const Tolerances& tol) {
    if (a == b) return 0.0;

    // k > 1: h strictly increasing on s > 0, the t-form is smooth everywhere
    if (k >= 1.0) return integrate_t_form(a, b, k, C, tol);

    double sk = cusp_parameter(k);
    if (a < sk && sk < b)
        return integrate_piece(a, sk, k, C, tol) + integrate_piece(sk, b, k, C, tol);

    // keep the t-form away from s_k: switch to the s-form (where t is near its
    // maximum, hence well away from 0) on the last quarter toward s_k
    if (b <= sk) {
        double c = a + 0.75 * (sk - a);
        if (b <= c) return integrate_t_form(a, b, k, C, tol);
        return integrate_t_form(a, c, k, C, tol) + integrate_s_form(c, b, k, C, tol);
    }
    double c = b - 0.75 * (b - sk);
    if (a >= c) return integrate_t_form(a, b, k, C, tol);
    return integrate_s_form(a, c, k, C, tol) + integrate_t_form(c, b, k, C, tol);
}

} // namespace

double z_of_s(double s, double k, double C, double anchor_s, const Tolerances& tol) {
    if (s == anchor_s) return 0.0;
    double a = std::min(s, anchor_s), b = std::max(s, anchor_s);
    double v = integrate_piece(a, b, k, C, tol);
    return s > anchor_s ? v : -v;
}

Vec3 contour_point(double s, double k, double C, Branch branch, double anchor_s,
                   const Tolerances& tol) {
    double t = t_of_s(s, k, C, tol);
    double g = g_of_s(s, k, C);
    double z = z_of_s(s, k, C, anchor_s, tol);
    if (branch == Branch::X0) return {t / 2.0, g, z};
    return {-t / 2.0, g, -z};
}

Vec3 contour_tangent_factor(double s, double k, double C, const Tolerances& tol) {
    double t = t_of_s(s, k, C, tol);
    double sq = std::sqrt(h_of_s(s, k, C));
    double y = b8(s, k) / sq;
    return {1.0 / (4.0 * t), y, y / t};
}

Vec3 contour_tangent(double s, double k, double C, Branch branch, const Tolerances& tol) {
    Vec3 f = contour_tangent_factor(s, k, C, tol);
    Vec3 v = h_prime_of_s(s, k, C) * f;
    if (branch == Branch::X1) return {-v.x, v.y, -v.z};
    return v;
}

GluedProfile GluedProfile::make(const ShapeParams& params, BranchTag tag,
                                const Tolerances& tol, double g_scale) {
    params.validate(tol);
    if (tag == BranchTag::Full && params.k < 1.0)
        throw Error(errc::branch_mismatch, "Full branch requires k > 1");
    if (tag != BranchTag::Full && params.k > 1.0)
        throw Error(errc::branch_mismatch, "Minus/Plus branches require k < 1");

    GluedProfile p;
    p.params_ = params;
    p.tol_ = tol;
    p.tag_ = tag;
    p.g_scale_ = g_scale;
    p.domain_ = compute_domain(params.k, params.C, tol);

    const double k = params.k, C = params.C;
    switch (tag) {
        case BranchTag::Full:
            p.anchor_ = p.domain_.s0;
            p.far_end_ = 4.0 * p.domain_.s0 + 10.0; // checkpoint cap only
            p.direction_ = +1;
            p.t_limit_ = std::numeric_limits<double>::infinity();
            break;
        case BranchTag::Minus:
            p.anchor_ = p.domain_.s0;
            p.far_end_ = *p.domain_.s_k;
            p.direction_ = +1;
            p.t_limit_ = t_of_s(*p.domain_.s_k, k, C, tol);
            break;
        case BranchTag::Plus:
            p.anchor_ = *p.domain_.s0_prime;
            p.far_end_ = *p.domain_.s_k;
            p.direction_ = -1;
            p.t_limit_ = t_of_s(*p.domain_.s_k, k, C, tol);
            break;
    }

    // cumulative z checkpoints, graded toward the anchor by the u^2 map
    const int n = 48;
    double U = std::sqrt(std::abs(p.far_end_ - p.anchor_));
    double z = 0, s_prev = p.anchor_;
    p.z_checkpoints_.reserve(n + 1);
    p.z_checkpoints_.emplace_back(p.anchor_, 0.0);
    for (int j = 1; j <= n; ++j) {
        double u = U * j / n;
        double s = p.anchor_ + p.direction_ * u * u;
        double seg = integrate_piece(std::min(s_prev, s), std::max(s_prev, s), k, C, tol);
        z += (s >= s_prev) ? seg : -seg;
        p.z_checkpoints_.emplace_back(s, z);
        s_prev = s;
    }

    // uniform t-checkpoints covering the region where the t(s) inversion is
    // well conditioned (for k < 1: away from the cusp quarter of the piece)
    double t_region;
    if (tag == BranchTag::Full) {
        t_region = std::sqrt(std::max(h_of_s(p.far_end_, k, C) - 1.0, 0.0));
    } else {
        double s_c = p.anchor_ + p.direction_ * 0.75 * std::abs(p.far_end_ - p.anchor_);
        t_region = std::sqrt(std::max(h_of_s(s_c, k, C) - 1.0, 0.0));
    }
    const int nt = 64;
    p.zt_step_ = t_region / nt;
    p.zt_region_end_ = t_region;
    p.zt_checkpoints_.reserve(nt + 1);
    p.zt_checkpoints_.push_back(0.0);
    double zt = 0;
    auto q0_at_t = [&](double u) { return q0_of_s(p.s_from_t(u), k, C); };
    for (int j = 1; j <= nt; ++j) {
        double ua = (j - 1) * p.zt_step_, ub = j * p.zt_step_;
        double err = 0;
        double seg = quad31::integrate(q0_at_t, ua, ub, 15, 1e-10, &err);
        check_quad_error(err, seg, tol, "t-grid", ua, ub);
        zt += seg;
        p.zt_checkpoints_.push_back(zt);
    }
    return p;
}

double GluedProfile::z_from_t(double abs_t, double s) const {
    if (!zt_checkpoints_.empty() && abs_t <= zt_region_end_ && zt_step_ > 0) {
        int j = std::min(static_cast<int>(abs_t / zt_step_),
                         static_cast<int>(zt_checkpoints_.size()) - 1);
        double t_ref = j * zt_step_;
        auto f = [&](double u) { return q0_of_s(s_from_t(u), params_.k, params_.C); };
        // one non-adaptive pass: the remainder is at most one grid cell of a
        // smooth integrand, and a fixed rule keeps z smooth in t
        double err = 0;
        double seg = quad31::integrate(f, t_ref, abs_t, 0, 0.0, &err);
        return zt_checkpoints_[j] + seg;
    }
    return z_at_s(s);
}

double GluedProfile::z_at_s(double s) const {
    const double k = params_.k, C = params_.C;
    double key = direction_ * (s - anchor_);
    if (key < 0) key = 0;
    // nearest checkpoint at or before s along the piece
    auto it = std::lower_bound(
        z_checkpoints_.begin(), z_checkpoints_.end(), key,
        [&](const std::pair<double, double>& cp, double v) {
            return direction_ * (cp.first - anchor_) < v;
        });
    if (it != z_checkpoints_.begin()) --it;
    double s_ref = it->first, z_ref = it->second;
    if (s == s_ref) return z_ref;
    double seg = integrate_piece(std::min(s_ref, s), std::max(s_ref, s), k, C, tol_);
    return z_ref + ((s >= s_ref) ? seg : -seg);
}

double GluedProfile::s_from_t(double abs_t) const {
    const double k = params_.k, C = params_.C;
    if (abs_t < 0) abs_t = -abs_t;
    if (abs_t == 0.0) return anchor_;
    if (abs_t > t_limit_ * (1.0 + 1e-9))
        throw Error(errc::outside_domain,
                    fmt::format("|t| = {} exceeds the branch maximum t_k = {}", abs_t, t_limit_));
    if (std::isfinite(t_limit_) && abs_t >= t_limit_) return far_end_;

    double target = 1.0 + abs_t * abs_t; // solve h(s) = target on the monotone piece
    double lo = anchor_, hi;
    if (tag_ == BranchTag::Full) {
        hi = anchor_ + 1.0;
        while (h_of_s(hi, k, C) < target) hi = anchor_ + 2.0 * (hi - anchor_);
    } else {
        hi = far_end_;
    }
    // h increases from anchor toward hi for Full/Minus; decreases in s but
    // increases along the piece direction for Plus. Bisect along the piece.
    for (int i = 0; i < 100; ++i) {
        double mid = 0.5 * (lo + hi);
        if (std::abs(hi - lo) <= tol_.inversion_rel * std::abs(mid)) break;
        if (h_of_s(mid, k, C) < target)
            lo = mid;
        else
            hi = mid;
    }
    double s = 0.5 * (lo + hi);
    // Newton polish down to the conditioning limit; stay inside the bracket
    double b_lo = std::min(lo, hi), b_hi = std::max(lo, hi);
    for (int i = 0; i < 2; ++i) {
        double hp = h_prime_of_s(s, k, C);
        if (hp == 0.0) break;
        double next = s - (h_of_s(s, k, C) - target) / hp;
        if (!(next >= b_lo && next <= b_hi)) break;
        s = next;
    }
    return s;
}

Vec3 GluedProfile::point(double t) const {
    double s = s_from_t(std::abs(t));
    double g = g_scale_ * g_of_s(s, params_.k, params_.C);
    double z = z_from_t(std::abs(t), s);
    if (t >= 0) return {t / 2.0, g, z};
    return {t / 2.0, g, -z};
}

Vec3 GluedProfile::derivative(double t) const {
    const double k = params_.k, C = params_.C;
    double s = s_from_t(std::abs(t));
    double ts = t_of_s(s, k, C, tol_);
    double q0 = q0_of_s(s, k, C);
    double p1 = g_scale_ * q0 * ts; // g'(s)/t'(s)
    if (t >= 0) return {0.5, p1, q0};
    return {0.5, -p1, q0};
}

Vec3 GluedProfile::second_derivative(double t) const {
    const double k = params_.k, C = params_.C;
    double s = s_from_t(std::abs(t));
    double ts = t_of_s(s, k, C, tol_);
    double hp = h_prime_of_s(s, k, C);
    double q0 = q0_of_s(s, k, C);
    double q0p = q0_prime_of_s(s, k, C);
    double p2 = q0 + 2.0 * q0p * ts * ts / hp;
    double q1 = 2.0 * q0p * ts / hp;
    p2 *= g_scale_;
    if (t >= 0) return {0.0, p2, q1};
    return {0.0, p2, -q1};
}

std::vector<ProfileSample> GluedProfile::sample(int count, double t_cap) const {
    double T = std::isfinite(t_limit_) ? t_limit_ : (t_cap > 0 ? t_cap : 3.0);
    if (t_cap > 0 && t_cap < T) T = t_cap;
    std::vector<ProfileSample> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        double t = count == 1 ? 0.0 : -T + 2.0 * T * i / (count - 1);
        Vec3 pnt = point(t);
        double s = s_from_t(std::abs(t));
        out.push_back({s, std::abs(t), pnt.y, pnt.z, t >= 0 ? Branch::X0 : Branch::X1});
    }
    return out;
}

std::pair<GluedProfile, GluedProfile> split_at_cusp(const ShapeParams& params,
                                                    const Tolerances& tol) {
    if (!(params.k < 1.0))
        throw Error(errc::invalid_k, "cusp split exists for k < 1 only");
    return {GluedProfile::make(params, BranchTag::Minus, tol),
            GluedProfile::make(params, BranchTag::Plus, tol)};
}

} // namespace crpc
