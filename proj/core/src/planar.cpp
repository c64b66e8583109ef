#include "crpc/planar.hpp"

#include <cmath>

#include <fmt/core.h>

namespace crpc {

namespace {

double principal(double angle) {
    while (angle > M_PI) angle -= 2.0 * M_PI;
    while (angle <= -M_PI) angle += 2.0 * M_PI;
    return angle;
}

} // namespace

PlanarProfile plane_section(double k, double C, double pitch, double plane_angle,
                            int samples, std::optional<BranchTag> tag,
                            const Tolerances& tol) {
    BranchTag use = tag.value_or(k > 1.0 ? BranchTag::Full : BranchTag::Minus);
    GluedProfile prof = GluedProfile::make({k, C, pitch}, use, tol);

    double T = prof.t_limit();
    if (!std::isfinite(T)) {
        double s_hi = 4.0 * prof.domain().s0 + 10.0;
        T = t_of_s(s_hi, k, C, tol);
    }

    PlanarProfile out;
    out.plane_angle = plane_angle;
    out.points.reserve(samples);

    // pass 1: contour points with a continuously unwrapped rotation angle
    struct Raw {
        double s, t, r, z, theta;
        bool upper;
    };
    std::vector<Raw> raw;
    raw.reserve(samples);
    double theta_prev = 0, theta_unwrapped = 0;
    int mid = 0;
    for (int i = 0; i < samples; ++i) {
        double t = samples == 1 ? 0.0 : -T + 2.0 * T * i / (samples - 1);
        Vec3 p = prof.point(t);
        double s = prof.s_from_t(std::abs(t));
        double theta = std::atan2(p.y, p.x);
        theta_unwrapped = i == 0 ? theta : theta_unwrapped + principal(theta - theta_prev);
        theta_prev = theta;
        raw.push_back({s, t, std::hypot(p.x, p.y), p.z, theta_unwrapped, p.y > 0});
        if (std::abs(t) < std::abs(raw[mid].t)) mid = i;
    }

    // pass 2: screw every point to the section plane; the rotation target is
    // anchored at the glue point (sample closest to t = 0) so z vanishes there
    double n0 = std::round((raw[mid].theta - plane_angle) / M_PI);
    double target = plane_angle + n0 * M_PI;
    double sign_u = (std::lround(n0) % 2 == 0) ? 1.0 : -1.0;
    double scale = 2.0 * pitch;
    int piece = 0;
    for (int i = 0; i < samples; ++i) {
        const Raw& p = raw[i];
        if (i > 0 && p.upper != raw[i - 1].upper) {
            ++piece;
            out.piece_boundaries.push_back(0.5 * (p.s + raw[i - 1].s));
        }
        double delta = target - p.theta;
        out.points.push_back({p.s, p.t, scale * sign_u * p.r, scale * (p.z + 0.5 * delta),
                              piece});
    }
    return out;
}

ShapeClassification classify_shape(double k, double C, const Tolerances& tol) {
    if (!(k > 1.0))
        throw Error(errc::invalid_k, "shape classification is defined for k > 1 only");
    ShapeParams{k, C}.validate(tol);
    double ck = critical_C(k);
    ShapeClassification r{ShapeClass::AxisTouching, C, ck};
    if (std::abs(C - ck) <= tol.classify_rel * ck)
        r.cls = ShapeClass::AxisTouching;
    else if (C < ck)
        r.cls = ShapeClass::OneSided;
    else
        r.cls = ShapeClass::SelfIntersecting;
    return r;
}

std::optional<SelfIntersection> self_intersection(double k, double C, double pitch,
                                                  const Tolerances& tol) {
    ShapeClassification cls = classify_shape(k, C, tol);
    if (cls.cls != ShapeClass::SelfIntersecting) return std::nullopt;

    GluedProfile prof = GluedProfile::make({k, C, pitch}, BranchTag::Full, tol);
    double s0 = prof.domain().s0;

    // On X0 the top view stays in the half plane x > 0, so atan2 is already
    // continuous; the glue point sits on the axis with zeta(s0) = 0 and the
    // curve dips below before climbing to +infinity.
    auto zeta = [&](double s) {
        double theta = std::atan2(g_of_s(s, k, C), t_of_s(s, k, C, tol) / 2.0);
        return prof.z_at_s(s) + 0.5 * (-M_PI / 2.0 - theta);
    };

    double s_hi = 4.0 * s0 + 10.0;
    double lo = 0, hi = 0;
    for (int attempt = 0; attempt < 6 && hi == 0; ++attempt) {
        double U = std::sqrt(s_hi - s0);
        bool seen_negative = false;
        double prev_s = 0, prev_val = 0;
        for (int j = 1; j <= 400; ++j) {
            double u = U * j / 400.0;
            double s = s0 + u * u;
            double val = zeta(s);
            if (val < 0) {
                seen_negative = true;
            } else if (seen_negative && prev_val < 0) {
                lo = prev_s;
                hi = s;
                break;
            }
            prev_s = s;
            prev_val = val;
        }
        s_hi *= 4.0;
    }
    if (hi == 0)
        throw Error(errc::quadrature_failure, "failed to bracket the self-intersection");

    for (int i = 0; i < 100; ++i) {
        double mid = 0.5 * (lo + hi);
        if (hi - lo <= 1e-13 * mid) break;
        if (zeta(mid) < 0)
            lo = mid;
        else
            hi = mid;
    }
    double s_star = 0.5 * (lo + hi);
    double r = std::hypot(t_of_s(s_star, k, C, tol) / 2.0, g_of_s(s_star, k, C));
    return SelfIntersection{-2.0 * pitch * r, 2.0 * pitch * zeta(s_star), s_star};
}

} // namespace crpc
