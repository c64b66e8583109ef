#include "crpc/surface.hpp"

#include <cmath>

#include <fmt/core.h>

namespace crpc {

Vec3 helical_motion(double v, const Vec3& p, double internal_pitch) {
    double c = std::cos(v), s = std::sin(v);
    return {p.x * c - p.y * s, p.x * s + p.y * c, p.z + internal_pitch * v};
}

std::array<double, 2> HelicalPatch::effective_t_range() const {
    if (t_range[0] != 0.0 || t_range[1] != 0.0) return t_range;
    double tl = profile.t_limit();
    if (std::isfinite(tl)) {
        double margin = include_singular_boundary ? 0.0 : 1e-3 * tl;
        return {-tl + margin, tl - margin};
    }
    return {-3.0, 3.0};
}

Vec3 evaluate_surface(const HelicalPatch& patch, double v, double t) {
    return 2.0 * patch.pitch * helical_motion(v, patch.profile.point(t));
}

namespace {

Vec3 rotate_z(double v, const Vec3& p) {
    double c = std::cos(v), s = std::sin(v);
    return {p.x * c - p.y * s, p.x * s + p.y * c, p.z};
}

} // namespace

Partials surface_partials(const HelicalPatch& patch, double v, double t) {
    const GluedProfile& prof = patch.profile;
    double tl = prof.t_limit();
    if (std::isfinite(tl) && std::abs(std::abs(t) - tl) <= 1e-12 * tl)
        throw Error(errc::singular_point,
                    fmt::format("partials undefined at the cusp |t| = {}", tl));

    Vec3 p = prof.point(t);
    Vec3 d1 = prof.derivative(t);
    Vec3 d2 = prof.second_derivative(t);

    Vec3 rp = rotate_z(v, p);
    Vec3 rd1 = rotate_z(v, d1);
    Vec3 rd2 = rotate_z(v, d2);

    double scale = 2.0 * patch.pitch;
    Partials out;
    out.Xv = scale * Vec3{-rp.y, rp.x, 0.5};
    out.Xt = scale * Vec3{rd1.x, rd1.y, rd1.z};
    out.Xvv = scale * Vec3{-rp.x, -rp.y, 0.0};
    out.Xvt = scale * Vec3{-rd1.y, rd1.x, 0.0};
    out.Xtt = scale * Vec3{rd2.x, rd2.y, rd2.z};
    return out;
}

Partials surface_partials_fd(const HelicalPatch& patch, double v, double t, double step) {
    auto X = [&](double vv, double tt) { return evaluate_surface(patch, vv, tt); };
    double h = step;
    Partials out;
    out.Xv = (X(v + h, t) - X(v - h, t)) / (2 * h);
    out.Xt = (X(v, t + h) - X(v, t - h)) / (2 * h);
    out.Xvv = (X(v + h, t) - 2 * X(v, t) + X(v - h, t)) / (h * h);
    out.Xtt = (X(v, t + h) - 2 * X(v, t) + X(v, t - h)) / (h * h);
    out.Xvt = (X(v + h, t + h) - X(v + h, t - h) - X(v - h, t + h) + X(v - h, t - h)) / (4 * h * h);
    return out;
}

SurfaceMesh sample_mesh(const HelicalPatch& patch) {
    if (patch.n_v < 2 || patch.n_t < 2)
        throw Error(errc::invalid_config, "mesh grid needs n_v >= 2 and n_t >= 2");

    auto [t_lo, t_hi] = patch.effective_t_range();
    auto [v_lo, v_hi] = patch.v_range;
    double tl = patch.profile.t_limit();

    SurfaceMesh mesh;
    mesh.grid_shape = {patch.n_v, patch.n_t};
    mesh.vertices.reserve(size_t(patch.n_v) * patch.n_t);
    mesh.normals.reserve(size_t(patch.n_v) * patch.n_t);
    mesh.singular_flags.reserve(size_t(patch.n_v) * patch.n_t);

    const Tolerances& tol = patch.profile.tolerances();
    for (int i = 0; i < patch.n_v; ++i) {
        double v = v_lo + (v_hi - v_lo) * i / (patch.n_v - 1);
        for (int j = 0; j < patch.n_t; ++j) {
            double t = t_lo + (t_hi - t_lo) * j / (patch.n_t - 1);
            mesh.vertices.push_back(evaluate_surface(patch, v, t));
            bool singular = std::isfinite(tl)
                            && std::abs(std::abs(t) - tl) <= tol.singular_dist * tl;
            mesh.singular_flags.push_back(singular);
            if (singular) {
                mesh.normals.push_back({0, 0, 0});
            } else {
                Partials d = surface_partials(patch, v, t);
                mesh.normals.push_back(d.Xv.cross(d.Xt).normalized());
            }
        }
    }
    for (int i = 0; i + 1 < patch.n_v; ++i)
        for (int j = 0; j + 1 < patch.n_t; ++j) {
            int a = i * patch.n_t + j;
            mesh.faces.push_back({a, a + 1, a + 1 + patch.n_t, a + patch.n_t});
        }
    return mesh;
}

std::vector<Vec3> singular_curve(double k, double C, double pitch, double v_begin,
                                 double v_end, int n_v, const Tolerances& tol) {
    if (!(k > 0.0 && k < 1.0))
        throw Error(errc::invalid_k, "the singular curve exists for k < 1 only");
    GluedProfile prof = GluedProfile::make({k, C, pitch}, BranchTag::Minus, tol);
    double sk = *prof.domain().s_k;
    Vec3 cusp{t_of_s(sk, k, C, tol) / 2.0, g_of_s(sk, k, C), prof.z_at_s(sk)};
    std::vector<Vec3> out;
    out.reserve(n_v);
    for (int i = 0; i < n_v; ++i) {
        double v = n_v == 1 ? v_begin : v_begin + (v_end - v_begin) * i / (n_v - 1);
        out.push_back(2.0 * pitch * helical_motion(v, cusp));
    }
    return out;
}

} // namespace crpc
