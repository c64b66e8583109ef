#ifndef CRPC_SURFACE_HPP
#define CRPC_SURFACE_HPP

#include <array>
#include <vector>

#include "crpc/profile.hpp"

namespace crpc {

/// Screw displacement about the z-axis: rotate by v, lift by internal_pitch*v.
Vec3 helical_motion(double v, const Vec3& p, double internal_pitch = 0.5);

/// A glued profile swept by the helical motion over a v-interval, sampled on
/// an (n_v x n_t) grid. t_range defaults to the branch limit (k < 1) or a
/// symmetric window (k > 1).
struct HelicalPatch {
    GluedProfile profile;
    double pitch = 0.5;
    std::array<double, 2> v_range{0.0, 6.283185307179586};
    int n_v = 32;
    int n_t = 32;
    std::array<double, 2> t_range{0.0, 0.0}; // both zero: pick default
    bool include_singular_boundary = false;

    std::array<double, 2> effective_t_range() const;
};

/// X(v, t) = 2 * pitch * H(v, profile(t)).
Vec3 evaluate_surface(const HelicalPatch& patch, double v, double t);

struct Partials {
    Vec3 Xv, Xt, Xvv, Xvt, Xtt;
};

/// Analytic partials via the rotation derivative and the chain rule through
/// the contour tangent. Throws SingularPoint at the cusp parameter.
Partials surface_partials(const HelicalPatch& patch, double v, double t);

/// Same surface point derivatives from central finite differences (debug /
/// cross-check path).
Partials surface_partials_fd(const HelicalPatch& patch, double v, double t,
                             double step = 1e-5);

struct SurfaceMesh {
    std::vector<Vec3> vertices;
    std::vector<Vec3> normals; // zero vector where singular
    std::vector<std::array<int, 4>> faces;
    std::array<int, 2> grid_shape{0, 0}; // (n_v, n_t)
    std::vector<bool> singular_flags;
};

SurfaceMesh sample_mesh(const HelicalPatch& patch);

/// The helix traced by the cusp point X0(s_k) (k < 1 only).
std::vector<Vec3> singular_curve(double k, double C, double pitch, double v_begin,
                                 double v_end, int n_v, const Tolerances& tol = {});

} // namespace crpc

#endif
