#ifndef CRPC_PROFILE_HPP
#define CRPC_PROFILE_HPP

#include <vector>

#include "crpc/params.hpp"
#include "crpc/vec3.hpp"

namespace crpc {

// Closed-form building blocks of the generating contour. All take the shape
// pair (k, C) and the solution parameter s > 0.

double h_of_s(double s, double k, double C);
double h_prime_of_s(double s, double k, double C);
double h_second_of_s(double s, double k, double C);

/// sqrt(h(s) - 1). Throws OutsideDomain if h(s) < 1 beyond root tolerance.
double t_of_s(double s, double k, double C, const Tolerances& tol = {});

double g_of_s(double s, double k, double C);
double g_prime_of_s(double s, double k, double C);
double g_second_of_s(double s, double k, double C);

/// dz/dt across the glue point: q0(s) = 2 g'(s)/h'(s).
double q0_of_s(double s, double k, double C);
double q0_prime_of_s(double s, double k, double C);

/// z(s) = integral of g'/t from anchor_s to s, with a u^2 substitution at
/// singular (root) endpoints. z(anchor_s) = 0.
double z_of_s(double s, double k, double C, double anchor_s, const Tolerances& tol = {});

enum class Branch { X0, X1 };

struct ProfileSample {
    double s, t, g, z;
    Branch branch;
};

/// X0(s) = (t/2, g, z), X1(s) = (-t/2, g, -z), z anchored at anchor_s.
Vec3 contour_point(double s, double k, double C, Branch branch, double anchor_s,
                   const Tolerances& tol = {});

/// Exact derivative of the contour in s. Vanishes exactly at s = s_k (k < 1);
/// unbounded (infinite x-component) as s approaches a root of h = 1.
Vec3 contour_tangent(double s, double k, double C, Branch branch,
                     const Tolerances& tol = {});

/// The tangent with the common factor h'(s) stripped; finite and nonzero at
/// s = s_k, where it gives the limit tangent direction.
Vec3 contour_tangent_factor(double s, double k, double C, const Tolerances& tol = {});

/// Discriminant of the underlying quadratic in w = (t + 1/t) g'(t):
/// D = 16 k^2 g^2 + 4 (k^2 - 1)(1 + t^2). Zero exactly at the cusp.
double branch_discriminant(double t, double g, double k);

enum class BranchTag {
    Full,  // k > 1: one piece, s in [s0, inf)
    Minus, // k < 1: s in [s0, s_k], glued at s0
    Plus,  // k < 1: s in [s_k, s0'], glued at s0'
};

/// The two solution branches stitched into one curve parametrized by signed t:
/// X0 on t > 0, X1 on t < 0, glue point at t = 0. Immutable after
/// construction; cached z checkpoints make repeated evaluation cheap.
class GluedProfile {
public:
    static GluedProfile make(const ShapeParams& params, BranchTag tag,
                             const Tolerances& tol = {}, double g_scale = 1.0);

    const ShapeParams& params() const { return params_; }
    const DomainInfo& domain() const { return domain_; }
    BranchTag tag() const { return tag_; }
    const Tolerances& tolerances() const { return tol_; }

    /// Glue root: s0 for Full/Minus, s0' for Plus.
    double anchor() const { return anchor_; }
    /// Largest |t| of the piece: t(s_k) for Minus/Plus, infinity for Full.
    double t_limit() const { return t_limit_; }

    /// Inversion of t(s) on the monotone piece (bisection).
    double s_from_t(double abs_t) const;

    Vec3 point(double t) const;
    Vec3 derivative(double t) const;        // d/dt, Eq-style parity across t = 0
    Vec3 second_derivative(double t) const; // d^2/dt^2

    /// Anchored z along the piece (no branch sign applied).
    double z_at_s(double s) const;

    double g_scale() const { return g_scale_; }

    std::vector<ProfileSample> sample(int count, double t_cap = -1.0) const;

private:
    GluedProfile() = default;

    ShapeParams params_;
    DomainInfo domain_;
    BranchTag tag_ = BranchTag::Full;
    Tolerances tol_;
    double anchor_ = 0;
    double far_end_ = 0;  // other end of the monotone piece (s_k, or cap for Full)
    int direction_ = 1;   // sign of (s - anchor) along the piece
    double t_limit_ = 0;
    double g_scale_ = 1.0;
    std::vector<std::pair<double, double>> z_checkpoints_; // (s, z), ordered along piece

    // z as a direct integral in t over a uniform t-grid: used by point() so
    // that finite differences in t see a smooth function (the s-anchored form
    // amplifies inversion noise like g'/t near the glue)
    std::vector<double> zt_checkpoints_;
    double zt_step_ = 0;
    double zt_region_end_ = 0; // largest |t| served by the t-grid
    double z_from_t(double abs_t, double s) const;
};

/// The two k < 1 profiles meeting only at the cusp parameter.
std::pair<GluedProfile, GluedProfile> split_at_cusp(const ShapeParams& params,
                                                    const Tolerances& tol = {});

} // namespace crpc

#endif
