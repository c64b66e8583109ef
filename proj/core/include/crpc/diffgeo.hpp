#ifndef CRPC_DIFFGEO_HPP
#define CRPC_DIFFGEO_HPP

#include "crpc/surface.hpp"

namespace crpc {

struct FundamentalForms {
    double E, F, G; // first form
    double L, M, N; // second form
};

struct CurvatureReport {
    double kappa1, kappa2; // |kappa2| >= |kappa1|
    double ratio;          // kappa1 / kappa2, so |ratio| <= 1
    double alpha;          // arctan sqrt(|ratio|)
    GaussSign gauss_sign;
};

/// E, F, G, L, M, N with n the given unit normal. Throws SingularPoint if
/// EG - F^2 <= 0.
FundamentalForms fundamental_forms(const Partials& d, const Vec3& normal);

/// Shape-operator eigenvalues. Throws UmbilicPoint when the two curvatures
/// coincide within tolerance (cannot happen on a valid CRPC surface).
CurvatureReport principal_curvatures(const FundamentalForms& f, const Tolerances& tol = {});

struct CertificateReport {
    double max_rel_deviation = 0;
    double argmax_v = 0, argmax_t = 0;
    int evaluated = 0;
    int excluded_points = 0;
    double a_low = 0, a_high = 0;
    int n_v = 0, n_t = 0;
    bool fd_only = false;
};

/// Max over an interior grid of the relative deviation of kappa1/kappa2 from
/// {a_low, a_high}. Vanishing-curvature and singular vertices are excluded.
/// `g_scale` perturbs the profile's y-coordinate (negative-control hook).
CertificateReport crpc_certificate(double k, double C, double pitch, int n_v, int n_t,
                                   bool fd_only = false, BranchTag tag = BranchTag::Full,
                                   double g_scale = 1.0, const Tolerances& tol = {});

/// Relative residual of the reduced contour ODE at parameter s (g' taken in
/// the t-variable). Zero (to rounding) on the closed-form solution.
double ode_residual(double s, double k, double C, const Tolerances& tol = {},
                    double g_scale = 1.0);

struct SteinerDiagnostic {
    double r_s;   // Steiner circle radius
    double d_s;   // distance of the involution center from the circle center
    double ratio; // d_s / r_s; equals k on a CRPC surface
};

SteinerDiagnostic steiner_diagnostic(double s, double k, double C, const Tolerances& tol = {});

/// LG/NE from the glue-point frame. Branch Minus/Full uses s0, Plus uses s0'.
double axis_point_ratio(double k, double C, BranchTag branch, const Tolerances& tol = {});

/// alpha = arctan sqrt(|a|) in (0, pi/2).
double characteristic_angle(double a);

/// |II(path, steepest-descent)| at a surface point, normalized; the two
/// directions are conjugate, so this vanishes on the closed-form surface.
double conjugacy_residual(const Partials& d, const FundamentalForms& f);

struct ResidualStats {
    double max_ode_residual = 0;
    double max_steiner_deviation = 0; // max |ratio - k| / k
    int samples = 0;
};

/// ODE and Steiner-circle diagnostics over interior s-samples of the branch.
ResidualStats residual_stats(double k, double C, int samples,
                             BranchTag tag = BranchTag::Full, const Tolerances& tol = {});

} // namespace crpc

#endif
