#ifndef CRPC_TOLERANCES_HPP
#define CRPC_TOLERANCES_HPP

namespace crpc {

/// Shared numerical tolerances. Every module takes these as an optional
/// trailing argument; tests override individual fields.
struct Tolerances {
    double root_rel = 1e-12;       // bisection for roots of h(s) = 1
    double quad_abs = 1e-10;       // absolute tolerance of the z-quadrature
    double inversion_rel = 1e-13;  // s(t) inversion on a monotone piece
    double sliver_rel = 1e-10;     // k<1: C - C_min below this * C_min is empty
    double classify_rel = 1e-10;   // |C - C_k| band for the AxisTouching class
    double singular_dist = 1e-9;   // mesh vertices within this * t_k of the cusp
    double curvature_floor = 1e-10; // |kappa| below this * mean is "vanishing"
    double umbilic_rel = 1e-12;
};

} // namespace crpc

#endif
