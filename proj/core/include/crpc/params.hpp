#ifndef CRPC_PARAMS_HPP
#define CRPC_PARAMS_HPP

#include <optional>
#include <utility>

#include "crpc/errors.hpp"
#include "crpc/tolerances.hpp"

namespace crpc {

enum class GaussSign {
    Negative, // k > 1, a < 0
    Positive, // k < 1, a > 0
};

/// The curvature-ratio dial (a, k). k = |1-a|/|1+a| is agnostic to a <-> 1/a
/// and is the canonical internal parameter; a is converted at the boundary.
struct CurvatureSpec {
    double a;
    double k;
    GaussSign gauss_sign;

    static CurvatureSpec from_a(double a);
    static CurvatureSpec from_k(double k); // picks the |a| < 1 representative
};

/// (k, C, pitch) fixing one concrete surface. The internal pitch is 1/2;
/// `pitch` only rescales exported geometry by 2*pitch.
struct ShapeParams {
    double k;
    double C;
    double pitch = 0.5;

    void validate(const Tolerances& tol = {}) const;
};

/// Roots of h(s) = 1 delimiting the solution interval I_C.
struct DomainInfo {
    double s0 = 0;                   // lower root
    std::optional<double> s0_prime;  // upper root, present iff k < 1
    std::optional<double> s_k;       // cusp parameter, present iff k < 1

    /// Upper end of I_C (infinity for k > 1).
    double upper() const;
    bool contains(double s) const { return s > s0 && s < upper(); }
};

double k_from_a(double a);
std::pair<double, double> a_pair_from_k(double k);

/// C at which the profile touches the (x,z)-plane and the axis lies on the
/// surface (k > 1 only).
double critical_C(double k);

/// Smallest C with nonempty I_C (k < 1 only). Derived threshold: the maximum
/// of h over s > 0 sits at s_k, so C_min solves h(s_k) = 1.
double min_C(double k);

/// sqrt((1+k)/(1-k)), the cusp parameter (k < 1).
double cusp_parameter(double k);

DomainInfo compute_domain(double k, double C, const Tolerances& tol = {});

} // namespace crpc

#endif
