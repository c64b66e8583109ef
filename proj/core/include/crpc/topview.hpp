#ifndef CRPC_TOPVIEW_HPP
#define CRPC_TOPVIEW_HPP

#include <optional>
#include <utility>
#include <vector>

#include "crpc/multipoly.hpp"
#include "crpc/profile.hpp"

namespace crpc {

/// The two branches of s^2 as a root of the quadratic relating (t, g) and
/// s^2: s^2 = A + B with B^2 = A^2 - (k+1)^2/(k-1)^2. Variables (t, g) in
/// slots 0 and 1; denominators are powers of t^2 + 1.
std::pair<RationalFunction, RationalFunction> s_squared_branches(int n, int m);

/// Exact implicit polynomial of the top view (x, y) = (t/2, g) for k = n/m,
/// with C symbolic (slot 2) or substituted. Total (x, y)-degree is bounded by
/// 4(3m + n); exceeding it raises DegreeBlowup.
MultiPoly build_implicit_polynomial(int n, int m,
                                    const std::optional<Rational>& C_value = std::nullopt);

/// (x, y) = (+-t/2, g) over a domain-covering s-sample of the profile.
std::vector<std::pair<double, double>> topview_samples(const GluedProfile& profile,
                                                       int count);

/// Max over samples of |poly(x, y)| divided by the largest absolute monomial
/// value at that sample. C must be numeric (either already substituted or
/// supplied here).
double topview_residual(const MultiPoly& poly,
                        const std::vector<std::pair<double, double>>& samples,
                        double C_value = 1.0);

} // namespace crpc

#endif
