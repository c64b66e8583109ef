#ifndef CRPC_PLANAR_HPP
#define CRPC_PLANAR_HPP

#include <optional>
#include <vector>

#include "crpc/profile.hpp"

namespace crpc {

struct PlanarSample {
    double s;    // source parameter on the contour
    double t;    // signed profile parameter
    double u;    // signed in-plane distance from the axis
    double z;    // height in the section plane
    int piece;   // index of the closed-form piece (switches where g = 0)
};

/// Intersection of the helical surface with a plane through the axis,
/// obtained by screwing each contour point into the plane with a continuously
/// unwrapped rotation angle.
struct PlanarProfile {
    double plane_angle = 0;
    std::vector<PlanarSample> points;
    std::vector<double> piece_boundaries; // s-values where pieces switch
};

PlanarProfile plane_section(double k, double C, double pitch, double plane_angle,
                            int samples, std::optional<BranchTag> tag = std::nullopt,
                            const Tolerances& tol = {});

enum class ShapeClass { OneSided, AxisTouching, SelfIntersecting };

struct ShapeClassification {
    ShapeClass cls;
    double C;
    double C_k;
};

/// Fig.-style classification for k > 1 by the sign of C - C_k.
ShapeClassification classify_shape(double k, double C, const Tolerances& tol = {});

struct SelfIntersection {
    double y, z;       // location in the (y, z)-plane (already pitch-scaled)
    double s_preimage; // the shared contour parameter of the two preimages
};

/// Crossing of the (y,z)-profile with the y-axis; present iff C > C_k.
std::optional<SelfIntersection> self_intersection(double k, double C, double pitch,
                                                  const Tolerances& tol = {});

} // namespace crpc

#endif
