#ifndef CRPC_IO_HPP
#define CRPC_IO_HPP

#include <string>
#include <vector>

#include "crpc/multipoly.hpp"
#include "crpc/planar.hpp"
#include "crpc/surface.hpp"

namespace crpc {

/// Shortest decimal that round-trips to the same double (used by every
/// exporter so identical runs produce byte-identical files).
std::string format_double(double v);

/// Write via a temp file in the same directory plus rename, so readers never
/// observe a half-written file.
void atomic_write(const std::string& path, const std::string& content);

/// Rows `s,t,g,x,y,z,branch` for a sampled profile scaled by 2*pitch.
std::string profile_csv(const std::vector<ProfileSample>& samples, double pitch);

/// Wavefront OBJ: `v`/`vn` and quad `f a//a b//b ...`, 1-based. Singular
/// vertices reuse index 1's normal slot but keep their zero normal entry.
std::string mesh_obj(const SurfaceMesh& mesh);

/// A polyline as an OBJ `l` element.
std::string polyline_obj(const std::vector<Vec3>& points);

/// Rows `s,u,z,piece` of a planar section.
std::string planar_csv(const PlanarProfile& profile);

/// SVG polyline of the (u, z) points; y grows upward (z negated for SVG).
std::string planar_svg(const PlanarProfile& profile, double scale = 100.0);

/// Plain-text polynomial, graded-lex descending `coef * x^i * y^j * C^l`.
std::string poly_text(const MultiPoly& poly);

/// JSON map from "i,j,l" exponent keys to "num/den" coefficient strings.
std::string poly_json(const MultiPoly& poly);

} // namespace crpc

#endif
