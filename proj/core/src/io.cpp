#include "crpc/io.hpp"

#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

#include <fmt/format.h>

namespace crpc {

std::string format_double(double v) {
    if (v == 0.0) v = 0.0; // collapse -0
    return fmt::format("{}", v);
}

void atomic_write(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp + " for writing");
        out << content;
        if (!out) throw std::runtime_error("write failed for " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("rename failed for " + path);
}

std::string profile_csv(const std::vector<ProfileSample>& samples, double pitch) {
    std::string out = "s,t,g,x,y,z,branch\n";
    double scale = 2.0 * pitch;
    for (const auto& p : samples) {
        double sign = p.branch == Branch::X0 ? 1.0 : -1.0;
        out += fmt::format("{},{},{},{},{},{},{}\n", format_double(p.s),
                           format_double(p.t), format_double(p.g),
                           format_double(scale * sign * p.t / 2.0),
                           format_double(scale * p.g), format_double(scale * sign * p.z),
                           p.branch == Branch::X0 ? "X0" : "X1");
    }
    return out;
}

std::string mesh_obj(const SurfaceMesh& mesh) {
    std::string out;
    out.reserve(mesh.vertices.size() * 48);
    for (const auto& v : mesh.vertices)
        out += fmt::format("v {} {} {}\n", format_double(v.x), format_double(v.y),
                           format_double(v.z));
    for (const auto& n : mesh.normals)
        out += fmt::format("vn {} {} {}\n", format_double(n.x), format_double(n.y),
                           format_double(n.z));
    for (const auto& f : mesh.faces)
        out += fmt::format("f {0}//{0} {1}//{1} {2}//{2} {3}//{3}\n", f[0] + 1, f[1] + 1,
                           f[2] + 1, f[3] + 1);
    return out;
}

std::string polyline_obj(const std::vector<Vec3>& points) {
    std::string out;
    for (const auto& p : points)
        out += fmt::format("v {} {} {}\n", format_double(p.x), format_double(p.y),
                           format_double(p.z));
    out += "l";
    for (size_t i = 1; i <= points.size(); ++i) out += fmt::format(" {}", i);
    out += "\n";
    return out;
}

std::string planar_csv(const PlanarProfile& profile) {
    std::string out = "s,u,z,piece\n";
    for (const auto& p : profile.points)
        out += fmt::format("{},{},{},{}\n", format_double(p.s), format_double(p.u),
                           format_double(p.z), p.piece);
    return out;
}

std::string planar_svg(const PlanarProfile& profile, double scale) {
    double lo_u = std::numeric_limits<double>::max(), hi_u = -lo_u;
    double lo_z = lo_u, hi_z = -lo_u;
    for (const auto& p : profile.points) {
        lo_u = std::min(lo_u, p.u);
        hi_u = std::max(hi_u, p.u);
        lo_z = std::min(lo_z, p.z);
        hi_z = std::max(hi_z, p.z);
    }
    if (profile.points.empty()) lo_u = hi_u = lo_z = hi_z = 0;
    double pad = 10.0;
    double w = (hi_u - lo_u) * scale + 2 * pad;
    double h = (hi_z - lo_z) * scale + 2 * pad;
    std::string pts;
    for (const auto& p : profile.points)
        pts += fmt::format("{},{} ", format_double((p.u - lo_u) * scale + pad),
                           format_double((hi_z - p.z) * scale + pad));
    if (!pts.empty()) pts.pop_back();
    return fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" "
        "viewBox=\"0 0 {} {}\">\n"
        "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1\" points=\"{}\"/>\n"
        "</svg>\n",
        format_double(w), format_double(h), format_double(w), format_double(h), pts);
}

std::string poly_text(const MultiPoly& poly) { return poly.to_text({"x", "y", "C"}) + "\n"; }

std::string poly_json(const MultiPoly& poly) {
    std::string out = "{";
    bool first = true;
    for (auto it = poly.terms().rbegin(); it != poly.terms().rend(); ++it) {
        if (!first) out += ",";
        first = false;
        out += fmt::format("\"{},{},{}\":\"{}\"", it->first[0], it->first[1],
                           it->first[2], it->second.str());
    }
    out += "}";
    return out;
}

} // namespace crpc
