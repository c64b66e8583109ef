#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "crpc/io.hpp"
#include "crpc/topview.hpp"

using namespace crpc;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int count_lines_starting(const std::string& text, const std::string& prefix) {
    int n = 0;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string::npos) end = text.size();
        if (text.compare(pos, prefix.size(), prefix) == 0) ++n;
        pos = end + 1;
    }
    return n;
}

} // namespace

TEST_CASE("format_double round-trips and is canonical") {
    for (double v : {0.0, 1.0, -1.5, 0.1, 1e-300, 3.141592653589793,
                     0.45251098284601709, -123456.789}) {
        std::string s = format_double(v);
        CHECK(std::stod(s) == v);
        // canonical: formatting the re-parsed value gives the same string
        CHECK(format_double(std::stod(s)) == s);
    }
    CHECK(format_double(-0.0) == "0");
    CHECK(format_double(0.25) == "0.25");
}

TEST_CASE("atomic_write creates and replaces files") {
    std::string path = "io_test_atomic.txt";
    atomic_write(path, "first\n");
    CHECK(slurp(path) == "first\n");
    atomic_write(path, "second\n");
    CHECK(slurp(path) == "second\n");
    // no temp file left behind
    std::ifstream tmp(path + ".tmp");
    CHECK(!tmp.good());
    std::remove(path.c_str());
}

TEST_CASE("profile CSV") {
    GluedProfile prof = GluedProfile::make({3.0, 1.0, 0.5}, BranchTag::Full);
    auto samples = prof.sample(33);
    std::string csv = profile_csv(samples, 0.5);
    CHECK(csv.rfind("s,t,g,x,y,z,branch\n", 0) == 0);
    CHECK(count_lines_starting(csv, "") == 34); // header + 33 rows
    CHECK(csv.find(",X0\n") != std::string::npos);
    CHECK(csv.find(",X1\n") != std::string::npos);

    // round trip: x column re-read equals 2*pitch*sign*t/2 of the sample
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line); // header
    for (const auto& s : samples) {
        REQUIRE(std::getline(in, line));
        std::istringstream row(line);
        std::string field;
        std::getline(row, field, ',');
        CHECK(std::stod(field) == s.s);
        std::getline(row, field, ',');
        CHECK(std::stod(field) == s.t);
        std::getline(row, field, ',');
        CHECK(std::stod(field) == s.g);
        std::getline(row, field, ',');
        double sign = s.branch == Branch::X0 ? 1.0 : -1.0;
        CHECK(std::stod(field) == sign * s.t / 2.0); // 2*pitch = 1
    }
}

TEST_CASE("mesh OBJ structure") {
    HelicalPatch patch{GluedProfile::make({3.0, 1.0, 0.5}, BranchTag::Full)};
    patch.n_v = 8;
    patch.n_t = 6;
    SurfaceMesh mesh = sample_mesh(patch);
    std::string obj = mesh_obj(mesh);
    CHECK(count_lines_starting(obj, "v ") == 48);
    CHECK(count_lines_starting(obj, "vn ") == 48);
    CHECK(count_lines_starting(obj, "f ") == 7 * 5);
    // all face indices are 1-based and in range
    CHECK(obj.find(" 0//") == std::string::npos);
    CHECK(obj.find("f 1//1 2//2 8//8 7//7\n") != std::string::npos);
}

TEST_CASE("polyline OBJ") {
    std::vector<Vec3> pts{{0, 0, 0}, {1, 0, 0.5}, {1, 1, 1}};
    std::string obj = polyline_obj(pts);
    CHECK(count_lines_starting(obj, "v ") == 3);
    CHECK(obj.find("l 1 2 3\n") != std::string::npos);
}

TEST_CASE("planar CSV and SVG") {
    PlanarProfile pp = plane_section(3.0, 1.0, 0.5, M_PI / 2.0, 41);
    std::string csv = planar_csv(pp);
    CHECK(csv.rfind("s,u,z,piece\n", 0) == 0);
    CHECK(count_lines_starting(csv, "") == 42);

    std::string svg = planar_svg(pp);
    CHECK(svg.rfind("<svg ", 0) == 0);
    CHECK(svg.find("<polyline") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("polynomial serializations are deterministic") {
    MultiPoly p = build_implicit_polynomial(3, 1);
    std::string t1 = poly_text(p), t2 = poly_text(p);
    CHECK(t1 == t2);
    CHECK(t1.find('x') != std::string::npos);
    CHECK(t1.back() == '\n');

    std::string j = poly_json(p);
    CHECK(j.front() == '{');
    CHECK(j.back() == '}');
    // exponent keys without spaces, rational coefficient values
    CHECK(j.find("\"6,0,0\":") != std::string::npos);
    CHECK(j.find(", ") == std::string::npos);
}

TEST_CASE("exporters are bytewise reproducible") {
    HelicalPatch p1{GluedProfile::make({3.0, 1.0, 0.5}, BranchTag::Full)};
    HelicalPatch p2{GluedProfile::make({3.0, 1.0, 0.5}, BranchTag::Full)};
    p1.n_v = p2.n_v = 12;
    p1.n_t = p2.n_t = 12;
    CHECK(mesh_obj(sample_mesh(p1)) == mesh_obj(sample_mesh(p2)));

    PlanarProfile a = plane_section(3.0, 1.0, 0.5, M_PI / 2.0, 101);
    PlanarProfile b = plane_section(3.0, 1.0, 0.5, M_PI / 2.0, 101);
    CHECK(planar_csv(a) == planar_csv(b));
    CHECK(planar_svg(a) == planar_svg(b));
}
