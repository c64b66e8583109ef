// Command-line front end: generate meshes and profiles, verify the constant
// curvature-ratio property, build top-view polynomials, classify shapes.

#include <chrono>
#include <cstdlib>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <fmt/core.h>
#include <json.hpp>

#include "crpc/diffgeo.hpp"
#include "crpc/io.hpp"
#include "crpc/planar.hpp"
#include "crpc/topview.hpp"

using nlohmann::json;

namespace {

crpc::Tolerances tolerances_from_env() {
    crpc::Tolerances tol;
    const char* profile = std::getenv("CRPC_TOLERANCE_PROFILE");
    if (!profile || std::string(profile) == "default") return tol;
    std::string p(profile);
    double f;
    if (p == "strict")
        f = 0.1;
    else if (p == "loose")
        f = 100.0;
    else
        throw crpc::Error(crpc::errc::invalid_config,
                          "CRPC_TOLERANCE_PROFILE must be default, strict or loose");
    tol.root_rel *= f;
    tol.quad_abs *= f;
    tol.inversion_rel *= f;
    return tol;
}

struct CommonOpts {
    std::optional<double> a, k;
    double C = 1.0;
    double pitch = 0.5;
    std::string branch = "auto";

    void attach(CLI::App* cmd) {
        auto* oa = cmd->add_option("--a", a, "curvature ratio a");
        auto* ok = cmd->add_option("--k", k, "invariant k = |1-a|/|1+a|");
        oa->excludes(ok);
        cmd->add_option("--C", C, "shape constant C")->capture_default_str();
        cmd->add_option("--pitch", pitch, "pitch (output scale 2*pitch)")
            ->capture_default_str();
        cmd->add_option("--branch", branch, "auto|full|minus|plus")
            ->check(CLI::IsMember({"auto", "full", "minus", "plus"}))
            ->capture_default_str();
    }

    double resolve_k() const {
        if (a) return crpc::k_from_a(*a);
        if (k) return *k;
        throw crpc::Error(crpc::errc::invalid_config, "one of --a or --k is required");
    }

    crpc::BranchTag resolve_branch(double kk) const {
        if (branch == "full") return crpc::BranchTag::Full;
        if (branch == "minus") return crpc::BranchTag::Minus;
        if (branch == "plus") return crpc::BranchTag::Plus;
        return kk > 1.0 ? crpc::BranchTag::Full : crpc::BranchTag::Minus;
    }
};

std::pair<int, int> parse_grid(const std::string& grid) {
    auto x = grid.find('x');
    if (x == std::string::npos)
        throw crpc::Error(crpc::errc::invalid_config, "--grid expects NxM");
    return {std::stoi(grid.substr(0, x)), std::stoi(grid.substr(x + 1))};
}

std::pair<double, double> parse_range(const std::string& range) {
    auto c = range.find(':');
    if (c == std::string::npos)
        throw crpc::Error(crpc::errc::invalid_config, "--v-range expects lo:hi");
    return {std::stod(range.substr(0, c)), std::stod(range.substr(c + 1))};
}

json domain_json(const crpc::DomainInfo& dom) {
    json j{{"s0", dom.s0}};
    if (dom.s0_prime) j["s0_prime"] = *dom.s0_prime;
    if (dom.s_k) j["s_k"] = *dom.s_k;
    return j;
}

json certificate_json(const crpc::CertificateReport& cert) {
    return json{{"max_rel_deviation", cert.max_rel_deviation},
                {"argmax", {{"v", cert.argmax_v}, {"t", cert.argmax_t}}},
                {"grid", {{"n_v", cert.n_v}, {"n_t", cert.n_t}}},
                {"evaluated", cert.evaluated},
                {"excluded_points", cert.excluded_points},
                {"a_low", cert.a_low},
                {"a_high", cert.a_high},
                {"fd_only", cert.fd_only}};
}

const char* class_name(crpc::ShapeClass c) {
    switch (c) {
        case crpc::ShapeClass::OneSided: return "OneSided";
        case crpc::ShapeClass::AxisTouching: return "AxisTouching";
        default: return "SelfIntersecting";
    }
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty() || out_path == "-")
        fmt::print("{}", content);
    else
        crpc::atomic_write(out_path, content);
}

int run_generate(const CommonOpts& common, const std::string& grid,
                 const std::string& v_range, const std::string& out,
                 const std::string& profile_out, int profile_samples, bool mirror,
                 const crpc::Tolerances& tol) {
    double k = common.resolve_k();
    crpc::BranchTag tag = common.resolve_branch(k);
    crpc::GluedProfile prof =
        crpc::GluedProfile::make({k, common.C, common.pitch}, tag, tol);

    if (!out.empty()) {
        crpc::HelicalPatch patch{prof};
        patch.pitch = common.pitch;
        auto [nv, nt] = parse_grid(grid);
        patch.n_v = nv;
        patch.n_t = nt;
        auto [lo, hi] = parse_range(v_range);
        patch.v_range = {lo, hi};
        crpc::SurfaceMesh mesh = crpc::sample_mesh(patch);
        if (mirror)
            for (auto& v : mesh.vertices) v.y = -v.y;
        crpc::atomic_write(out, crpc::mesh_obj(mesh));
    }
    if (!profile_out.empty()) {
        auto samples = prof.sample(profile_samples);
        crpc::atomic_write(profile_out, crpc::profile_csv(samples, common.pitch));
    }
    return 0;
}

int run_verify(const CommonOpts& common, const std::string& grid, bool fd_only,
               double g_scale, int residual_samples, const std::string& out,
               const crpc::Tolerances& tol) {
    auto t_start = std::chrono::steady_clock::now();
    double k = common.resolve_k();
    crpc::BranchTag tag = common.resolve_branch(k);
    auto [nv, nt] = parse_grid(grid);

    crpc::DomainInfo dom = crpc::compute_domain(k, common.C, tol);
    crpc::CertificateReport cert =
        crpc::crpc_certificate(k, common.C, common.pitch, nv, nt, fd_only, tag, g_scale, tol);
    crpc::ResidualStats stats = crpc::residual_stats(k, common.C, residual_samples, tag, tol);

    double bound = fd_only ? 1e-4 : 1e-8;
    bool ok = cert.max_rel_deviation <= bound && stats.max_ode_residual <= 1e-9
              && stats.max_steiner_deviation <= 1e-8;

    json report{{"schema_version", 1},
                {"config",
                 {{"k", k},
                  {"C", common.C},
                  {"pitch", common.pitch},
                  {"branch", common.branch},
                  {"grid", grid},
                  {"fd_only", fd_only}}},
                {"domain", domain_json(dom)},
                {"certificate", certificate_json(cert)},
                {"residual_stats",
                 {{"max_ode_residual", stats.max_ode_residual},
                  {"max_steiner_deviation", stats.max_steiner_deviation},
                  {"samples", stats.samples}}},
                {"bound", bound},
                {"passed", ok}};
    if (k > 1.0) {
        auto cls = crpc::classify_shape(k, common.C, tol);
        report["classification"] = {{"class", class_name(cls.cls)}, {"C_k", cls.C_k}};
    } else {
        report["cusp"] = {{"s_k", *dom.s_k},
                          {"t_k", crpc::t_of_s(*dom.s_k, k, common.C, tol)}};
    }
    auto t_end = std::chrono::steady_clock::now();
    report["timings"] = {
        {"total_ms",
         std::chrono::duration_cast<std::chrono::milliseconds>(t_end - t_start).count()}};

    emit(out, report.dump(2) + "\n");
    return ok ? 0 : 1;
}

int run_topview(const CommonOpts& common, int n, int m, bool symbolic_C,
                const std::string& out, const std::string& format, int samples,
                const crpc::Tolerances& tol) {
    std::optional<crpc::Rational> cval;
    double c_num = common.C;
    if (!symbolic_C) cval = crpc::Rational(c_num); // the double is an exact rational
    crpc::MultiPoly poly = crpc::build_implicit_polynomial(n, m, cval);

    double residual = 0.0;
    double kk = double(n) / m;
    crpc::BranchTag tag = kk > 1.0 ? crpc::BranchTag::Full : crpc::BranchTag::Minus;
    crpc::GluedProfile prof = crpc::GluedProfile::make({kk, c_num, 0.5}, tag, tol);
    auto pts = crpc::topview_samples(prof, samples);
    residual = crpc::topview_residual(poly, pts, symbolic_C ? c_num : 1.0);

    if (!out.empty())
        crpc::atomic_write(out, format == "json" ? crpc::poly_json(poly) + "\n"
                                                 : crpc::poly_text(poly));
    json report{{"n", n},
                {"m", m},
                {"C", symbolic_C ? json("symbolic") : json(c_num)},
                {"degree_xy", poly.degree_xy()},
                {"degree_bound", 4 * (3 * m + n)},
                {"terms", poly.terms().size()},
                {"residual", residual}};
    fmt::print("{}\n", report.dump(2));
    return 0;
}

int run_classify(const CommonOpts& common, const crpc::Tolerances& tol) {
    double k = common.resolve_k();
    auto cls = crpc::classify_shape(k, common.C, tol);
    json out{{"class", class_name(cls.cls)}, {"C", cls.C}, {"C_k", cls.C_k}};
    if (cls.cls == crpc::ShapeClass::SelfIntersecting) {
        auto si = crpc::self_intersection(k, common.C, common.pitch, tol);
        out["self_intersection"] = {{"y", si->y}, {"z", si->z}, {"s", si->s_preimage}};
    }
    fmt::print("{}\n", out.dump(2));
    return 0;
}

int run_profile(const CommonOpts& common, double plane_angle, int samples,
                const std::string& out, const std::string& format,
                const crpc::Tolerances& tol) {
    double k = common.resolve_k();
    std::optional<crpc::BranchTag> tag;
    if (common.branch != "auto") tag = common.resolve_branch(k);
    crpc::PlanarProfile prof =
        crpc::plane_section(k, common.C, common.pitch, plane_angle, samples, tag, tol);
    std::string body = format == "svg" ? crpc::planar_svg(prof) : crpc::planar_csv(prof);
    emit(out, body);
    return 0;
}

int run_report(const CommonOpts& common, const std::string& grid, int residual_samples,
               const std::string& out, const crpc::Tolerances& tol) {
    return run_verify(common, grid, false, 1.0, residual_samples, out, tol);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"helical constant-ratio-of-principal-curvatures surface toolkit"};
    app.require_subcommand(1);
    app.set_config("--config");

    crpc::Tolerances tol;

    CommonOpts gen_c, ver_c, top_c, cls_c, pro_c, rep_c;

    auto* gen = app.add_subcommand("generate", "write a mesh (OBJ) and/or profile CSV");
    gen_c.attach(gen);
    std::string gen_grid = "32x32", gen_vrange = "0:6.283185307179586";
    std::string gen_out, gen_profile_out;
    int gen_profile_samples = 256;
    bool gen_mirror = false;
    gen->add_option("--grid", gen_grid, "mesh resolution NxM")->capture_default_str();
    gen->add_option("--v-range", gen_vrange, "rotation interval lo:hi")
        ->capture_default_str();
    gen->add_option("--out", gen_out, "OBJ output path");
    gen->add_option("--profile-out", gen_profile_out, "profile CSV output path");
    gen->add_option("--profile-samples", gen_profile_samples)->capture_default_str();
    gen->add_flag("--mirror", gen_mirror, "reflect through the (x,z)-plane");

    auto* ver = app.add_subcommand("verify", "certify the curvature-ratio property");
    ver_c.attach(ver);
    std::string ver_grid = "64x64", ver_out;
    bool ver_fd = false;
    double ver_g_scale = 1.0;
    int ver_res_samples = 1000;
    ver->add_option("--grid", ver_grid)->capture_default_str();
    ver->add_flag("--fd-only", ver_fd, "finite-difference partials only");
    ver->add_option("--g-scale", ver_g_scale, "profile tamper factor (testing)")
        ->capture_default_str();
    ver->add_option("--residual-samples", ver_res_samples)->capture_default_str();
    ver->add_option("--out", ver_out, "report path (default stdout)");

    auto* top = app.add_subcommand("topview", "exact implicit top-view polynomial");
    top_c.attach(top);
    int top_n = 0, top_m = 0, top_samples = 200;
    bool top_symbolic = false;
    std::string top_out, top_format = "text";
    top->add_option("--n", top_n, "numerator of k = n/m")->required();
    top->add_option("--m", top_m, "denominator of k = n/m")->required();
    top->add_flag("--symbolic-C", top_symbolic, "keep C as a variable");
    top->add_option("--out", top_out, "polynomial output path");
    top->add_option("--format", top_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    top->add_option("--samples", top_samples)->capture_default_str();

    auto* cls = app.add_subcommand("classify", "shape class by C against C_k");
    cls_c.attach(cls);

    auto* pro = app.add_subcommand("profile", "planar section through the axis");
    pro_c.attach(pro);
    double pro_angle = M_PI / 2.0; // the (y,z)-plane
    int pro_samples = 1000;
    std::string pro_out, pro_format = "csv";
    pro->add_option("--plane-angle", pro_angle, "section plane angle (radians)")
        ->capture_default_str();
    pro->add_option("--samples", pro_samples)->capture_default_str();
    pro->add_option("--out", pro_out, "output path (default stdout)");
    pro->add_option("--format", pro_format, "csv|svg")
        ->check(CLI::IsMember({"csv", "svg"}))
        ->capture_default_str();

    auto* rep = app.add_subcommand("report", "full verification report");
    rep_c.attach(rep);
    std::string rep_grid = "64x64", rep_out;
    int rep_res_samples = 1000;
    rep->add_option("--grid", rep_grid)->capture_default_str();
    rep->add_option("--residual-samples", rep_res_samples)->capture_default_str();
    rep->add_option("--out", rep_out, "report path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() != 0) {
            json err{{"error", "invalid_config"}, {"message", e.what()}};
            fmt::print(stderr, "{}\n", err.dump());
            return 2;
        }
        return app.exit(e); // --help and friends
    }

    try {
        tol = tolerances_from_env();
        if (gen->parsed())
            return run_generate(gen_c, gen_grid, gen_vrange, gen_out, gen_profile_out,
                                gen_profile_samples, gen_mirror, tol);
        if (ver->parsed())
            return run_verify(ver_c, ver_grid, ver_fd, ver_g_scale, ver_res_samples,
                              ver_out, tol);
        if (top->parsed())
            return run_topview(top_c, top_n, top_m, top_symbolic, top_out, top_format,
                               top_samples, tol);
        if (cls->parsed()) return run_classify(cls_c, tol);
        if (pro->parsed())
            return run_profile(pro_c, pro_angle, pro_samples, pro_out, pro_format, tol);
        if (rep->parsed())
            return run_report(rep_c, rep_grid, rep_res_samples, rep_out, tol);
    } catch (const crpc::Error& e) {
        json err{{"error", crpc::errc_name(e.code())}, {"message", e.what()}};
        fmt::print(stderr, "{}\n", err.dump());
        switch (e.code()) {
            case crpc::errc::invalid_config:
            case crpc::errc::degenerate_ratio:
            case crpc::errc::invalid_k:
            case crpc::errc::branch_mismatch: return 2;
            default: return 3;
        }
    } catch (const std::exception& e) {
        json err{{"error", "internal"}, {"message", e.what()}};
        fmt::print(stderr, "{}\n", err.dump());
        return 3;
    }
    return 0;
}
