// Scene-driven command line front end: decisions, conical-hull checks,
// conjugacy tables, sphere-restricted minimization, and SVG figures.
//
// Exit codes: 0 completed analysis (whatever the verdict), 2 schema error,
// 3 certificate re-verification failure.

#include "capra/conjugacy.hpp"
#include "capra/scene.hpp"
#include "capra/svg.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <iostream>

namespace {

using namespace capra;

std::optional<bool> exact_mode_from_env() {
    const char* v = std::getenv("CAPRA_EXACT");
    if (!v) return std::nullopt;
    std::string s(v);
    if (s == "1") return true;
    if (s == "0") return false;
    return std::nullopt;
}

SourceNorm parse_norm_flag(const std::string& s) {
    if (s == "l1") return SourceNorm::l1();
    if (s == "l2") return SourceNorm::l2();
    if (s == "linf") return SourceNorm::linf();
    if (s.rfind("p=", 0) == 0) return SourceNorm::lp(std::stod(s.substr(2)));
    throw SchemaError("--norm: expected l1, l2, linf or p=<x>");
}

struct CommonFlags {
    std::string scene_path;
    std::string norm;
    double tol = -1;
    long samples = -1;
    long long seed = -1;
    std::string report_path;
    std::string svg_path;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("scene", f.scene_path, "scene JSON file")->required();
    cmd->add_option("--norm", f.norm, "source norm: l1, l2, linf, p=<x>");
    cmd->add_option("--tol", f.tol, "oracle/float tolerance");
    cmd->add_option("--samples", f.samples, "oracle sample count");
    cmd->add_option("--seed", f.seed, "seed override");
    cmd->add_option("--report", f.report_path, "report JSON output path");
    cmd->add_option("--svg", f.svg_path, "SVG figure output path");
}

RunOverrides overrides_from(const CommonFlags& f) {
    RunOverrides o;
    if (!f.norm.empty()) o.norm = parse_norm_flag(f.norm);
    if (f.tol >= 0) o.oracle_tol = f.tol;
    if (f.samples >= 0) o.samples = static_cast<std::size_t>(f.samples);
    if (f.seed >= 0) o.seed = static_cast<std::uint64_t>(f.seed);
    o.want_svg = !f.svg_path.empty();
    return o;
}

void emit_reports(const std::vector<SetOutput>& outs, const CommonFlags& f, bool with_reports = true) {
    if (with_reports) {
        Json all = Json::array();
        for (const SetOutput& s : outs) all.push_back(s.report);
        std::string text = dump_json(all.size() == 1 ? all[0] : all);
        if (!f.report_path.empty())
            write_file_atomic(f.report_path, text);
        else
            std::cout << text;
    }
    if (!f.svg_path.empty()) {
        for (const SetOutput& s : outs) {
            if (s.svg.empty()) continue;
            std::string path = f.svg_path;
            if (outs.size() > 1) {
                auto dotpos = path.rfind('.');
                std::string stem = dotpos == std::string::npos ? path : path.substr(0, dotpos);
                std::string ext = dotpos == std::string::npos ? ".svg" : path.substr(dotpos);
                path = stem + "_" + s.label + ext;
            }
            write_file_atomic(path, s.svg);
        }
    }
}

int run_check(const CommonFlags& f, bool hull_mode) {
    auto scene = scene_from_file(f.scene_path, exact_mode_from_env());
    RunOverrides o = overrides_from(f);
    if (hull_mode) {
        o.analyses = {"conical_hull"};
    } else {
        o.analyses = {"decide"};
        for (const std::string& a : scene.analyses)
            if (a == "oracle") o.analyses.push_back("oracle");
    }
    emit_reports(run_scene(scene, o), f);
    return 0;
}

int run_fig(const CommonFlags& f) {
    auto scene = scene_from_file(f.scene_path, exact_mode_from_env());
    if (scene.dimension != 2) throw SchemaError("fig: d = 2 scenes only");
    CommonFlags f2 = f;
    if (f2.svg_path.empty()) f2.svg_path = "figure.svg";
    RunOverrides o = overrides_from(f2);
    o.analyses = {"decide"};
    o.want_svg = true;
    emit_reports(run_scene(scene, o), f2, /*with_reports=*/false);
    return 0;
}

std::string csv_row(const VecD& x, double v) {
    std::string row;
    char buf[40];
    for (double c : x) {
        std::snprintf(buf, sizeof buf, "%.17g", c == 0.0 ? 0.0 : c);
        row += buf;
        row += ",";
    }
    std::snprintf(buf, sizeof buf, "%.17g", v == 0.0 ? 0.0 : v);
    row += buf;
    row += "\n";
    return row;
}

int run_conj(const CommonFlags& f, const std::string& csv_prefix) {
    auto scene = scene_from_file(f.scene_path, exact_mode_from_env());
    SourceNorm norm = f.norm.empty() ? scene.norm : parse_norm_flag(f.norm);
    const ConjugacyConfig& c = scene.conj;
    if (c.function != "l0") throw SchemaError("conj: only the l0 function is wired to the CLI");

    std::size_t d = scene.dimension;
    std::vector<VecD> inner = sphere_grid(norm, c.sphere_resolution, d, scene.seed);
    std::vector<VecD> duals = box_grid(c.dual_radius, c.dual_resolution, d);
    std::vector<VecD> primal = box_grid(c.primal_radius, c.primal_resolution, d);
    SampledFunction f0 = make_l0(d, inner);

    std::vector<double> conj = capra_conjugate(f0, duals, norm);
    BiconjugateResult bi = capra_biconjugate(f0, primal, duals, norm);

    double max_gap = 0;
    for (std::size_t i = 0; i < primal.size(); ++i)
        max_gap = std::max(max_gap, std::fabs(bi.values[i] - f0.eval(primal[i])));

    std::string prefix = csv_prefix.empty() ? "conjugacy" : csv_prefix;
    std::string conj_csv, bi_csv;
    for (std::size_t j = 0; j < duals.size(); ++j) conj_csv += csv_row(duals[j], conj[j]);
    for (std::size_t i = 0; i < primal.size(); ++i) bi_csv += csv_row(primal[i], bi.values[i]);
    write_file_atomic(prefix + "_conjugate.csv", conj_csv);
    write_file_atomic(prefix + "_biconjugate.csv", bi_csv);

    Json summary;
    summary["schema"] = "capra-report/1";
    summary["function"] = "l0";
    summary["max_gap"] = max_gap;
    summary["eps_grid"] = bi.eps_grid;
    summary["resolution"] = c.dual_resolution;
    summary["norm"] = norm_to_json(norm);
    summary["seed"] = scene.seed;
    std::string text = dump_json(summary);
    if (!f.report_path.empty())
        write_file_atomic(f.report_path, text);
    else
        std::cout << text;
    return 0;
}

int run_min(const CommonFlags& f) {
    auto scene = scene_from_file(f.scene_path, exact_mode_from_env());
    SourceNorm norm = f.norm.empty() ? scene.norm : parse_norm_flag(f.norm);
    if (scene.mini.function != "l0") throw SchemaError("min: only the l0 function is wired to the CLI");

    Json all = Json::array();
    std::vector<VecD> grid = sphere_grid(norm, scene.mini.sphere_resolution, scene.dimension, scene.seed);
    SampledFunction f0 = make_l0(scene.dimension, grid);
    for (const SceneSet& s : scene.sets) {
        std::optional<ConeSpec> cone = s.cone;
        if (!cone) {
            std::vector<Vector> nonzero;
            for (const Vector& p : s.points.points())
                if (!p.is_zero()) nonzero.push_back(p);
            cone = s.kind == SceneSet::Kind::polytope
                       ? ConeSpec::polytope_cone(PointSet::of(std::move(nonzero)), s.points.contains_zero())
                       : ConeSpec::ray_fan(PointSet::of(std::move(nonzero)), s.points.contains_zero());
        }
        MinimizeResult r = minimize_over_cone(f0, *cone, norm, grid, f.tol >= 0 ? f.tol : 1e-9);
        Json j;
        j["schema"] = "capra-report/1";
        j["label"] = s.label;
        j["norm"] = norm_to_json(norm);
        j["value"] = std::isinf(r.value) ? Json("inf") : Json(r.value);
        if (r.direction) j["direction"] = vecd_to_json(*r.direction);
        j["sphere_sample_empty"] = r.sphere_sample_empty;
        j["seed"] = scene.seed;
        all.push_back(j);
    }
    std::string text = dump_json(all.size() == 1 ? all[0] : all);
    if (!f.report_path.empty())
        write_file_atomic(f.report_path, text);
    else
        std::cout << text;
    return 0;
}

void error_json(const char* kind, const std::string& what) {
    Json err;
    err["error"] = kind;
    err["message"] = what;
    std::cerr << dump_json(err);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Capra-convexity analysis of representable cones"};
    app.require_subcommand(1);

    CommonFlags f_check, f_hull, f_conj, f_min, f_fig;
    std::string csv_prefix;

    CLI::App* c_check = app.add_subcommand("check", "decide Capra-convexity per set");
    add_common(c_check, f_check);
    CLI::App* c_hull = app.add_subcommand("hull", "conical-hull sufficiency for point sets / polytopes");
    add_common(c_hull, f_hull);
    CLI::App* c_conj = app.add_subcommand("conj", "conjugate/biconjugate tables");
    add_common(c_conj, f_conj);
    c_conj->add_option("--csv", csv_prefix, "CSV output prefix");
    CLI::App* c_min = app.add_subcommand("min", "sphere-restricted minimization");
    add_common(c_min, f_min);
    CLI::App* c_fig = app.add_subcommand("fig", "SVG figure only");
    add_common(c_fig, f_fig);

    try {
        app.parse(argc, argv);
        if (c_check->parsed()) return run_check(f_check, false);
        if (c_hull->parsed()) return run_check(f_hull, true);
        if (c_conj->parsed()) return run_conj(f_conj, csv_prefix);
        if (c_min->parsed()) return run_min(f_min);
        if (c_fig->parsed()) return run_fig(f_fig);
        return 2;
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const capra::SchemaError& e) {
        error_json("schema", e.what());
        return 2;
    } catch (const capra::CertificateError& e) {
        error_json("certificate", e.what());
        return 3;
    } catch (const std::exception& e) {
        error_json("internal", e.what());
        return 1;
    }
}
