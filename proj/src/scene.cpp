#include "capra/scene.hpp"

#include "capra/svg.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace capra {

namespace {

Vector vector_from_json(const Json& arr, std::optional<bool> force_exact) {
    if (!arr.is_array() || arr.empty()) throw SchemaError("vector: expected a nonempty array");
    bool any_float = false;
    for (const Json& c : arr) {
        if (c.is_number_float()) any_float = true;
        else if (!c.is_number_integer() && !c.is_string())
            throw SchemaError("vector: coordinates must be numbers or rational strings");
    }
    bool exact = force_exact.value_or(!any_float);
    if (exact && any_float) throw SchemaError("vector: float coordinate with exact mode forced (CAPRA_EXACT=1)");
    if (exact) {
        VecR v;
        for (const Json& c : arr) v.push_back(rat_from_json(c));
        return Vector(std::move(v));
    }
    VecD v;
    for (const Json& c : arr) {
        if (c.is_number()) v.push_back(c.get<double>());
        else v.push_back(rat_to_double(rat_parse(c.get<std::string>())));
    }
    return Vector(std::move(v));
}

PointSet points_from_json(const Json& arr, std::size_t dim, std::optional<bool> force_exact,
                          const std::string& context) {
    if (!arr.is_array()) throw SchemaError(context + ": expected an array of vectors");
    std::vector<Vector> pts;
    for (const Json& p : arr) {
        Vector v = vector_from_json(p, force_exact);
        if (v.dim() != dim) throw SchemaError(context + ": vector dimension mismatch");
        pts.push_back(std::move(v));
    }
    return PointSet::of(std::move(pts));
}

VecR exact_vec_from_json(const Json& arr, const std::string& context) {
    if (!arr.is_array() || arr.empty()) throw SchemaError(context + ": expected a nonempty array");
    VecR v;
    for (const Json& c : arr) {
        if (c.is_number_float()) v.push_back(rat_from_double(c.get<double>()));
        else v.push_back(rat_from_json(c));
    }
    return v;
}

SceneSet set_from_json(const Json& j, std::size_t dim, std::optional<bool> force_exact) {
    check_keys(j, {"label", "set"}, "sets[]");
    if (!j.contains("label") || !j.contains("set")) throw SchemaError("sets[]: label and set required");
    SceneSet out;
    out.label = j.at("label").get<std::string>();
    const Json& s = j.at("set");
    std::string kind = s.value("kind", "");

    if (kind == "ray_fan" || kind == "convex_cone" || kind == "polytope_cone") {
        const char* field = kind == "polytope_cone" ? "vertices" : "generators";
        check_keys(s, {"kind", "generators", "vertices", "include_origin"}, "set");
        if (!s.contains(field)) throw SchemaError("set: missing \"" + std::string(field) + "\"");
        bool origin = s.value("include_origin", false);
        PointSet pts = points_from_json(s.at(field), dim, force_exact, "set." + std::string(field));
        out.kind = SceneSet::Kind::cone;
        if (kind == "ray_fan") out.cone = ConeSpec::ray_fan(std::move(pts), origin);
        else if (kind == "convex_cone") out.cone = ConeSpec::convex_cone(std::move(pts), origin, dim);
        else out.cone = ConeSpec::polytope_cone(std::move(pts), origin);
        return out;
    }
    if (kind == "affine_slice") {
        check_keys(s, {"kind", "A", "b", "bounds"}, "set");
        if (!s.contains("A") || !s.contains("b")) throw SchemaError("set: affine_slice requires A and b");
        std::vector<VecR> rows;
        for (const Json& r : s.at("A")) {
            VecR row = exact_vec_from_json(r, "set.A");
            if (row.size() != dim) throw SchemaError("set.A: row length mismatch");
            rows.push_back(std::move(row));
        }
        VecR b = exact_vec_from_json(s.at("b"), "set.b");
        std::optional<Box> bounds;
        if (s.contains("bounds")) {
            check_keys(s.at("bounds"), {"lo", "hi"}, "set.bounds");
            bounds = Box{exact_vec_from_json(s.at("bounds").at("lo"), "set.bounds.lo"),
                         exact_vec_from_json(s.at("bounds").at("hi"), "set.bounds.hi")};
        }
        out.kind = SceneSet::Kind::cone;
        out.cone = ConeSpec::affine_slice(std::move(rows), std::move(b), std::move(bounds));
        return out;
    }
    if (kind == "point_set" || kind == "polytope") {
        const char* field = kind == "point_set" ? "points" : "vertices";
        check_keys(s, {"kind", "points", "vertices"}, "set");
        if (!s.contains(field)) throw SchemaError("set: missing \"" + std::string(field) + "\"");
        out.kind = kind == "point_set" ? SceneSet::Kind::point_set : SceneSet::Kind::polytope;
        out.points = points_from_json(s.at(field), dim, force_exact, "set");
        return out;
    }
    throw SchemaError("set: unknown kind \"" + kind + "\"");
}

}  // namespace

Scene scene_from_json(const Json& j, std::optional<bool> force_exact) {
    if (!j.is_object()) throw SchemaError("scene: expected a JSON object");
    check_keys(j,
               {"schema", "dimension", "norm", "seed", "tolerances", "samples", "sets", "analyses", "conjugacy",
                "minimize"},
               "scene");
    if (j.value("schema", "") != std::string("capra-scene/1"))
        throw SchemaError("scene: schema must be \"capra-scene/1\"");
    Scene sc;
    if (!j.contains("dimension") || !j.at("dimension").is_number_integer())
        throw SchemaError("scene: integer dimension required");
    long d = j.at("dimension").get<long>();
    if (d < 1) throw SchemaError("scene: dimension >= 1 required");
    sc.dimension = static_cast<std::size_t>(d);
    if (j.contains("norm")) sc.norm = norm_from_json(j.at("norm"));
    if (j.contains("seed")) {
        sc.has_seed = true;
        sc.seed = j.at("seed").get<std::uint64_t>();
    }
    if (j.contains("tolerances")) {
        const Json& t = j.at("tolerances");
        check_keys(t, {"norm", "dot", "zero", "oracle"}, "tolerances");
        sc.tol.norm = t.value("norm", sc.tol.norm);
        sc.tol.dot = t.value("dot", sc.tol.dot);
        sc.tol.zero = t.value("zero", sc.tol.zero);
        sc.oracle_tol = t.value("oracle", sc.oracle_tol);
    }
    if (j.contains("samples")) sc.samples = j.at("samples").get<std::size_t>();
    if (!j.contains("sets") || !j.at("sets").is_array() || j.at("sets").empty())
        throw SchemaError("scene: nonempty sets[] required");
    for (const Json& s : j.at("sets")) sc.sets.push_back(set_from_json(s, sc.dimension, force_exact));
    if (j.contains("analyses")) {
        for (const Json& a : j.at("analyses")) {
            std::string name = a.get<std::string>();
            if (name != "decide" && name != "conical_hull" && name != "oracle" && name != "conjugacy" &&
                name != "minimize")
                throw SchemaError("scene: unknown analysis \"" + name + "\"");
            sc.analyses.push_back(name);
        }
    }
    if (sc.analyses.empty()) sc.analyses = {"decide"};
    if (j.contains("conjugacy")) {
        const Json& c = j.at("conjugacy");
        check_keys(c, {"function", "dual_radius", "dual_resolution", "sphere_resolution", "primal_radius",
                       "primal_resolution"},
                   "conjugacy");
        sc.conj.function = c.value("function", sc.conj.function);
        sc.conj.dual_radius = c.value("dual_radius", sc.conj.dual_radius);
        sc.conj.dual_resolution = c.value("dual_resolution", sc.conj.dual_resolution);
        sc.conj.sphere_resolution = c.value("sphere_resolution", sc.conj.sphere_resolution);
        sc.conj.primal_radius = c.value("primal_radius", sc.conj.primal_radius);
        sc.conj.primal_resolution = c.value("primal_resolution", sc.conj.primal_resolution);
    }
    if (j.contains("minimize")) {
        const Json& m = j.at("minimize");
        check_keys(m, {"function", "sphere_resolution"}, "minimize");
        sc.mini.function = m.value("function", sc.mini.function);
        sc.mini.sphere_resolution = m.value("sphere_resolution", sc.mini.sphere_resolution);
    }

    bool needs_seed = false;
    for (const std::string& a : sc.analyses)
        if (a == "oracle" || a == "conjugacy" || a == "minimize") needs_seed = true;
    if (needs_seed && !sc.has_seed) throw SchemaError("scene: seed is mandatory when oracle or grids are requested");
    return sc;
}

Scene scene_from_file(const std::string& path, std::optional<bool> force_exact) {
    std::ifstream in(path);
    if (!in) throw SchemaError("scene: cannot read \"" + path + "\"");
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw SchemaError(std::string("scene: JSON parse error: ") + e.what());
    }
    return scene_from_json(j, force_exact);
}

std::vector<SetOutput> run_scene(const Scene& scene, const RunOverrides& o) {
    SourceNorm norm = o.norm.value_or(scene.norm);
    double oracle_tol = o.oracle_tol.value_or(scene.oracle_tol);
    std::size_t samples = o.samples.value_or(scene.samples);
    std::uint64_t seed = o.seed.value_or(scene.seed);
    const std::vector<std::string>& analyses = o.analyses.empty() ? scene.analyses : o.analyses;

    auto wants = [&](const char* name) {
        for (const std::string& a : analyses)
            if (a == name) return true;
        return false;
    };

    std::vector<SetOutput> out(scene.sets.size());
    std::exception_ptr error;

    const long n_sets = static_cast<long>(scene.sets.size());
#pragma omp parallel for schedule(dynamic) if (n_sets > 1)
    for (long i = 0; i < n_sets; ++i) {
        try {
            const SceneSet& s = scene.sets[i];
            SetOutput& res = out[i];
            res.label = s.label;

            DecisionReport rep;
            std::optional<ConeSpec> cone = s.cone;
            if (wants("conical_hull") && s.kind != SceneSet::Kind::cone) {
                rep = decide_conical_hull(s.points, s.kind == SceneSet::Kind::polytope, norm);
            } else {
                if (!cone) {
                    // hull inputs decide on cone(X)
                    std::vector<Vector> nonzero;
                    for (const Vector& p : s.points.points())
                        if (!p.is_zero()) nonzero.push_back(p);
                    bool origin = s.points.contains_zero();
                    if (nonzero.empty())
                        cone = ConeSpec::convex_cone(PointSet{}, origin, scene.dimension);
                    else if (s.kind == SceneSet::Kind::polytope)
                        cone = ConeSpec::polytope_cone(PointSet::of(std::move(nonzero)), origin);
                    else
                        cone = ConeSpec::ray_fan(PointSet::of(std::move(nonzero)), origin);
                }
                rep = decide_capra_convex(*cone, norm);
            }

            if (!verify_certificate(rep, cone ? &*cone : nullptr))
                throw CertificateError("run_scene: certificate failed re-verification for set \"" + s.label + "\"");

            std::optional<OracleResult> oracle;
            if (wants("oracle") && cone && cone->dim() <= 4)
                oracle = sampling_oracle(*cone, norm, samples, oracle_tol, seed);

            res.report = report_to_json(rep, s.label, seed, oracle);
            if (o.want_svg && scene.dimension == 2) res.svg = render_svg(cone, norm);
        } catch (...) {
#pragma omp critical
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
    return out;
}

void write_file_atomic(const std::string& path, const std::string& content) {
    // renaming over devices or pipes would replace them; stream those directly
    std::error_code ec;
    auto status = std::filesystem::status(path, ec);
    if (!ec && std::filesystem::exists(status) && !std::filesystem::is_regular_file(status)) {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw Error("write_file_atomic: cannot open \"" + path + "\"");
        out << content;
        return;
    }
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("write_file_atomic: cannot open \"" + tmp + "\"");
        out << content;
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) throw Error("write_file_atomic: rename failed for \"" + path + "\"");
}

}  // namespace capra
