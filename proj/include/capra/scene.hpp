#pragma once

#include "capra/json_io.hpp"

#include <optional>
#include <string>
#include <vector>

namespace capra {

struct ConjugacyConfig {
    std::string function = "l0";
    double dual_radius = 3.0;
    std::size_t dual_resolution = 201;
    std::size_t sphere_resolution = 720;
    double primal_radius = 2.0;
    std::size_t primal_resolution = 41;
};

struct MinimizeConfig {
    std::string function = "l0";
    std::size_t sphere_resolution = 1000;
};

struct SceneSet {
    enum class Kind { cone, point_set, polytope };
    std::string label;
    Kind kind = Kind::cone;
    std::optional<ConeSpec> cone;
    PointSet points;  // point_set / polytope inputs
};

/// Parsed scene file ("capra-scene/1"): sets, norm, analyses, tolerances.
struct Scene {
    std::size_t dimension = 2;
    SourceNorm norm = SourceNorm::l2();
    bool has_seed = false;
    std::uint64_t seed = 0;
    Tolerances tol;
    double oracle_tol = 1e-5;
    std::size_t samples = 10000;
    std::vector<SceneSet> sets;
    std::vector<std::string> analyses;
    ConjugacyConfig conj;
    MinimizeConfig mini;
};

/// force_exact: true rejects float coordinates, false parses everything as
/// float; unset infers the mode per vector (CAPRA_EXACT environment knob).
Scene scene_from_json(const Json& j, std::optional<bool> force_exact);
Scene scene_from_file(const std::string& path, std::optional<bool> force_exact);

struct RunOverrides {
    std::optional<SourceNorm> norm;
    std::optional<double> oracle_tol;
    std::optional<std::size_t> samples;
    std::optional<std::uint64_t> seed;
    std::vector<std::string> analyses;  // replaces the scene's list when nonempty
    bool want_svg = false;
};

struct SetOutput {
    std::string label;
    Json report;
    std::string svg;  // empty when not rendered
};

/// Decision/hull/oracle pipeline over all sets (parallel across sets); every
/// certificate is re-verified before the report is returned.
std::vector<SetOutput> run_scene(const Scene& scene, const RunOverrides& o);

/// Write with a temp file and rename, so readers never observe partial files.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace capra
