#pragma once

#include <optional>
#include <string>
#include <vector>

#include "glaeser/counterexample.hpp"
#include "glaeser/refine.hpp"
#include "glaeser/selection.hpp"

namespace glaeser {

/// Parsed scenario configuration (key = value schema, schema_version 1).
struct ScenarioConfig {
    int schema_version = 1;
    std::string scenario; // "paper-2d" | "intro-1d"
    ConstantData f;       // paper-2d constant data
    /// intro-1d data polynomial f(x) = c0 + c1 x + c2 x^2
    double c0 = 0.0, c1 = 0.0, c2 = 0.0;
    long resolution = 0;          // 0 = scenario default
    int max_iterations = 8;
    double stabilization_tol = 1e-9;
    double neighbor_radius = -1.0; // <= 0 = unlimited
    double kappa = -1.0;           // <= 0 = scenario default
    std::vector<std::string> outputs{"report"};
    std::string out_dir = ".";
};

ScenarioConfig load_scenario_config(const std::string& path);

struct RunResult {
    /// 0 = feasible, 1 = infeasible (empty fiber), 2 = error/not stabilized.
    int exit_code = 2;
    std::string verdict;
    RefinementReport report;
    std::optional<Feasibility> analytic; // constant-data scenarios only
    std::optional<VerifyReport> verify;
    std::vector<std::string> artifacts;
};

/// Build the scenario, refine to stability, decide feasibility, construct
/// and verify a selection when feasible, and emit the requested artifacts.
RunResult run_scenario(const ScenarioConfig& config);

/// Scenario + grid + refinement config assembled from a ScenarioConfig.
struct AssembledScenario {
    ScenarioSystem system;
    Grid grid;
    RefinementConfig refinement;
};

AssembledScenario assemble(const ScenarioConfig& config);

/// Selection CSV (x1, x2, F1, F2, residual), byte-deterministic.
std::string selection_csv(const SelectionField& sel);

/// Verdict-grid CSV of a boundary scan (f2, f4, feasible).
std::string boundary_csv(const BoundaryScan& scan);

/// Heatmap + analytic hyperbola overlay SVG of a boundary scan.
std::string boundary_svg(const BoundaryScan& scan);

/// R1/R2/R4 boxes, the R3 hyperbola, and (optionally) the engine's origin
/// fiber polygon, drawn into the given window.
std::string regions_svg(const ConstantData& f, const Box& window,
                        const Polygon* engine_origin_fiber);

} // namespace glaeser
