#include "glaeser/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "glaeser/io.hpp"

namespace glaeser {

namespace {

double parse_number(const io::ConfigEntry& e) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(e.value, &pos);
    } catch (const std::exception&) {
        throw ConfigError("line " + std::to_string(e.line) + ": key '" + e.key +
                          "' needs a number, got '" + e.value + "'");
    }
    if (pos != e.value.size()) {
        throw ConfigError("line " + std::to_string(e.line) + ": trailing junk in value '" +
                          e.value + "'");
    }
    return v;
}

const std::set<std::string> kKnownKeys = {
    "schema_version", "scenario", "f1", "f2", "f3", "f4",
    "c0", "c1", "c2", "resolution", "max_iterations",
    "stabilization_tol", "neighbor_radius", "kappa", "outputs", "out_dir"};

const std::set<std::string> kKnownOutputs = {"report", "selection-csv",
                                             "region-svg", "feasibility-grid"};

} // namespace

ScenarioConfig load_scenario_config(const std::string& path) {
    ScenarioConfig cfg;
    bool saw_version = false;
    bool saw_scenario = false;
    for (const io::ConfigEntry& e : io::parse_key_values(path)) {
        if (!kKnownKeys.count(e.key)) {
            throw ConfigError("line " + std::to_string(e.line) + ": unknown key '" +
                              e.key + "'");
        }
        if (e.key == "schema_version") {
            cfg.schema_version = static_cast<int>(parse_number(e));
            if (cfg.schema_version != 1) {
                throw ConfigError("line " + std::to_string(e.line) +
                                  ": unsupported schema_version " + e.value);
            }
            saw_version = true;
        } else if (e.key == "scenario") {
            if (e.value != "paper-2d" && e.value != "intro-1d") {
                throw ConfigError("line " + std::to_string(e.line) +
                                  ": scenario must be paper-2d or intro-1d");
            }
            cfg.scenario = e.value;
            saw_scenario = true;
        } else if (e.key == "f1") {
            cfg.f.f1 = parse_number(e);
        } else if (e.key == "f2") {
            cfg.f.f2 = parse_number(e);
        } else if (e.key == "f3") {
            cfg.f.f3 = parse_number(e);
        } else if (e.key == "f4") {
            cfg.f.f4 = parse_number(e);
        } else if (e.key == "c0") {
            cfg.c0 = parse_number(e);
        } else if (e.key == "c1") {
            cfg.c1 = parse_number(e);
        } else if (e.key == "c2") {
            cfg.c2 = parse_number(e);
        } else if (e.key == "resolution") {
            cfg.resolution = static_cast<long>(parse_number(e));
        } else if (e.key == "max_iterations") {
            cfg.max_iterations = static_cast<int>(parse_number(e));
        } else if (e.key == "stabilization_tol") {
            cfg.stabilization_tol = parse_number(e);
        } else if (e.key == "neighbor_radius") {
            cfg.neighbor_radius = parse_number(e);
        } else if (e.key == "kappa") {
            cfg.kappa = parse_number(e);
        } else if (e.key == "out_dir") {
            cfg.out_dir = e.value;
        } else if (e.key == "outputs") {
            cfg.outputs.clear();
            std::istringstream in(e.value);
            std::string item;
            while (std::getline(in, item, ',')) {
                const auto b = item.find_first_not_of(" \t");
                const auto en = item.find_last_not_of(" \t");
                if (b == std::string::npos) continue;
                item = item.substr(b, en - b + 1);
                if (!kKnownOutputs.count(item)) {
                    throw ConfigError("line " + std::to_string(e.line) +
                                      ": unknown output '" + item + "'");
                }
                cfg.outputs.push_back(item);
            }
        }
    }
    if (!saw_version) throw ConfigError("missing required key schema_version");
    if (!saw_scenario) throw ConfigError("missing required key scenario");
    return cfg;
}

AssembledScenario assemble(const ScenarioConfig& config) {
    AssembledScenario out;
    if (config.scenario == "paper-2d") {
        out.system = build_paper_system(config.f);
        const long res = config.resolution > 0 ? config.resolution : 65;
        out.grid = Grid::square({0.0, 0.0}, {1.0, 1.0}, res);
    } else if (config.scenario == "intro-1d") {
        const double c0 = config.c0, c1 = config.c1, c2 = config.c2;
        auto f = [c0, c1, c2](double x) { return c0 + x * (c1 + x * c2); };
        out.system = build_intro_system(f, std::abs(c1) + 2.0 * std::abs(c2),
                                        std::abs(c0) + std::abs(c1) + std::abs(c2));
        const long res = config.resolution > 0 ? config.resolution : 1025;
        out.grid = Grid::line(-1.0, 1.0, res);
    } else {
        throw ConfigError("unknown scenario '" + config.scenario + "'");
    }
    out.refinement.kappa =
        config.kappa > 0.0 ? config.kappa : default_kappa(out.system);
    if (config.neighbor_radius > 0.0) {
        out.refinement.neighbor_radius = config.neighbor_radius;
    }
    out.refinement.max_iterations = config.max_iterations;
    out.refinement.stabilization_tol = config.stabilization_tol;
    out.refinement.window = fiber_window(out.system);
    return out;
}

std::string selection_csv(const SelectionField& sel) {
    std::vector<std::vector<std::string>> rows;
    rows.reserve(sel.values.size());
    for (long node = 0; node < sel.grid.node_count(); ++node) {
        const Vec2 x = sel.grid.point(node % sel.grid.nx, node / sel.grid.nx);
        rows.push_back({io::format_double(x.x), io::format_double(x.y),
                        io::format_double(sel.values[node].x),
                        io::format_double(sel.values[node].y),
                        io::format_double(sel.residuals[node])});
    }
    return io::make_csv({"x1", "x2", "F1", "F2", "residual"}, rows);
}

std::string boundary_csv(const BoundaryScan& scan) {
    std::vector<std::vector<std::string>> rows;
    const int n = scan.resolution;
    const double dx = (scan.range.hi.x - scan.range.lo.x) / (n - 1);
    const double dy = (scan.range.hi.y - scan.range.lo.y) / (n - 1);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            rows.push_back({io::format_double(scan.range.lo.x + i * dx),
                            io::format_double(scan.range.lo.y + j * dy),
                            scan.feasible[static_cast<std::size_t>(j) * n + i] ? "1" : "0"});
        }
    }
    return io::make_csv({"f2", "f4", "feasible"}, rows);
}

std::string boundary_svg(const BoundaryScan& scan) {
    io::SvgBuilder svg(scan.range);
    const int n = scan.resolution;
    const double dx = (scan.range.hi.x - scan.range.lo.x) / (n - 1);
    const double dy = (scan.range.hi.y - scan.range.lo.y) / (n - 1);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            if (!scan.feasible[static_cast<std::size_t>(j) * n + i]) continue;
            const double x = scan.range.lo.x + i * dx;
            const double y = scan.range.lo.y + j * dy;
            svg.add_rect(Box{{x - 0.5 * dx, y - 0.5 * dy}, {x + 0.5 * dx, y + 0.5 * dy}},
                         "#7fbf7f", 0.8);
        }
    }
    // Analytic boundary f4 = 1 + 1/(f2 - 1), sampled densely.
    std::vector<Vec2> curve;
    const int samples = 1024;
    for (int k = 0; k <= samples; ++k) {
        const double f2 = scan.range.lo.x + (scan.range.hi.x - scan.range.lo.x) * k / samples;
        if (f2 <= 1.0) continue;
        const double f4 = 1.0 + 1.0 / (f2 - 1.0);
        if (f4 < scan.range.lo.y || f4 > scan.range.hi.y) continue;
        curve.push_back({f2, f4});
    }
    svg.add_polyline(curve, "#202020", 0.01);
    return svg.str();
}

std::string regions_svg(const ConstantData& f, const Box& window,
                        const Polygon* engine_origin_fiber) {
    io::SvgBuilder svg(window);
    const Feasibility verdict = feasibility_constant(f);
    if (f.f1 >= 0.0) {
        svg.add_rect(Box{{window.lo.x, window.lo.y}, {f.f1, f.f1}}, "#9fc5e8", 0.35);
    }
    if (f.f2 >= 0.0) {
        svg.add_rect(Box{{window.lo.x, -f.f2}, {f.f2, window.hi.y}}, "#b6d7a8", 0.35);
    }
    if (f.f4 >= 0.0) {
        svg.add_rect(Box{{-f.f4, window.lo.y}, {window.hi.x, f.f4}}, "#ffe599", 0.35);
    }
    if (f.f3 < 0.0) {
        const double M = -f.f3;
        std::vector<Vec2> curve;
        const int samples = 1024;
        for (int k = 1; k <= samples; ++k) {
            const double y1 = M + (window.hi.x - M) * k / samples;
            if (y1 <= M) continue;
            const double y2 = W(y1, M);
            if (y2 > window.hi.y) continue;
            curve.push_back({y1, y2});
        }
        svg.add_polyline(curve, "#cc0000", 0.02);
    } else {
        svg.add_polyline({{-f.f3, window.hi.y}, {-f.f3, -f.f3}, {window.hi.x, -f.f3}},
                         "#cc0000", 0.02);
    }
    if (engine_origin_fiber && !engine_origin_fiber->empty()) {
        svg.add_polyline(engine_origin_fiber->pts, "#3d00cc", 0.02, true);
    }
    if (!verdict.feasible) {
        svg.add_text({window.lo.x + 0.05 * (window.hi.x - window.lo.x),
                      window.hi.y - 0.08 * (window.hi.y - window.lo.y)},
                     "infeasible", 0.05 * (window.hi.y - window.lo.y));
    }
    return svg.str();
}

RunResult run_scenario(const ScenarioConfig& config) {
    RunResult result;
    AssembledScenario as = assemble(config);
    const Bundle initial = build_initial_bundle(as.system, as.grid);
    auto [stable, report] = refine_to_stable(initial, as.refinement);
    result.report = report;
    if (config.scenario == "paper-2d") {
        result.analytic = feasibility_constant(config.f);
    }

    std::ostringstream rep;
    rep << "scenario: " << config.scenario << "\n";
    rep << "grid: " << as.grid.nx << (as.grid.domain_dim == 2 ? " x " + std::to_string(as.grid.ny) : std::string{}) << " nodes\n";
    rep << "kappa: " << io::format_double(as.refinement.kappa) << "\n";
    rep << "iterations: " << report.iterations_run
        << " stabilized: " << (report.stabilized ? "yes" : "no") << "\n";
    rep << "empty fibers: " << report.empty_nodes.size() << "\n";
    for (std::size_t i = 0; i < report.per_iteration_change.size(); ++i) {
        rep << "iteration " << (i + 1)
            << " max fiber change: " << io::format_double(report.per_iteration_change[i])
            << "\n";
    }

    SelectionField sel;
    bool have_selection = false;
    if (!report.stabilized) {
        result.exit_code = 2;
        result.verdict = "not stabilized within max_iterations";
    } else if (!report.empty_nodes.empty()) {
        result.exit_code = 1;
        result.verdict = "infeasible: refinement emptied " +
                         std::to_string(report.empty_nodes.size()) + " fiber(s)";
        if (result.analytic && !result.analytic->feasible) {
            rep << "analytic cause: " << result.analytic->cause << "\n";
        }
    } else {
        result.exit_code = 0;
        result.verdict = "feasible: all fibers nonempty after stabilization";
        sel = construct_selection(stable, as.refinement.window);
        const double tol =
            2.0 * as.refinement.epsilon_of_r(as.grid.spacing());
        VerifyReport vr = verify_selection(sel, as.system, tol);
        modulus_of_continuity(sel);
        result.verify = vr;
        have_selection = true;
        rep << "selection max violation (nodes): "
            << io::format_double(vr.max_violation_nodes) << "\n";
        rep << "selection max violation (fine grid): "
            << io::format_double(vr.max_violation_fine) << "\n";
        rep << "selection verification tol: " << io::format_double(tol)
            << " pass: " << (vr.pass ? "yes" : "no") << "\n";
        if (result.analytic && result.analytic->witness) {
            rep << "analytic witness: (" << io::format_double(result.analytic->witness->x)
                << ", " << io::format_double(result.analytic->witness->y) << ")\n";
        }
    }
    rep << "verdict: " << result.verdict << "\n";
    if (result.analytic) {
        rep << "analytic verdict: "
            << (result.analytic->feasible ? "feasible" : "infeasible") << " ("
            << result.analytic->cause << ")\n";
    }

    for (const std::string& output : config.outputs) {
        const std::string base = config.out_dir + "/" + config.scenario;
        if (output == "report") {
            const std::string path = base + "-report.txt";
            io::write_text_atomic(path, rep.str());
            result.artifacts.push_back(path);
        } else if (output == "selection-csv" && have_selection) {
            const std::string path = base + "-selection.csv";
            io::write_text_atomic(path, selection_csv(sel));
            result.artifacts.push_back(path);
        } else if (output == "feasibility-grid") {
            const std::vector<std::string> header =
                as.grid.domain_dim == 2
                    ? std::vector<std::string>{"x1", "x2", "nonempty"}
                    : std::vector<std::string>{"x", "nonempty"};
            std::vector<std::vector<std::string>> rows;
            for (long iy = 0; iy < as.grid.ny; ++iy) {
                for (long ix = 0; ix < as.grid.nx; ++ix) {
                    const Vec2 x = as.grid.point(ix, iy);
                    const long i = as.grid.node_index(ix, iy);
                    const bool nonempty =
                        !is_empty(stable.fibers[static_cast<std::size_t>(i)]);
                    std::vector<std::string> row{io::format_double(x.x)};
                    if (as.grid.domain_dim == 2)
                        row.push_back(io::format_double(x.y));
                    row.push_back(nonempty ? "1" : "0");
                    rows.push_back(std::move(row));
                }
            }
            const std::string path = base + "-feasibility.csv";
            io::write_text_atomic(path, io::make_csv(header, rows));
            result.artifacts.push_back(path);
        } else if (output == "region-svg" && config.scenario == "paper-2d") {
            const long origin = as.grid.node_index(
                std::max(as.grid.zero_index_x(), 0L), std::max(as.grid.zero_index_y(), 0L));
            const Polygon fiber = realize(stable.fibers[origin], as.refinement.window);
            const std::string path = base + "-regions.svg";
            io::write_text_atomic(path, regions_svg(config.f, Box::square(5.0), &fiber));
            result.artifacts.push_back(path);
        }
    }
    return result;
}

} // namespace glaeser
