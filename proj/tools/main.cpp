#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "glaeser/io.hpp"
#include "glaeser/pipeline.hpp"

namespace {

int cmd_run(const std::string& config_path) {
    const glaeser::ScenarioConfig cfg = glaeser::load_scenario_config(config_path);
    const glaeser::RunResult result = glaeser::run_scenario(cfg);
    std::cout << result.verdict << "\n";
    for (const std::string& path : result.artifacts) {
        std::cout << "wrote " << path << "\n";
    }
    return result.exit_code;
}

int cmd_boundary_scan(double f1, double f3, double lo, double hi, int resolution,
                      const std::string& out_csv, const std::string& out_svg) {
    const glaeser::BoundaryScan scan =
        glaeser::boundary_scan(f1, f3, glaeser::Box{{lo, lo}, {hi, hi}}, resolution);
    std::cout << "boundary points: " << scan.boundary_points.size() << "\n";
    std::cout << "fit f4 = " << scan.fit_alpha << " + " << scan.fit_beta
              << "/(f2-1), rms " << scan.fit_rms << "\n";
    if (!out_csv.empty()) {
        glaeser::io::write_text_atomic(out_csv, glaeser::boundary_csv(scan));
        std::cout << "wrote " << out_csv << "\n";
    }
    if (!out_svg.empty()) {
        glaeser::io::write_text_atomic(out_svg, glaeser::boundary_svg(scan));
        std::cout << "wrote " << out_svg << "\n";
    }
    return 0;
}

int cmd_plot_regions(const std::vector<double>& f, double window, long resolution,
                     const std::string& out_svg) {
    const glaeser::ConstantData data{f[0], f[1], f[2], f[3]};
    glaeser::ScenarioConfig cfg;
    cfg.scenario = "paper-2d";
    cfg.f = data;
    cfg.resolution = resolution;
    const glaeser::AssembledScenario as = glaeser::assemble(cfg);
    const glaeser::Bundle initial = glaeser::build_initial_bundle(as.system, as.grid);
    auto [stable, report] = glaeser::refine_to_stable(initial, as.refinement);
    const long origin = as.grid.node_index(as.grid.zero_index_x(), as.grid.zero_index_y());
    const glaeser::Polygon fiber =
        glaeser::realize(stable.fibers[origin], as.refinement.window);
    glaeser::io::write_text_atomic(
        out_svg, glaeser::regions_svg(data, glaeser::Box::square(window),
                                      fiber.empty() ? nullptr : &fiber));
    std::cout << "wrote " << out_svg << "\n";
    return 0;
}

int cmd_verify_selection(const std::string& config_path) {
    const glaeser::ScenarioConfig cfg = glaeser::load_scenario_config(config_path);
    const glaeser::RunResult result = glaeser::run_scenario(cfg);
    if (result.verify) {
        std::cout << "max violation (nodes): " << result.verify->max_violation_nodes
                  << "\n";
        std::cout << "max violation (fine grid): " << result.verify->max_violation_fine
                  << "\n";
        std::cout << (result.verify->pass ? "PASS" : "FAIL") << "\n";
        return result.verify->pass ? 0 : 1;
    }
    std::cout << "no selection constructed: " << result.verdict << "\n";
    return result.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Continuous-solution feasibility via iterated fiber refinement"};
    app.require_subcommand(1);

    std::string config_path;
    auto* run = app.add_subcommand("run", "run a scenario config end to end");
    run->add_option("--config", config_path, "key=value scenario config")->required();

    double f1 = 3.0, f3 = -1.0, lo = 1.0, hi = 3.0;
    int resolution = 128;
    std::string out_csv, out_svg;
    auto* scan = app.add_subcommand(
        "boundary-scan", "classify constant data (f2, f4) by feasibility");
    scan->add_option("--f1", f1, "constant f1");
    scan->add_option("--f3", f3, "constant f3");
    scan->add_option("--min", lo, "range minimum for f2 and f4");
    scan->add_option("--max", hi, "range maximum for f2 and f4");
    scan->add_option("--resolution", resolution, "nodes per axis (>= 16)");
    scan->add_option("--out-csv", out_csv, "verdict grid CSV path");
    scan->add_option("--out-svg", out_svg, "heatmap + analytic curve SVG path");

    std::vector<double> fvec{3.0, 2.0, -1.0, 2.0};
    double window = 5.0;
    long plot_res = 65;
    std::string plot_svg = "regions.svg";
    auto* plot = app.add_subcommand(
        "plot-regions", "draw the analytic origin-fiber regions and the engine fiber");
    plot->add_option("--f", fvec, "constant data f1 f2 f3 f4")->expected(4);
    plot->add_option("--window", window, "plot window halfwidth");
    plot->add_option("--resolution", plot_res, "engine grid resolution");
    plot->add_option("--out-svg", plot_svg, "output SVG path");

    std::string verify_config;
    auto* verify = app.add_subcommand(
        "verify-selection", "run a scenario and report selection verification");
    verify->add_option("--config", verify_config, "key=value scenario config")->required();

    try {
        app.parse(argc, argv);
        if (run->parsed()) return cmd_run(config_path);
        if (scan->parsed()) {
            return cmd_boundary_scan(f1, f3, lo, hi, resolution, out_csv, out_svg);
        }
        if (plot->parsed()) return cmd_plot_regions(fvec, window, plot_res, plot_svg);
        if (verify->parsed()) return cmd_verify_selection(verify_config);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const glaeser::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
