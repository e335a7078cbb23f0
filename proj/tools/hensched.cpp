#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hensched/run.hpp"
#include "hensched/scenario_io.hpp"

namespace {

std::vector<int> parse_intervals(const std::string& csv) {
    std::vector<int> out;
    std::istringstream in(csv);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        out.push_back(std::stoi(tok));
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Heat-exchanger-network cleaning schedule simulator and optimizer"};
    app.require_subcommand(1);

    std::string scenario_path, intervals_csv, out_dir, in_dir;
    hensched::OptimizeOptions opts;

    auto* simulate = app.add_subcommand("simulate", "Simulate a fixed cleaning schedule");
    simulate->add_option("--scenario", scenario_path, "Scenario JSON file")->required();
    simulate->add_option("--intervals", intervals_csv,
                         "Comma-separated cleaning intervals, one per exchanger")->required();
    simulate->add_option("--out", out_dir, "Output directory")->required();

    auto* optimize = app.add_subcommand("optimize", "Search cleaning intervals with PSO");
    optimize->add_option("--scenario", scenario_path, "Scenario JSON file")->required();
    optimize->add_option("--particles", opts.particles, "Swarm size");
    optimize->add_option("--iterations", opts.iterations, "Iteration count");
    optimize->add_option("--seed", opts.seed, "RNG seed");
    optimize->add_option("--out", out_dir, "Output directory")->required();

    auto* report = app.add_subcommand("report", "Summarize a run directory");
    report->add_option("--in", in_dir, "Artifacts directory")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (simulate->parsed()) {
            const hensched::Scenario sc = hensched::load_scenario(scenario_path);
            const std::vector<int> intervals = parse_intervals(intervals_csv);
            hensched::run_simulate(sc, intervals, out_dir);
        } else if (optimize->parsed()) {
            const hensched::Scenario sc = hensched::load_scenario(scenario_path);
            hensched::run_optimize(sc, opts, out_dir);
        } else if (report->parsed()) {
            hensched::run_report(in_dir, std::cout);
        }
    } catch (const hensched::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const hensched::DegenerateReference& e) {
        std::cerr << "degenerate reference: " << e.what() << "\n";
        return 2;
    } catch (const hensched::NoConvergence& e) {
        std::cerr << "model error: " << e.what() << "\n";
        return 3;
    } catch (const hensched::TemperatureCross& e) {
        std::cerr << "model error: " << e.what() << "\n";
        return 3;
    } catch (const hensched::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const hensched::MissingArtifact& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
