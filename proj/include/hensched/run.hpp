#ifndef HENSCHED_RUN_HPP
#define HENSCHED_RUN_HPP

#include <ostream>
#include <string>
#include <vector>

#include "hensched/pso.hpp"
#include "hensched/schedule_cost.hpp"
#include "hensched/scenario.hpp"

namespace hensched {

// Monthly duty of one exchanger under one simulated condition.
struct DutySample {
    int month = 0;
    std::string exchanger;
    std::string condition;  // "clean" | "fouled" | "scheduled"
    double duty_w = 0.0;
};

struct BreakdownTriplet {
    CostBreakdown clean;
    CostBreakdown fouled;
    CostBreakdown scheduled;
};

struct RunArtifacts {
    std::vector<int> gbest_intervals;
    std::vector<int> cleaning_counts;
    BreakdownTriplet breakdowns;
    std::vector<double> fitness_history;  // empty for plain simulate runs
    std::vector<DutySample> duty_series;
};

struct OptimizeOptions {
    int particles = 30;
    int iterations = 100;
    std::uint64_t seed = 0;
};

// Simulates the given schedule plus the clean and fouled references and writes
// schedule.csv, breakdown.json and duty_series.csv under `out_dir`.
RunArtifacts run_simulate(const Scenario& scenario, const std::vector<int>& intervals,
                          const std::string& out_dir);

// PSO search over the interval box followed by run_simulate on the best
// schedule; additionally writes fitness_history.csv and gbest.json.
RunArtifacts run_optimize(const Scenario& scenario, const OptimizeOptions& opts,
                          const std::string& out_dir);

// Reads breakdown.json from `in_dir` and prints the cost triplet, net savings
// and savings fraction.
void run_report(const std::string& in_dir, std::ostream& out);

}  // namespace hensched

#endif
