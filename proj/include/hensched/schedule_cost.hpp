#ifndef HENSCHED_SCHEDULE_COST_HPP
#define HENSCHED_SCHEDULE_COST_HPP

#include <cstdint>
#include <vector>

#include "hensched/scenario.hpp"

namespace hensched {

// Per-exchanger cleaning intervals decoded into the binary status matrix.
// y[n][t-1] = 0 exactly when month t is a positive multiple of intervals[n];
// interval 0 (or > horizon) means the exchanger is never cleaned.
struct CleaningSchedule {
    std::vector<int> intervals;
    std::vector<std::vector<std::uint8_t>> matrix;  // [exchanger][month-1]

    int cleaning_count(std::size_t n) const;
    std::set<int> clean_steps(std::size_t n) const;
};

// Cost accounting for one simulated run; total_j = loss + cleaning + pumping.
struct CostBreakdown {
    double recovered_energy_value = 0.0;
    double energy_loss_cost = 0.0;
    double cleaning_cost_total = 0.0;
    double pumping_cost_total = 0.0;
    double total_j = 0.0;
};

CleaningSchedule decode_intervals(const std::vector<int>& intervals, int horizon_months);

double pumping_power(const PumpingModel& model, double r_f, double asymptote);

// Simulates the network month by month under the decoded schedule (actual)
// and fully clean (ideal) conditions, accumulating the objective terms.
CostBreakdown evaluate_schedule(const Scenario& scenario, const std::vector<int>& intervals);

// Net benefit of `candidate` over `reference` on the same scenario.
double net_savings(const CostBreakdown& candidate, const CostBreakdown& reference);

// Fraction of the clean-vs-fouled potential captured by `candidate`.
double savings_fraction(const CostBreakdown& candidate, const CostBreakdown& fouled_ref,
                        const CostBreakdown& clean_ref);

// Continuous PSO position -> integer intervals: round to nearest, clamp to [0, 31].
std::vector<int> decode_position(const std::vector<double>& position);

}  // namespace hensched

#endif
