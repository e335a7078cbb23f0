#include "hensched/schedule_cost.hpp"

#include <algorithm>
#include <cmath>

namespace hensched {

int CleaningSchedule::cleaning_count(std::size_t n) const {
    const auto& row = matrix[n];
    return static_cast<int>(std::count(row.begin(), row.end(), std::uint8_t{0}));
}

std::set<int> CleaningSchedule::clean_steps(std::size_t n) const {
    std::set<int> steps;
    for (std::size_t t = 0; t < matrix[n].size(); ++t) {
        if (matrix[n][t] == 0) steps.insert(static_cast<int>(t) + 1);
    }
    return steps;
}

CleaningSchedule decode_intervals(const std::vector<int>& intervals, int horizon) {
    CleaningSchedule sched;
    sched.intervals = intervals;
    sched.matrix.assign(intervals.size(),
                        std::vector<std::uint8_t>(static_cast<std::size_t>(horizon), 1));
    for (std::size_t n = 0; n < intervals.size(); ++n) {
        const int d = intervals[n];
        if (d <= 0) continue;
        for (int t = d; t <= horizon; t += d) sched.matrix[n][t - 1] = 0;
    }
    return sched;
}

double pumping_power(const PumpingModel& model, double r_f, double asymptote) {
    const double normalized = asymptote > 0.0 ? r_f / asymptote : 0.0;
    return model.base_power_w + model.fouling_coefficient_w * normalized;
}

CostBreakdown evaluate_schedule(const Scenario& scenario, const std::vector<int>& intervals) {
    const std::size_t n_ex = scenario.exchanger_count();
    const int horizon = scenario.horizon_months;
    const CleaningSchedule sched = decode_intervals(intervals, horizon);

    std::vector<ResistanceTimeline> timelines(n_ex);
    std::vector<double> lmtd_f(n_ex), ua_clean(n_ex);
    for (std::size_t i = 0; i < n_ex; ++i) {
        const ExchangerEntry& ex = scenario.exchangers[i];
        timelines[i] = resistance_timeline(ex.fouling, sched.clean_steps(i), horizon);
        lmtd_f[i] = ex.geometry.lmtd_correction;
        ua_clean[i] = effective_ua(ex.geometry, 0.0, ex.r_f_outer_static_m2kw);
    }

    // Ideal duties: whole network clean, no bypasses; constant over the horizon.
    const std::vector<bool> no_bypass(n_ex, false);
    const auto ideal = solve_network(scenario.topology, ua_clean, no_bypass, lmtd_f);

    const double dt_s = scenario.costs.step_duration_s;
    const double c_e = scenario.costs.energy_price_per_j;
    const double c_p = scenario.costs.pump_energy_price_per_j;

    CostBreakdown out;
    std::vector<double> ua_actual(n_ex);
    std::vector<bool> bypass(n_ex);
    for (int t = 1; t <= horizon; ++t) {
        for (std::size_t i = 0; i < n_ex; ++i) {
            const ExchangerEntry& ex = scenario.exchangers[i];
            ua_actual[i] = effective_ua(ex.geometry, timelines[i].values[t - 1],
                                        ex.r_f_outer_static_m2kw);
            bypass[i] = sched.matrix[i][t - 1] == 0;
        }
        const auto actual = solve_network(scenario.topology, ua_actual, bypass, lmtd_f);

        for (std::size_t i = 0; i < n_ex; ++i) {
            if (bypass[i]) {
                out.cleaning_cost_total += scenario.cleaning_cost_of(i);
                continue;
            }
            const ExchangerEntry& ex = scenario.exchangers[i];
            out.energy_loss_cost += c_e * (ideal[i].duty_w - actual[i].duty_w) * dt_s;
            out.recovered_energy_value += c_e * actual[i].duty_w * dt_s;
            out.pumping_cost_total +=
                c_p * pumping_power(ex.pumping, timelines[i].values[t - 1],
                                    ex.fouling.asymptote_m2kw) * dt_s;
        }
    }
    out.total_j = out.energy_loss_cost + out.cleaning_cost_total + out.pumping_cost_total;
    return out;
}

double net_savings(const CostBreakdown& candidate, const CostBreakdown& reference) {
    const double cand = candidate.recovered_energy_value - candidate.cleaning_cost_total
                      - candidate.pumping_cost_total;
    const double ref = reference.recovered_energy_value - reference.cleaning_cost_total
                     - reference.pumping_cost_total;
    return cand - ref;
}

double savings_fraction(const CostBreakdown& candidate, const CostBreakdown& fouled_ref,
                        const CostBreakdown& clean_ref) {
    const double denom = net_savings(clean_ref, fouled_ref);
    if (denom <= 0.0) {
        throw DegenerateReference("clean reference provides no savings over fouled reference");
    }
    return net_savings(candidate, fouled_ref) / denom;
}

std::vector<int> decode_position(const std::vector<double>& position) {
    std::vector<int> intervals(position.size());
    for (std::size_t i = 0; i < position.size(); ++i) {
        intervals[i] = std::clamp(static_cast<int>(std::lround(position[i])), 0, 31);
    }
    return intervals;
}

}  // namespace hensched
