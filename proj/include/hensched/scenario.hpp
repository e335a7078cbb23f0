#ifndef HENSCHED_SCENARIO_HPP
#define HENSCHED_SCENARIO_HPP

#include <string>
#include <vector>

#include "hensched/fouling.hpp"
#include "hensched/hen_core.hpp"

namespace hensched {

// Eq.-9 style cost coefficients; energies integrate over step_duration.
struct CostCoefficients {
    double energy_price_per_j = 0.0;       // C_E
    double cleaning_cost_per_action = 0.0; // C_cl, uniform default
    double pump_energy_price_per_j = 0.0;  // C_p
    double step_duration_s = 0.0;          // seconds per month
};

// Extra pumping power grows linearly with normalized fouling resistance.
struct PumpingModel {
    double base_power_w = 0.0;
    double fouling_coefficient_w = 0.0;
};

// Everything describing one exchanger in the scenario.
struct ExchangerEntry {
    std::string id;
    ExchangerGeometry geometry;
    FoulingParams fouling;
    PumpingModel pumping;
    double r_f_outer_static_m2kw = 0.0;
    double cleaning_cost = -1.0;  // < 0 means "use the uniform coefficient"
};

// The full problem instance: exchangers, wiring, prices, horizon.
struct Scenario {
    std::vector<ExchangerEntry> exchangers;  // ordered as in topology.cold_path
    NetworkTopology topology;
    CostCoefficients costs;
    int horizon_months = 44;

    std::size_t exchanger_count() const { return exchangers.size(); }
    double cleaning_cost_of(std::size_t i) const {
        const double c = exchangers[i].cleaning_cost;
        return c >= 0.0 ? c : costs.cleaning_cost_per_action;
    }
};

}  // namespace hensched

#endif
