#ifndef HENSCHED_HEN_CORE_HPP
#define HENSCHED_HEN_CORE_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "hensched/errors.hpp"

namespace hensched {

// Thermal state of one stream at a network node.
struct StreamState {
    double temperature_k = 0.0;
    double mass_flow_kg_s = 0.0;
    double specific_heat_j_kgk = 0.0;

    double heat_capacity_rate() const { return mass_flow_kg_s * specific_heat_j_kgk; }
};

// Shell-and-tube geometry and film coefficients for one exchanger.
struct ExchangerGeometry {
    double area_m2 = 0.0;
    double d_outer_m = 0.0;
    double d_inner_m = 0.0;
    double wall_conductivity_w_mk = 0.0;
    double h_tube_w_m2k = 0.0;   // tube-side film coefficient
    double h_shell_w_m2k = 0.0;  // shell-side film coefficient
    double lmtd_correction = 1.0;
};

struct ExchangerResult {
    double t_cold_out_k = 0.0;
    double t_hot_out_k = 0.0;
    double duty_w = 0.0;
    double overall_u_w_m2k = 0.0;
};

// Wiring of the network: the cold (crude) stream visits every exchanger once
// in `cold_path` order; each exchanger sits on exactly one hot stream at a
// given visit position.
struct HotAssignment {
    std::string hot_stream;
    int visit_order = 1;  // 1-based position along the hot stream
};

struct NetworkTopology {
    std::vector<std::string> cold_path;
    std::map<std::string, HotAssignment> hot_assignments;  // exchanger id -> assignment
    StreamState cold_inlet;
    std::map<std::string, StreamState> hot_inlets;  // hot stream id -> boundary state
};

// Log-mean temperature difference of the two end differences.
// Throws TemperatureCross when either end difference is non-positive.
double lmtd(double dt_hot_end_k, double dt_cold_end_k);

// Overall heat-transfer coefficient referenced to the outer tube area,
// composed from film coefficients, wall conduction and fouling resistances.
double overall_u(const ExchangerGeometry& geom, double r_f_inner_m2kw,
                 double r_f_outer_m2kw);

// Closed-form counterflow outlet temperatures for one exchanger.
// `ua` is the fouled UA product in W/K, `f` the LMTD correction factor.
// `area_m2` (optional) lets the result carry U = ua/area for reporting.
ExchangerResult exchanger_outlets(const StreamState& cold_in, const StreamState& hot_in,
                                  double ua_w_k, double f, double area_m2 = 0.0);

// Steady-state solve of the whole network by repeated forward sweeps with
// fixed-point iteration on inter-exchanger hot temperatures.
// `per_exchanger_ua` and `bypassed` are indexed like `topo.cold_path`.
// Results come back in cold-path order.
std::vector<ExchangerResult> solve_network(const NetworkTopology& topo,
                                           const std::vector<double>& per_exchanger_ua,
                                           const std::vector<bool>& bypassed,
                                           const std::vector<double>& lmtd_corrections = {});

}  // namespace hensched

#endif
