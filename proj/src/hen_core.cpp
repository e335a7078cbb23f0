#include "hensched/hen_core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hensched {

double lmtd(double dt1, double dt2) {
    if (dt1 <= 0.0 || dt2 <= 0.0) {
        std::ostringstream msg;
        msg << "temperature cross: end differences " << dt1 << " K / " << dt2 << " K";
        throw TemperatureCross(msg.str());
    }
    // Equal-ends limit of the log-mean.
    if (std::fabs(dt1 - dt2) <= 1e-9 * dt1) return dt1;
    return (dt1 - dt2) / std::log(dt1 / dt2);
}

double overall_u(const ExchangerGeometry& geom, double r_f_inner, double r_f_outer) {
    const double do_ = geom.d_outer_m;
    const double di = geom.d_inner_m;
    double inv_u = do_ / (di * geom.h_tube_w_m2k)
                 + do_ * r_f_inner / di
                 + do_ * std::log(do_ / di) / (2.0 * geom.wall_conductivity_w_mk)
                 + r_f_outer
                 + 1.0 / geom.h_shell_w_m2k;
    return 1.0 / inv_u;
}

ExchangerResult exchanger_outlets(const StreamState& cold_in, const StreamState& hot_in,
                                  double ua, double f, double area_m2) {
    ExchangerResult res;
    res.overall_u_w_m2k = area_m2 > 0.0 ? ua / area_m2 : 0.0;

    const double t_ci = cold_in.temperature_k;
    const double t_hi = hot_in.temperature_k;
    const double c_cold = cold_in.heat_capacity_rate();
    const double c_hot = hot_in.heat_capacity_rate();

    if (ua <= 0.0) {
        res.t_cold_out_k = t_ci;
        res.t_hot_out_k = t_hi;
        res.duty_w = 0.0;
        return res;
    }

    const double k1 = c_hot / c_cold;
    const double k2 = ua / c_hot;

    if (std::fabs(k1 - 1.0) < 1e-9) {
        // Balanced counterflow: effectiveness NTU/(1+NTU).
        const double eff = k2 * f / (1.0 + k2 * f);
        const double dt = eff * (t_hi - t_ci);
        res.t_cold_out_k = t_ci + dt;
        res.t_hot_out_k = t_hi - dt;
        res.duty_w = c_cold * dt;
        return res;
    }

    // Clamped exponent: past +/-700 the outlet ratios have saturated anyway.
    const double e = std::exp(std::clamp(-k2 * f * (k1 - 1.0), -700.0, 700.0));
    const double t_co = (k1 * (e - 1.0) * t_hi + (1.0 - k1) * e * t_ci) / (e - k1);

    res.t_cold_out_k = t_co;
    res.duty_w = c_cold * (t_co - t_ci);
    // Hot outlet from the energy balance; equivalent to the closed form with
    // a (1 - k1) coefficient on the hot inlet term.
    res.t_hot_out_k = t_hi - res.duty_w / c_hot;
    return res;
}

namespace {

struct HotChain {
    std::vector<std::size_t> members;  // cold-path indices, sorted by visit order
};

}  // namespace

std::vector<ExchangerResult> solve_network(const NetworkTopology& topo,
                                           const std::vector<double>& per_exchanger_ua,
                                           const std::vector<bool>& bypassed,
                                           const std::vector<double>& lmtd_corrections) {
    const std::size_t n = topo.cold_path.size();

    // Group exchangers by hot stream, ordered by visit position.
    std::map<std::string, HotChain> chains;
    for (std::size_t i = 0; i < n; ++i) {
        chains[topo.hot_assignments.at(topo.cold_path[i]).hot_stream].members.push_back(i);
    }
    for (auto& [id, chain] : chains) {
        std::sort(chain.members.begin(), chain.members.end(), [&](std::size_t a, std::size_t b) {
            return topo.hot_assignments.at(topo.cold_path[a]).visit_order
                 < topo.hot_assignments.at(topo.cold_path[b]).visit_order;
        });
    }

    // Hot inlet temperature estimate per exchanger; boundary temperature to start.
    std::vector<double> hot_in_temp(n);
    for (std::size_t i = 0; i < n; ++i) {
        hot_in_temp[i] =
            topo.hot_inlets.at(topo.hot_assignments.at(topo.cold_path[i]).hot_stream).temperature_k;
    }

    std::vector<ExchangerResult> results(n);
    const int max_sweeps = 500;
    const double tol_k = 1e-6;

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        // Forward sweep along the cold path with current hot inlet estimates.
        StreamState cold = topo.cold_inlet;
        for (std::size_t i = 0; i < n; ++i) {
            const std::string& id = topo.cold_path[i];
            StreamState hot = topo.hot_inlets.at(topo.hot_assignments.at(id).hot_stream);
            hot.temperature_k = hot_in_temp[i];

            if (bypassed[i]) {
                results[i] = ExchangerResult{cold.temperature_k, hot.temperature_k, 0.0, 0.0};
            } else {
                const double f = lmtd_corrections.empty() ? 1.0 : lmtd_corrections[i];
                results[i] = exchanger_outlets(cold, hot, per_exchanger_ua[i], f);
                if (results[i].duty_w != 0.0) {
                    // Feasibility of the driving force at the solved operating point.
                    lmtd(hot.temperature_k - results[i].t_cold_out_k,
                         results[i].t_hot_out_k - cold.temperature_k);
                }
            }
            cold.temperature_k = results[i].t_cold_out_k;
        }

        // Re-thread hot streams through their chains and measure the update.
        double max_change = 0.0;
        for (const auto& [id, chain] : chains) {
            double t = topo.hot_inlets.at(id).temperature_k;
            for (std::size_t idx : chain.members) {
                max_change = std::max(max_change, std::fabs(hot_in_temp[idx] - t));
                hot_in_temp[idx] = t;
                t = results[idx].t_hot_out_k;
            }
        }
        if (max_change <= tol_k) return results;
    }
    throw NoConvergence("network solve did not reach 1e-6 K after 500 sweeps");
}

}  // namespace hensched
