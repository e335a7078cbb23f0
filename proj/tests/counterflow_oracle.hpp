#ifndef HENSCHED_TESTS_COUNTERFLOW_ORACLE_HPP
#define HENSCHED_TESTS_COUNTERFLOW_ORACLE_HPP

// Test-only oracle: counterflow exchanger solved by slice integration with a
// shooting search on the hot outlet temperature. Independent of the
// closed-form solution in hen_core.

#include <cmath>

#include "hensched/hen_core.hpp"

namespace hensched::testing {

struct OracleResult {
    double t_cold_out;
    double t_hot_out;
};

// Marches cold and hot temperatures from the cold-inlet end (x=0) to the
// hot-inlet end (x=1) with RK4 over `slices` steps.  `t_hot_at_0` is the
// guessed hot outlet.  Returns the hot temperature reached at x=1.
inline double march(double ua_eff, double c_cold, double c_hot, double t_cold_in,
                    double t_hot_at_0, int slices, double* t_cold_out) {
    const double h = 1.0 / slices;
    double tc = t_cold_in;
    double th = t_hot_at_0;
    for (int i = 0; i < slices; ++i) {
        auto fc = [&](double a, double b) { return ua_eff * (b - a) / c_cold; };
        auto fh = [&](double a, double b) { return ua_eff * (b - a) / c_hot; };
        const double k1c = fc(tc, th), k1h = fh(tc, th);
        const double k2c = fc(tc + 0.5 * h * k1c, th + 0.5 * h * k1h);
        const double k2h = fh(tc + 0.5 * h * k1c, th + 0.5 * h * k1h);
        const double k3c = fc(tc + 0.5 * h * k2c, th + 0.5 * h * k2h);
        const double k3h = fh(tc + 0.5 * h * k2c, th + 0.5 * h * k2h);
        const double k4c = fc(tc + h * k3c, th + h * k3h);
        const double k4h = fh(tc + h * k3c, th + h * k3h);
        tc += h * (k1c + 2 * k2c + 2 * k3c + k4c) / 6.0;
        th += h * (k1h + 2 * k2h + 2 * k3h + k4h) / 6.0;
    }
    if (t_cold_out) *t_cold_out = tc;
    return th;
}

inline OracleResult counterflow_oracle(const StreamState& cold_in, const StreamState& hot_in,
                                       double ua, double f, int slices = 1000) {
    if (ua <= 0.0) return {cold_in.temperature_k, hot_in.temperature_k};

    const double ua_eff = ua * f;
    const double c_cold = cold_in.heat_capacity_rate();
    const double c_hot = hot_in.heat_capacity_rate();
    const double t_ci = cold_in.temperature_k;
    const double t_hi = hot_in.temperature_k;

    // Hot outlet lies between the two inlet temperatures; bisect on the guess.
    double lo = std::fmin(t_ci, t_hi) - 1e-9;
    double hi = std::fmax(t_ci, t_hi) + 1e-9;
    double t_cold_out = t_ci;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double reached = march(ua_eff, c_cold, c_hot, t_ci, mid, slices, &t_cold_out);
        if (reached < t_hi) {
            lo = mid;
        } else {
            hi = mid;
        }
        if (hi - lo < 1e-12 * std::fmax(1.0, std::fabs(t_hi))) break;
    }
    const double t_ho = 0.5 * (lo + hi);
    march(ua_eff, c_cold, c_hot, t_ci, t_ho, slices, &t_cold_out);
    return {t_cold_out, t_ho};
}

}  // namespace hensched::testing

#endif
