#ifndef HENSCHED_FOULING_HPP
#define HENSCHED_FOULING_HPP

#include <set>
#include <vector>

#include "hensched/hen_core.hpp"

namespace hensched {

// Kern-Seaton asymptotic fouling law R_f(t) = a(1 - e^{-bt}).
struct FoulingParams {
    double asymptote_m2kw = 0.0;  // a
    double rate_per_month = 0.0;  // b
};

// Per-month fouling resistance over the schedule horizon. A clean step records
// 0 (exchanger offline that month) and the fouling clock restarts the step after.
struct ResistanceTimeline {
    std::vector<double> values;  // values[t-1] for t in 1..horizon
    std::set<int> clean_steps;
};

double fouling_resistance(const FoulingParams& params, double elapsed_months);

ResistanceTimeline resistance_timeline(const FoulingParams& params,
                                       const std::set<int>& clean_steps, int horizon_months);

// Fouled UA product: the dynamic resistance is lumped on the tube (crude) side,
// any static shell-side resistance enters separately.
double effective_ua(const ExchangerGeometry& geom, double r_f_m2kw,
                    double r_f_outer_static_m2kw = 0.0);

}  // namespace hensched

#endif
