#include "hensched/fouling.hpp"

#include <cmath>

namespace hensched {

double fouling_resistance(const FoulingParams& params, double elapsed_months) {
    return params.asymptote_m2kw * (1.0 - std::exp(-params.rate_per_month * elapsed_months));
}

ResistanceTimeline resistance_timeline(const FoulingParams& params,
                                       const std::set<int>& clean_steps, int horizon_months) {
    ResistanceTimeline tl;
    tl.clean_steps = clean_steps;
    tl.values.resize(static_cast<std::size_t>(horizon_months));

    int last_clean = 0;
    for (int t = 1; t <= horizon_months; ++t) {
        if (clean_steps.count(t)) {
            tl.values[t - 1] = 0.0;
            last_clean = t;
        } else {
            tl.values[t - 1] = fouling_resistance(params, static_cast<double>(t - last_clean));
        }
    }
    return tl;
}

double effective_ua(const ExchangerGeometry& geom, double r_f, double r_f_outer_static) {
    return geom.area_m2 * overall_u(geom, r_f, r_f_outer_static);
}

}  // namespace hensched
