#include "hensched/run.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hensched {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

// Whole-currency formatting with thousands separators, presentation only.
std::string fmt_money(double v) {
    const long long whole = std::llround(v);
    const bool neg = whole < 0;
    std::string digits = std::to_string(neg ? -whole : whole);
    std::string out;
    int count = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        if (count && count % 3 == 0) out.push_back(',');
        out.push_back(*it);
        ++count;
    }
    if (neg) out.push_back('-');
    return std::string(out.rbegin(), out.rend());
}

json breakdown_to_json(const CostBreakdown& b) {
    return json{{"recovered_energy_value", b.recovered_energy_value},
                {"energy_loss_cost", b.energy_loss_cost},
                {"cleaning_cost_total", b.cleaning_cost_total},
                {"pumping_cost_total", b.pumping_cost_total},
                {"total_j", b.total_j}};
}

CostBreakdown breakdown_from_json(const json& j) {
    CostBreakdown b;
    b.recovered_energy_value = j.at("recovered_energy_value").get<double>();
    b.energy_loss_cost = j.value("energy_loss_cost", 0.0);
    b.cleaning_cost_total = j.at("cleaning_cost_total").get<double>();
    b.pumping_cost_total = j.at("pumping_cost_total").get<double>();
    b.total_j = j.value("total_j", 0.0);
    return b;
}

// Monthly per-exchanger duties for one condition of the triplet.
std::vector<std::vector<double>> monthly_duties(const Scenario& sc,
                                                const CleaningSchedule& sched,
                                                bool fouled) {
    const std::size_t n = sc.exchanger_count();
    std::vector<ResistanceTimeline> timelines(n);
    std::vector<double> lmtd_f(n);
    for (std::size_t i = 0; i < n; ++i) {
        timelines[i] = fouled ? resistance_timeline(sc.exchangers[i].fouling,
                                                    sched.clean_steps(i), sc.horizon_months)
                              : ResistanceTimeline{};
        lmtd_f[i] = sc.exchangers[i].geometry.lmtd_correction;
    }

    std::vector<std::vector<double>> duties(static_cast<std::size_t>(sc.horizon_months),
                                            std::vector<double>(n, 0.0));
    std::vector<double> ua(n);
    std::vector<bool> bypass(n);
    for (int t = 1; t <= sc.horizon_months; ++t) {
        for (std::size_t i = 0; i < n; ++i) {
            const double r_f = fouled ? timelines[i].values[t - 1] : 0.0;
            ua[i] = effective_ua(sc.exchangers[i].geometry, r_f,
                                 sc.exchangers[i].r_f_outer_static_m2kw);
            bypass[i] = fouled && sched.matrix[i][t - 1] == 0;
        }
        const auto results = solve_network(sc.topology, ua, bypass, lmtd_f);
        for (std::size_t i = 0; i < n; ++i) duties[t - 1][i] = results[i].duty_w;
    }
    return duties;
}

void write_schedule_csv(const fs::path& path, const Scenario& sc,
                        const CleaningSchedule& sched) {
    std::ofstream out(path, std::ios::binary);
    out << "exchanger";
    for (int t = 1; t <= sc.horizon_months; ++t) out << ",m" << t;
    out << "\n";
    for (std::size_t i = 0; i < sc.exchanger_count(); ++i) {
        out << sc.exchangers[i].id;
        for (int t = 1; t <= sc.horizon_months; ++t) {
            out << ',' << static_cast<int>(sched.matrix[i][t - 1]);
        }
        out << "\n";
    }
}

void write_duty_series_csv(const fs::path& path, const std::vector<DutySample>& series) {
    std::ofstream out(path, std::ios::binary);
    out << "month,exchanger,condition,duty_watts\n";
    for (const DutySample& s : series) {
        out << s.month << ',' << s.exchanger << ',' << s.condition << ','
            << fmt_double(s.duty_w) << "\n";
    }
}

}  // namespace

RunArtifacts run_simulate(const Scenario& sc, const std::vector<int>& intervals,
                          const std::string& out_dir) {
    if (intervals.size() != sc.exchanger_count()) {
        throw ValidationError("intervals: expected " + std::to_string(sc.exchanger_count())
                              + " values, got " + std::to_string(intervals.size()));
    }
    RunArtifacts art;
    art.gbest_intervals = intervals;

    const CleaningSchedule sched = decode_intervals(intervals, sc.horizon_months);
    for (std::size_t i = 0; i < sc.exchanger_count(); ++i) {
        art.cleaning_counts.push_back(sched.cleaning_count(i));
    }

    const std::vector<int> never_clean(sc.exchanger_count(), 0);
    Scenario clean_sc = sc;
    for (auto& ex : clean_sc.exchangers) ex.fouling.asymptote_m2kw = 0.0;

    art.breakdowns.scheduled = evaluate_schedule(sc, intervals);
    art.breakdowns.fouled = evaluate_schedule(sc, never_clean);
    art.breakdowns.clean = evaluate_schedule(clean_sc, never_clean);

    const auto clean_duty = monthly_duties(sc, sched, false);
    const auto fouled_duty = monthly_duties(sc, decode_intervals(never_clean, sc.horizon_months),
                                            true);
    const auto sched_duty = monthly_duties(sc, sched, true);
    for (int t = 1; t <= sc.horizon_months; ++t) {
        for (std::size_t i = 0; i < sc.exchanger_count(); ++i) {
            const std::string& id = sc.exchangers[i].id;
            art.duty_series.push_back({t, id, "clean", clean_duty[t - 1][i]});
            art.duty_series.push_back({t, id, "fouled", fouled_duty[t - 1][i]});
            art.duty_series.push_back({t, id, "scheduled", sched_duty[t - 1][i]});
        }
    }

    fs::create_directories(out_dir);
    write_schedule_csv(fs::path(out_dir) / "schedule.csv", sc, sched);
    write_duty_series_csv(fs::path(out_dir) / "duty_series.csv", art.duty_series);

    json jb = {{"clean", breakdown_to_json(art.breakdowns.clean)},
               {"fouled", breakdown_to_json(art.breakdowns.fouled)},
               {"scheduled", breakdown_to_json(art.breakdowns.scheduled)}};
    std::ofstream bout(fs::path(out_dir) / "breakdown.json", std::ios::binary);
    bout << jb.dump(2) << "\n";
    return art;
}

RunArtifacts run_optimize(const Scenario& sc, const OptimizeOptions& opts,
                          const std::string& out_dir) {
    SwarmConfig config;
    config.particle_count = opts.particles;
    config.iterations = opts.iterations;
    config.dimensions = static_cast<int>(sc.exchanger_count());
    config.position_bounds.assign(config.dimensions, {0.0, 31.0});
    config.velocity_bounds.assign(config.dimensions, {0.0, 1.0});
    config.seed = opts.seed;

    const Objective objective = [&sc](const std::vector<double>& x) {
        return evaluate_schedule(sc, decode_position(x)).total_j;
    };
    const OptimizationTrace trace = optimize(objective, config);

    RunArtifacts art = run_simulate(sc, decode_position(trace.best_position), out_dir);
    art.fitness_history = trace.fitness_history;

    std::ofstream fout(fs::path(out_dir) / "fitness_history.csv", std::ios::binary);
    fout << "iteration,best_fitness\n";
    for (std::size_t i = 0; i < trace.fitness_history.size(); ++i) {
        fout << (i + 1) << ',' << fmt_double(trace.fitness_history[i]) << "\n";
    }

    json jg = {{"seed", opts.seed},
               {"best_fitness", trace.best_fitness},
               {"position", trace.best_position},
               {"intervals", art.gbest_intervals}};
    std::ofstream gout(fs::path(out_dir) / "gbest.json", std::ios::binary);
    gout << jg.dump(2) << "\n";
    return art;
}

void run_report(const std::string& in_dir, std::ostream& out) {
    const fs::path path = fs::path(in_dir) / "breakdown.json";
    std::ifstream in(path);
    if (!in) throw MissingArtifact("missing artifact: " + path.string());
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError("breakdown.json is not valid JSON: " + std::string(e.what()));
    }

    const CostBreakdown clean = breakdown_from_json(doc.at("clean"));
    const CostBreakdown fouled = breakdown_from_json(doc.at("fouled"));
    const CostBreakdown scheduled = breakdown_from_json(doc.at("scheduled"));

    out << "condition          recovered_energy   cleaning_cost   pumping_cost\n";
    const auto row = [&](const char* name, const CostBreakdown& b) {
        char line[160];
        std::snprintf(line, sizeof(line), "%-18s %16s %15s %14s\n", name,
                      fmt_money(b.recovered_energy_value).c_str(),
                      fmt_money(b.cleaning_cost_total).c_str(),
                      fmt_money(b.pumping_cost_total).c_str());
        out << line;
    };
    row("clean", clean);
    row("fouled", fouled);
    row("cleaning schedule", scheduled);

    const double savings = net_savings(scheduled, fouled);
    const double fraction = savings_fraction(scheduled, fouled, clean);
    char line[120];
    std::snprintf(line, sizeof(line), "net savings: %s (%.1f%% of maximum potential savings)\n",
                  fmt_money(savings).c_str(), 100.0 * fraction);
    out << line;
}

}  // namespace hensched
