#include "hensched/scenario_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace hensched {

using nlohmann::json;

namespace {

double require_number(const json& j, const std::string& path, const char* key) {
    if (!j.contains(key) || !j[key].is_number()) {
        throw ValidationError(path + "." + key + ": missing or not a number");
    }
    return j[key].get<double>();
}

double positive(const json& j, const std::string& path, const char* key) {
    const double v = require_number(j, path, key);
    if (v <= 0.0) throw ValidationError(path + "." + key + ": must be > 0");
    return v;
}

double non_negative(const json& j, const std::string& path, const char* key) {
    const double v = require_number(j, path, key);
    if (v < 0.0) throw ValidationError(path + "." + key + ": must be >= 0");
    return v;
}

StreamState parse_stream(const json& j, const std::string& path) {
    StreamState s;
    s.temperature_k = positive(j, path, "temperature_k");
    s.mass_flow_kg_s = positive(j, path, "mass_flow_kg_s");
    s.specific_heat_j_kgk = positive(j, path, "specific_heat_j_per_kg_k");
    return s;
}

json stream_to_json(const StreamState& s) {
    return json{{"temperature_k", s.temperature_k},
                {"mass_flow_kg_s", s.mass_flow_kg_s},
                {"specific_heat_j_per_kg_k", s.specific_heat_j_kgk}};
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("scenario document is not valid JSON: ") + e.what());
    }

    Scenario sc;
    if (!doc.contains("horizon_months") || !doc["horizon_months"].is_number_integer()) {
        throw ValidationError("horizon_months: missing or not an integer");
    }
    sc.horizon_months = doc["horizon_months"].get<int>();
    if (sc.horizon_months < 1) throw ValidationError("horizon_months: must be >= 1");

    if (!doc.contains("costs")) throw ValidationError("costs: missing");
    const json& jc = doc["costs"];
    sc.costs.energy_price_per_j = non_negative(jc, "costs", "energy_price_per_joule");
    sc.costs.cleaning_cost_per_action = non_negative(jc, "costs", "cleaning_cost_per_action");
    sc.costs.pump_energy_price_per_j = non_negative(jc, "costs", "pump_energy_price_per_joule");
    sc.costs.step_duration_s = non_negative(jc, "costs", "step_duration_seconds");

    if (!doc.contains("cold_inlet")) throw ValidationError("cold_inlet: missing");
    sc.topology.cold_inlet = parse_stream(doc["cold_inlet"], "cold_inlet");

    if (!doc.contains("hot_streams") || !doc["hot_streams"].is_array()) {
        throw ValidationError("hot_streams: missing or not an array");
    }
    for (const json& jh : doc["hot_streams"]) {
        const std::string id = jh.value("id", "");
        if (id.empty()) throw ValidationError("hot_streams[].id: missing");
        if (sc.topology.hot_inlets.count(id)) {
            throw ValidationError("hot_streams." + id + ": duplicate hot stream id");
        }
        if (!jh.contains("inlet")) throw ValidationError("hot_streams." + id + ".inlet: missing");
        sc.topology.hot_inlets[id] = parse_stream(jh["inlet"], "hot_streams." + id + ".inlet");
    }

    if (!doc.contains("exchangers") || !doc["exchangers"].is_array()) {
        throw ValidationError("exchangers: missing or not an array");
    }
    std::set<std::string> seen;
    for (const json& je : doc["exchangers"]) {
        ExchangerEntry ex;
        ex.id = je.value("id", "");
        if (ex.id.empty()) throw ValidationError("exchangers[].id: missing");
        if (!seen.insert(ex.id).second) {
            throw ValidationError("exchangers." + ex.id + ": duplicate exchanger id");
        }
        const std::string base = "exchangers." + ex.id;

        if (!je.contains("geometry")) throw ValidationError(base + ".geometry: missing");
        const json& jg = je["geometry"];
        const std::string gp = base + ".geometry";
        ex.geometry.area_m2 = positive(jg, gp, "area_m2");
        ex.geometry.d_outer_m = positive(jg, gp, "d_outer_m");
        ex.geometry.d_inner_m = positive(jg, gp, "d_inner_m");
        if (ex.geometry.d_inner_m >= ex.geometry.d_outer_m) {
            throw ValidationError(gp + ".d_inner_m: must be < d_outer_m");
        }
        ex.geometry.wall_conductivity_w_mk = positive(jg, gp, "wall_conductivity_w_per_m_k");
        ex.geometry.h_tube_w_m2k = positive(jg, gp, "h_tube_w_per_m2_k");
        ex.geometry.h_shell_w_m2k = positive(jg, gp, "h_shell_w_per_m2_k");
        ex.geometry.lmtd_correction = positive(jg, gp, "lmtd_correction");
        if (ex.geometry.lmtd_correction > 1.0) {
            throw ValidationError(gp + ".lmtd_correction: must be in (0, 1]");
        }

        if (!je.contains("fouling")) throw ValidationError(base + ".fouling: missing");
        const std::string fp = base + ".fouling";
        ex.fouling.asymptote_m2kw = non_negative(je["fouling"], fp, "asymptote_m2k_per_w");
        ex.fouling.rate_per_month = positive(je["fouling"], fp, "rate_per_month");

        if (!je.contains("pumping")) throw ValidationError(base + ".pumping: missing");
        const std::string pp = base + ".pumping";
        ex.pumping.base_power_w = non_negative(je["pumping"], pp, "base_power_w");
        ex.pumping.fouling_coefficient_w = non_negative(je["pumping"], pp, "fouling_coefficient_w");

        if (je.contains("static_outer_resistance_m2k_per_w")) {
            ex.r_f_outer_static_m2kw =
                non_negative(je, base, "static_outer_resistance_m2k_per_w");
        }
        if (je.contains("cleaning_cost")) {
            ex.cleaning_cost = non_negative(je, base, "cleaning_cost");
        }

        const std::string hot = je.value("hot_stream", "");
        if (hot.empty()) throw ValidationError(base + ".hot_stream: missing");
        if (!sc.topology.hot_inlets.count(hot)) {
            throw ValidationError(base + ".hot_stream: unknown hot stream '" + hot + "'");
        }
        const int order = je.value("hot_visit_order", 1);
        if (order < 1) throw ValidationError(base + ".hot_visit_order: must be >= 1");
        sc.topology.hot_assignments[ex.id] = HotAssignment{hot, order};
        sc.exchangers.push_back(ex);
    }
    if (sc.exchangers.empty()) throw ValidationError("exchangers: must not be empty");

    if (!doc.contains("cold_path") || !doc["cold_path"].is_array()) {
        throw ValidationError("cold_path: missing or not an array");
    }
    std::set<std::string> visited;
    for (const json& jid : doc["cold_path"]) {
        const std::string id = jid.get<std::string>();
        if (!seen.count(id)) throw ValidationError("cold_path: unknown exchanger '" + id + "'");
        if (!visited.insert(id).second) {
            throw ValidationError("cold_path: exchanger '" + id + "' visited twice");
        }
        sc.topology.cold_path.push_back(id);
    }
    if (visited.size() != seen.size()) {
        throw ValidationError("cold_path: must visit every exchanger exactly once");
    }

    // Visit orders per hot stream must be a contiguous run starting at 1.
    std::map<std::string, std::set<int>> orders;
    for (const auto& [ex_id, asg] : sc.topology.hot_assignments) {
        if (!orders[asg.hot_stream].insert(asg.visit_order).second) {
            throw ValidationError("exchangers." + ex_id + ".hot_visit_order: duplicate position "
                                  "on hot stream '" + asg.hot_stream + "'");
        }
    }
    for (const auto& [hot_id, positions] : orders) {
        int expect = 1;
        for (int p : positions) {
            if (p != expect++) {
                throw ValidationError("hot_streams." + hot_id +
                                      ": visit orders must be contiguous from 1");
            }
        }
    }
    return sc;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open scenario file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

std::string scenario_to_json(const Scenario& sc) {
    json doc;
    doc["horizon_months"] = sc.horizon_months;
    doc["costs"] = {{"energy_price_per_joule", sc.costs.energy_price_per_j},
                    {"cleaning_cost_per_action", sc.costs.cleaning_cost_per_action},
                    {"pump_energy_price_per_joule", sc.costs.pump_energy_price_per_j},
                    {"step_duration_seconds", sc.costs.step_duration_s}};
    doc["cold_inlet"] = stream_to_json(sc.topology.cold_inlet);

    doc["hot_streams"] = json::array();
    for (const auto& [id, inlet] : sc.topology.hot_inlets) {
        doc["hot_streams"].push_back({{"id", id}, {"inlet", stream_to_json(inlet)}});
    }

    doc["exchangers"] = json::array();
    for (const ExchangerEntry& ex : sc.exchangers) {
        const HotAssignment& asg = sc.topology.hot_assignments.at(ex.id);
        json je = {
            {"id", ex.id},
            {"geometry",
             {{"area_m2", ex.geometry.area_m2},
              {"d_outer_m", ex.geometry.d_outer_m},
              {"d_inner_m", ex.geometry.d_inner_m},
              {"wall_conductivity_w_per_m_k", ex.geometry.wall_conductivity_w_mk},
              {"h_tube_w_per_m2_k", ex.geometry.h_tube_w_m2k},
              {"h_shell_w_per_m2_k", ex.geometry.h_shell_w_m2k},
              {"lmtd_correction", ex.geometry.lmtd_correction}}},
            {"fouling",
             {{"asymptote_m2k_per_w", ex.fouling.asymptote_m2kw},
              {"rate_per_month", ex.fouling.rate_per_month}}},
            {"pumping",
             {{"base_power_w", ex.pumping.base_power_w},
              {"fouling_coefficient_w", ex.pumping.fouling_coefficient_w}}},
            {"static_outer_resistance_m2k_per_w", ex.r_f_outer_static_m2kw},
            {"hot_stream", asg.hot_stream},
            {"hot_visit_order", asg.visit_order}};
        if (ex.cleaning_cost >= 0.0) je["cleaning_cost"] = ex.cleaning_cost;
        doc["exchangers"].push_back(je);
    }
    doc["cold_path"] = sc.topology.cold_path;
    return doc.dump(2) + "\n";
}

void save_scenario(const Scenario& sc, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write scenario file: " + path);
    out << scenario_to_json(sc);
}

}  // namespace hensched
