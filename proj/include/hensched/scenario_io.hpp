#ifndef HENSCHED_SCENARIO_IO_HPP
#define HENSCHED_SCENARIO_IO_HPP

#include <string>

#include "hensched/scenario.hpp"

namespace hensched {

// Loads and fully validates a scenario document.
// Throws ParseError on malformed JSON, ValidationError (naming the field path)
// on any invariant breach.
Scenario load_scenario(const std::string& path);

Scenario parse_scenario(const std::string& json_text);

std::string scenario_to_json(const Scenario& scenario);

void save_scenario(const Scenario& scenario, const std::string& path);

}  // namespace hensched

#endif
