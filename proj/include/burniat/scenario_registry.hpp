#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "burniat/scenario.hpp"

namespace burniat {

// "S1" ... "S16", then "sicilian".
const std::vector<std::string>& builtin_names();
const std::vector<std::string>& burniat_family_names();

Scenario builtin(std::string_view name);

// Strict JSON object; see README for the field list. Throws ParseError on
// syntax or schema problems and ValidationError on mathematical ones.
Scenario parse_scenario(std::string_view text);

std::string render_scenario(const Scenario& s);

// Runs every registry check and fills in the derived fields.
void validate(Scenario& s);

}  // namespace burniat
