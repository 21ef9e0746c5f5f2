#pragma once

#include <array>
#include <string>
#include <vector>

#include <json.hpp>

#include "burniat/hodge_engine.hpp"
#include "burniat/scenario.hpp"

namespace burniat {

enum class ConditionStatus { verified, fails, assumed_by_theory, out_of_scope };
enum class Route { part1, part2, sicilian };

std::string to_string(ConditionStatus s);
std::string to_string(Route r);

struct ConditionResult {
    ConditionStatus status = ConditionStatus::out_of_scope;
    std::string evidence;
};

// Every character of G is a product of two characters occurring in H^2_var.
struct Condition3Result {
    ConditionResult result;
    std::vector<std::pair<Character, std::pair<Character, Character>>> witnesses;
    std::vector<Character> missing;
};
Condition3Result check_condition3(const TraceVector& h2var_trace);
Condition3Result check_condition3(const Scenario& s);

// b2_var > 0 and chi_A is absent from H^{2,0}_var for every admissible chi0.
struct Condition5Result {
    ConditionResult result;
    std::vector<std::pair<Character, long long>> chiA_in_h20var;  // per admissible chi0
};
Condition5Result check_condition5(const Scenario& s);

struct MultiplicityResult {
    Rational value;
    ConditionStatus status = ConditionStatus::fails;
};
// Throws NonRepresentation when the multiplicity is not an integer.
MultiplicityResult check_multiplicity_chiA(const Scenario& s);

struct CheckReport {
    std::string family;
    std::array<ConditionResult, 5> conditions;
    MultiplicityResult mult_chiA;
    Route route = Route::part2;
    bool j_in_G = false;
    bool motive_is_hY = false;
    std::vector<int> h2var_multiplicities;  // per character, all_characters order
    AuditReport audit;
    HodgeSummary summary;
};

CheckReport full_report(const Scenario& s);

// Keys: schema, family, condition1..condition5, mult_chiA, route, evidence.
nlohmann::ordered_json to_json(const CheckReport& r);

}  // namespace burniat
