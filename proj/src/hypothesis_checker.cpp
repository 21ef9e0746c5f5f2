#include "burniat/hypothesis_checker.hpp"

#include "burniat/affine_group.hpp"

namespace burniat {

std::string to_string(ConditionStatus s) {
    switch (s) {
        case ConditionStatus::verified: return "verified";
        case ConditionStatus::fails: return "fails";
        case ConditionStatus::assumed_by_theory: return "assumed-by-theory";
        case ConditionStatus::out_of_scope: return "out-of-scope";
    }
    return "?";
}

std::string to_string(Route r) {
    switch (r) {
        case Route::part1: return "part1";
        case Route::part2: return "part2";
        case Route::sicilian: return "sicilian";
    }
    return "?";
}

Condition3Result check_condition3(const TraceVector& h2var_trace) {
    Condition3Result out;
    const CharMultiset m = decompose_trace(h2var_trace);
    std::vector<Character> present;
    for (const auto& [c, k] : m.entries()) present.push_back(c);
    for (const auto& psi : all_characters(h2var_trace.rank())) {
        bool found = false;
        for (std::size_t a = 0; a < present.size() && !found; ++a) {
            for (std::size_t b = a; b < present.size() && !found; ++b) {
                if (present[a] * present[b] == psi) {
                    out.witnesses.push_back({psi, {present[a], present[b]}});
                    found = true;
                }
            }
        }
        if (!found) out.missing.push_back(psi);
    }
    out.result.status = out.missing.empty() ? ConditionStatus::verified : ConditionStatus::fails;
    if (out.missing.empty()) {
        out.result.evidence = "H2_var = " + m.str() + "; every character is a product of two occurring characters";
    } else {
        out.result.evidence = "H2_var = " + m.str() + "; no pair of occurring characters multiplies to " + out.missing.front().str();
    }
    return out;
}

Condition3Result check_condition3(const Scenario& s) { return check_condition3(trace_H2_var_vector(s)); }

Condition5Result check_condition5(const Scenario& s) {
    Condition5Result out;
    const XInvariants X = x_invariants(s.divisor_selfint);
    const Character chiA = chi_A(s.one_forms);
    bool absent = true;
    std::string detail;
    for (const auto& c : admissible_chi0(s)) {
        const long long k = h20_var_characters(s, c).count(chiA);
        out.chiA_in_h20var.push_back({c, k});
        absent = absent && k == 0;
        if (!detail.empty()) detail += ", ";
        detail += "chi0 " + c.str() + ": " + std::to_string(k);
    }
    const long long b2var = X.b2 - X.fix.total();
    out.result.status = (b2var > 0 && absent) ? ConditionStatus::verified : ConditionStatus::fails;
    out.result.evidence = "b2_var(X) = " + std::to_string(b2var) + "; multiplicity of chi_A " + chiA.str() + " in H20_var: " + detail;
    return out;
}

MultiplicityResult check_multiplicity_chiA(const Scenario& s) {
    const TraceVector t = trace_H2_var_vector(s);
    const Character chiA = chi_A(s.one_forms);
    MultiplicityResult out;
    out.value = multiplicity(t, chiA);
    if (out.value.denominator() != 1 || out.value < 0) throw NonRepresentation(t, chiA, out.value);
    out.status = out.value > 0 ? ConditionStatus::verified : ConditionStatus::fails;
    return out;
}

CheckReport full_report(const Scenario& s) {
    CheckReport r;
    r.family = s.name;
    r.summary = hodge_Y(s);
    r.audit = consistency_suite(s);

    r.conditions[0] = {ConditionStatus::assumed_by_theory,
                       "conjecture B holds for projective space and for abelian varieties"};
    r.conditions[1] = {ConditionStatus::out_of_scope, "orbit separation is an unverified assumption"};
    r.conditions[2] = check_condition3(r.summary.trace_H2var).result;
    r.conditions[3] = {ConditionStatus::assumed_by_theory, "motives of abelian varieties are finite-dimensional"};
    r.conditions[4] = check_condition5(s).result;
    r.mult_chiA = check_multiplicity_chiA(s);

    const bool elliptic_only = !s.has_opaque_factor() && s.group.factor_count() == 3;
    r.j_in_G = elliptic_only && s.group.contains(parse_word("i1 i2 i3"));
    if (r.j_in_G) {
        r.route = Route::part1;
    } else if (s.has_opaque_factor()) {
        r.route = Route::sicilian;
    } else {
        r.route = Route::part2;
    }
    r.motive_is_hY = r.summary.chi_A.is_trivial();
    for (const auto& c : all_characters(s.rank())) r.h2var_multiplicities.push_back(static_cast<int>(r.summary.h2var_chars.count(c)));
    return r;
}

nlohmann::ordered_json to_json(const CheckReport& r) {
    using json = nlohmann::ordered_json;
    json j;
    j["schema"] = "1";
    j["family"] = r.family;
    for (int k = 0; k < 5; ++k) {
        j["condition" + std::to_string(k + 1)] = {{"status", to_string(r.conditions[k].status)},
                                                  {"evidence", r.conditions[k].evidence}};
    }
    j["mult_chiA"] = {{"value", to_string(r.mult_chiA.value)}, {"status", to_string(r.mult_chiA.status)}};
    j["route"] = to_string(r.route);
    const HodgeSummary& h = r.summary;
    json mult = json::object();
    const auto chars = all_characters(h.chi_A.rank());
    for (std::size_t i = 0; i < chars.size(); ++i) mult[chars[i].str()] = r.h2var_multiplicities[i];
    json audit = json::array();
    for (const auto& c : r.audit.checks) audit.push_back({{"id", c.id}, {"passed", c.passed}, {"detail", c.detail}});
    j["evidence"] = {
        {"chi_A", h.chi_A.str()},
        {"chi0", h.chi0.str()},
        {"q", h.q_Y},
        {"one_forms", h.one_forms.invariant_label()},
        {"type", h.type.str()},
        {"trace_H2var", h.trace_H2var.str()},
        {"h2var_multiplicities", mult},
        {"h20var", h.h20var_chars.str()},
        {"h11var_trace", h.h11var_trace.str()},
        {"fix_Y", h.fix_Y.str()},
        {"var_Y", h.var_Y.str()},
        {"euler_Y", h.euler_Y},
        {"c1sq_Y", h.c1sq_Y},
        {"j_in_G", r.j_in_G},
        {"motive_is_hY", r.motive_is_hY},
        {"audit_passed", r.audit.passed()},
        {"audit", audit},
    };
    return j;
}

}  // namespace burniat
