#include "burniat/form_actions.hpp"

namespace burniat {

DzSignature dz_signs(const GroupElement& g) {
    DzSignature s;
    for (const auto& f : g.factors()) s.push_back(f.sign);
    return s;
}

std::string OneFormData::invariant_label() const {
    if (invariant.empty()) return "none";
    if (invariant.size() == characters.size()) return "all";
    std::string s;
    for (int a : invariant) {
        if (!s.empty()) s += ",";
        s += "dz" + std::to_string(a + 1);
    }
    return s;
}

OneFormData one_form_data(std::vector<Character> characters) {
    OneFormData d;
    d.characters = std::move(characters);
    for (std::size_t a = 0; a < d.characters.size(); ++a) {
        if (d.characters[a].is_trivial()) d.invariant.push_back(static_cast<int>(a));
    }
    d.q = static_cast<int>(d.invariant.size());
    return d;
}

OneFormData one_form_characters(const ActionGroup& group) {
    std::vector<Character> chars;
    for (std::size_t a = 0; a < group.factor_count(); ++a) {
        std::vector<int> values;
        for (const auto& g : group.generators()) values.push_back(g.factor(a).sign);
        chars.push_back(Character::from_generator_values(values));
    }
    return one_form_data(std::move(chars));
}

DzSignature dz_signs_at(std::span<const Character> one_forms, std::uint32_t element_mask) {
    DzSignature s;
    for (const auto& c : one_forms) s.push_back(c.value(element_mask));
    return s;
}

Character chi_A(std::span<const Character> one_forms) {
    if (one_forms.empty()) throw ValidationError("chi_A needs at least one 1-form");
    Character c = Character::trivial(one_forms[0].rank());
    for (const auto& x : one_forms) c = c * x;
    return c;
}

Character chi_A(const ActionGroup& group) { return chi_A(one_form_characters(group).characters); }

TraceVector type_vector(std::span<const Character> one_forms) {
    if (one_forms.empty()) throw ValidationError("type_vector needs at least one 1-form");
    const int rank = one_forms[0].rank();
    std::vector<long long> p;
    for (std::uint32_t m : canonical_subset_masks(rank)) {
        long long plus = 0;
        for (const auto& c : one_forms) plus += c.value(m) == 1 ? 1 : 0;
        p.push_back(plus);
    }
    return TraceVector(rank, std::move(p));
}

TraceVector type_vector(const ActionGroup& group) { return type_vector(one_form_characters(group).characters); }

CharMultiset one_form_multiset(std::span<const Character> one_forms) {
    CharMultiset m(one_forms.empty() ? 0 : one_forms[0].rank());
    for (const auto& c : one_forms) m.add(c);
    return m;
}

CharMultiset wedge2_characters(std::span<const Character> one_forms) {
    CharMultiset m(one_forms.empty() ? 0 : one_forms[0].rank());
    for (std::size_t a = 0; a < one_forms.size(); ++a) {
        for (std::size_t b = a + 1; b < one_forms.size(); ++b) m.add(one_forms[a] * one_forms[b]);
    }
    return m;
}

CharMultiset wedge2_characters(const ActionGroup& group) {
    return wedge2_characters(one_form_characters(group).characters);
}

CharMultiset h11_characters(std::span<const Character> one_forms) {
    // dz_a ^ conj(dz_b) carries chi_a chi_b; the diagonal gives the trivial character.
    CharMultiset m(one_forms.empty() ? 0 : one_forms[0].rank());
    for (const auto& a : one_forms) {
        for (const auto& b : one_forms) m.add(a * b);
    }
    return m;
}

CharMultiset h11_characters(const ActionGroup& group) { return h11_characters(one_form_characters(group).characters); }

}  // namespace burniat
