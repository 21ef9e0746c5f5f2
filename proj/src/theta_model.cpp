#include "burniat/theta_model.hpp"

#include <algorithm>

namespace burniat {

std::string ThetaIndex::label() const {
    std::string s;
    for (int x : j) s += std::to_string(x);
    return s;
}

int factor_theta_sign(const FactorAction& f, int j) {
    if (j != 1 && j != 2) throw ValidationError("theta index must be 1 or 2");
    int s = 1;
    if (f.shift.b1 && j == 2) s = -s;
    if (f.shift.b2 && j == 1) s = -s;
    return s;
}

int theta_sign(const GroupElement& g, const ThetaIndex& v) {
    if (g.factor_count() != v.j.size()) throw ValidationError("theta index and element have different factor counts");
    int s = 1;
    for (std::size_t a = 0; a < v.j.size(); ++a) s *= factor_theta_sign(g.factor(a), v.j[a]);
    return s;
}

std::vector<ThetaIndex> product_basis(std::size_t n) {
    std::vector<ThetaIndex> basis;
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
        ThetaIndex v;
        for (std::size_t a = 0; a < n; ++a) v.j.push_back(m & (1u << a) ? 2 : 1);
        basis.push_back(v);
    }
    auto twos = [](const ThetaIndex& v) { return std::count(v.j.begin(), v.j.end(), 2); };
    auto minority = [&](const ThetaIndex& v) {
        const int minor = 2 * twos(v) <= static_cast<long>(v.j.size()) ? 2 : 1;
        std::vector<std::size_t> pos;
        for (std::size_t a = 0; a < v.j.size(); ++a) {
            if (v.j[a] == minor) pos.push_back(a);
        }
        return pos;
    };
    std::stable_sort(basis.begin(), basis.end(), [&](const ThetaIndex& a, const ThetaIndex& b) {
        if (twos(a) != twos(b)) return twos(a) < twos(b);
        return minority(a) < minority(b);
    });
    return basis;
}

Character theta_character(const ActionGroup& group, const ThetaIndex& v) {
    std::vector<int> values;
    for (const auto& g : group.generators()) values.push_back(theta_sign(g, v));
    return Character::from_generator_values(values);
}

CharMultiset section_characters(const ActionGroup& group) {
    CharMultiset m(group.rank());
    for (const auto& v : product_basis(group.factor_count())) m.add(theta_character(group, v));
    return m;
}

SignTable worked_sign_table(const ActionGroup& group) {
    SignTable t;
    for (std::size_t k = 0; k < group.generators().size(); ++k) t.column_labels.push_back(group.generators()[k].label());
    for (const auto& v : product_basis(group.factor_count())) {
        t.row_labels.push_back(v.label());
        std::vector<int> row;
        for (const auto& g : group.generators()) row.push_back(theta_sign(g, v));
        t.signs.push_back(row);
    }
    return t;
}

SignTable generator_sign_table() {
    SignTable t;
    t.column_labels = basic_tokens();
    for (const auto& v : product_basis(3)) {
        t.row_labels.push_back(v.label());
        std::vector<int> row;
        for (const auto& tok : basic_tokens()) row.push_back(theta_sign(parse_word(tok), v));
        t.signs.push_back(row);
    }
    return t;
}

}  // namespace burniat
