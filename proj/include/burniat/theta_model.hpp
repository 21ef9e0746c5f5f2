#pragma once

#include <string>
#include <vector>

#include "burniat/affine_group.hpp"
#include "burniat/characters.hpp"

namespace burniat {

// theta_{j1 j2 ... jn}, each j in {1, 2}: the product of per-factor eigenvectors.
struct ThetaIndex {
    std::vector<int> j;

    std::string label() const;  // "121"
    friend bool operator==(const ThetaIndex&, const ThetaIndex&) = default;
};

// Sign of theta^j under one factor action. Flips act by +1; the 1/2 shift
// separates j=1 (+) from j=2 (-), the tau/2 shift does the opposite.
int factor_theta_sign(const FactorAction& f, int j);

int theta_sign(const GroupElement& g, const ThetaIndex& v);

// Basis order for n factors: by the number of 2s, then by the positions of
// the minority index (111; 211 121 112; 122 212 221; 222 for n = 3).
std::vector<ThetaIndex> product_basis(std::size_t factor_count);

Character theta_character(const ActionGroup& group, const ThetaIndex& v);

// Characters of G on the section space H^0(L^2) of the principal product polarization.
CharMultiset section_characters(const ActionGroup& group);

struct SignTable {
    std::vector<std::string> row_labels;
    std::vector<std::string> column_labels;
    std::vector<std::vector<int>> signs;  // [row][column]

    friend bool operator==(const SignTable&, const SignTable&) = default;
};

// Basis vectors against the group's generators.
SignTable worked_sign_table(const ActionGroup& group);

// Basis vectors against the seven basic involutions i1 ... i123.
SignTable generator_sign_table();

}  // namespace burniat
