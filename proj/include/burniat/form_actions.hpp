#pragma once

#include <span>
#include <string>
#include <vector>

#include "burniat/affine_group.hpp"
#include "burniat/characters.hpp"

namespace burniat {

// Sign of each dz_alpha under an element.
using DzSignature = std::vector<int>;

DzSignature dz_signs(const GroupElement& g);

struct OneFormData {
    std::vector<Character> characters;  // one per dz_alpha
    std::vector<int> invariant;  // 0-based indices alpha with trivial character
    int q = 0;

    // "none", "dz3", "dz1,dz2" or "all".
    std::string invariant_label() const;
};

OneFormData one_form_data(std::vector<Character> characters);
OneFormData one_form_characters(const ActionGroup& group);

// Per-element dz signs recovered from the one-form characters.
DzSignature dz_signs_at(std::span<const Character> one_forms, std::uint32_t element_mask);

// Determinant of the action on 1-forms: the character of dz1 ^ dz2 ^ dz3.
Character chi_A(std::span<const Character> one_forms);
Character chi_A(const ActionGroup& group);

// p(g): dimension of the +1 eigenspace on holomorphic 1-forms.
TraceVector type_vector(std::span<const Character> one_forms);
TraceVector type_vector(const ActionGroup& group);

// U = H^0(Omega^1) as a multiset.
CharMultiset one_form_multiset(std::span<const Character> one_forms);
// H^{2,0}(A) = wedge^2 U.
CharMultiset wedge2_characters(std::span<const Character> one_forms);
CharMultiset wedge2_characters(const ActionGroup& group);
// H^{1,1}(A) = U (x) conj(U) = dim(U)·1 + 2 wedge^2 U for real characters.
CharMultiset h11_characters(std::span<const Character> one_forms);
CharMultiset h11_characters(const ActionGroup& group);

}  // namespace burniat
