#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "burniat/errors.hpp"

namespace burniat {

// A 2-torsion point b1*(1/2) + b2*(tau/2) of one elliptic factor.
struct HalfPeriod {
    std::uint8_t b1 = 0;
    std::uint8_t b2 = 0;

    bool is_zero() const { return b1 == 0 && b2 == 0; }

    friend HalfPeriod operator+(HalfPeriod a, HalfPeriod b) {
        return {static_cast<std::uint8_t>(a.b1 ^ b.b1), static_cast<std::uint8_t>(a.b2 ^ b.b2)};
    }
    friend auto operator<=>(const HalfPeriod&, const HalfPeriod&) = default;
};

// z -> sign*z + shift on one factor.
struct FactorAction {
    int sign = 1;
    HalfPeriod shift;

    bool is_identity() const { return sign == 1 && shift.is_zero(); }

    friend FactorAction operator*(FactorAction a, FactorAction b) {
        return {a.sign * b.sign, a.shift + b.shift};
    }
    friend auto operator<=>(const FactorAction&, const FactorAction&) = default;
};

inline constexpr FactorAction kFlip{-1, {0, 0}};  // iota_E: z -> -z
inline constexpr FactorAction kFlipT{-1, {1, 0}};  // t_E: z -> -z + 1/2
inline constexpr FactorAction kFlipTau{-1, {0, 1}};  // tau_E: z -> -z + tau/2

class GroupElement {
public:
    GroupElement() = default;
    explicit GroupElement(std::vector<FactorAction> factors, std::vector<std::string> word = {});

    static GroupElement identity(std::size_t factor_count);

    const std::vector<FactorAction>& factors() const { return factors_; }
    std::size_t factor_count() const { return factors_.size(); }
    const FactorAction& factor(std::size_t i) const { return factors_.at(i); }

    // Reduced, sorted token sequence; empty for the identity word.
    const std::vector<std::string>& word() const { return word_; }
    std::string label() const;  // "i1 i3 i13", or "1" for the empty word

    bool is_identity() const;

    // Equality ignores the word label.
    bool operator==(const GroupElement& other) const { return factors_ == other.factors_; }

private:
    std::vector<FactorAction> factors_;
    std::vector<std::string> word_;
};

GroupElement compose(const GroupElement& a, const GroupElement& b);
inline GroupElement operator*(const GroupElement& a, const GroupElement& b) { return compose(a, b); }

// Tokens i1 i2 i3 i12 i13 i23 i123, case-insensitive, whitespace separated.
GroupElement parse_word(std::string_view word);

// The seven basic involutions in table order.
const std::vector<std::string>& basic_tokens();

// Sorts tokens (basic tokens first, in table order) and cancels pairs.
std::vector<std::string> reduce_word(std::vector<std::string> tokens);

// Subscripted rendering, e.g. "ι₁ι₃ι₁₃".
std::string pretty_word(const std::vector<std::string>& tokens);

// All 64 elements of G0, generated by the six involutions i1 i2 i3 i12 i13 i123.
std::vector<GroupElement> g0_elements();

// Generator subsets in canonical order: by size, then lexicographically.
// Bit k of a mask selects generator k.
std::vector<std::uint32_t> canonical_subset_masks(int rank);

class ActionGroup {
public:
    const std::vector<GroupElement>& generators() const { return generators_; }
    const std::vector<GroupElement>& elements() const { return elements_; }
    const std::vector<std::uint32_t>& masks() const { return masks_; }
    const GroupElement& element(std::size_t i) const { return elements_.at(i); }

    int rank() const { return static_cast<int>(generators_.size()); }
    std::size_t order() const { return elements_.size(); }
    std::size_t factor_count() const { return generators_.empty() ? 0 : generators_[0].factor_count(); }

    std::optional<std::size_t> index_of(const GroupElement& g) const;
    bool contains(const GroupElement& g) const { return index_of(g).has_value(); }

    // "1", "g1", "g1g2", ... for the element at canonical index i.
    std::string element_name(std::size_t i) const;

private:
    friend ActionGroup generate_group(std::vector<GroupElement> gens);
    std::vector<GroupElement> generators_;
    std::vector<GroupElement> elements_;
    std::vector<std::uint32_t> masks_;
};

ActionGroup generate_group(std::vector<GroupElement> gens);

enum class LocusKind { points, empty, curve };

struct FixedLocus {
    std::vector<LocusKind> factors;

    bool empty() const;
    bool finite() const;  // nonempty and zero-dimensional
    int dimension() const;  // -1 when empty
    long long point_count() const;  // 4^n for finite loci, 0 when empty
    std::string describe() const;
};

FixedLocus fixed_locus(const GroupElement& g);

struct FreenessVerdict {
    std::vector<bool> element_free;  // canonical order; entry 0 (identity) is false
    bool all_free = false;
};

FreenessVerdict is_free_on_A(const ActionGroup& group);

// +1 when translation-lifted actions on sections of a degree-`degree` bundle commute.
int commutation_pairing(const GroupElement& g, const GroupElement& h, int degree = 2);

}  // namespace burniat
