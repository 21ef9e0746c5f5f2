#pragma once

#include <optional>
#include <string>
#include <vector>

#include "burniat/affine_group.hpp"
#include "burniat/characters.hpp"

namespace burniat {

enum class ScenarioKind { burniat, custom };

enum class FactorKind { elliptic, opaque };

// A factor whose action is only known through supplied data: the signs of its
// dz forms under each generator and which elements act freely through it.
struct OpaqueFactor {
    int dim = 0;
    std::vector<std::string> dz_signs;  // one sign string of length dim per generator
    std::vector<std::string> free_elements;  // words in g1, g2, ...
};

struct FactorDescriptor {
    FactorKind kind = FactorKind::elliptic;
    OpaqueFactor opaque;  // used when kind == opaque
};

enum class ElementStatus {
    identity,
    free_on_A,
    isolated_fixed_points,  // finite fixed locus on A, avoided by the generic invariant X
};

struct Scenario {
    // Inputs, as given.
    std::string name;
    ScenarioKind kind = ScenarioKind::burniat;
    std::vector<std::string> generators;
    std::vector<FactorDescriptor> factors;  // empty for the burniat kind (three elliptic factors)
    long long divisor_selfint = 0;
    std::optional<Character> chi0;
    std::optional<CharMultiset> supplied_sections;

    // Derived and validated by the registry.
    ActionGroup group;  // acting on the elliptic factors
    std::vector<Character> one_forms;  // dz characters in factor order
    CharMultiset sections;
    std::vector<ElementStatus> status;  // canonical element order

    int rank() const { return group.rank(); }
    std::size_t order() const { return group.order(); }
    bool has_opaque_factor() const;
    bool sections_derived() const { return !supplied_sections.has_value(); }
    int dimension() const { return static_cast<int>(one_forms.size()); }
};

}  // namespace burniat
