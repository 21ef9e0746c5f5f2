#pragma once

// Independent reference computations used by the unit suites. They work on
// raw tuples and brute force, never through the library's own helpers.

#include <array>
#include <bit>
#include <cstdint>
#include <set>
#include <tuple>
#include <vector>
#include <sstream>
#include <stdexcept>
#include <string>

namespace oracle {

// (sign, b1, b2) per factor: z -> sign*z + b1/2 + b2*tau/2.
using Affine = std::tuple<int, int, int>;
using Element = std::vector<Affine>;

inline Element compose(const Element& a, const Element& b) {
    Element out;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const auto [s1, x1, y1] = a[k];
        const auto [s2, x2, y2] = b[k];
        // a(b(z)) = s1 (s2 z + c2) + c1, and -c2 = c2 for a 2-torsion shift.
        out.emplace_back(s1 * s2, (x1 + x2) % 2, (y1 + y2) % 2);
    }
    return out;
}

// Brute-force closure of the generators under composition.
inline std::set<Element> closure(const std::vector<Element>& gens) {
    std::set<Element> seen;
    Element id(gens.at(0).size(), Affine{1, 0, 0});
    std::vector<Element> frontier{id};
    seen.insert(id);
    while (!frontier.empty()) {
        std::vector<Element> next;
        for (const auto& e : frontier) {
            for (const auto& g : gens) {
                Element p = compose(g, e);
                if (seen.insert(p).second) next.push_back(p);
            }
        }
        frontier = std::move(next);
    }
    return seen;
}

// Fixed points of one factor action among the 16 points (x + y tau)/4.
inline int fixed_in_E4(const Affine& f) {
    const auto [s, b1, b2] = f;
    int n = 0;
    for (int x = 0; x < 4; ++x) {
        for (int y = 0; y < 4; ++y) {
            const int fx = ((s * x + 2 * b1) % 4 + 4) % 4;
            const int fy = ((s * y + 2 * b2) % 4 + 4) % 4;
            if (fx == x && fy == y) ++n;
        }
    }
    return n;
}

enum class Locus { empty, finite, curve };

struct LocusCount {
    Locus kind;
    long long points;  // for finite loci
};

// A factor fixing all 16 test points is the identity on that factor, so the
// locus contains a curve; a factor fixing none makes the locus empty.
inline LocusCount classify(const Element& e) {
    long long points = 1;
    bool curve = false;
    for (const auto& f : e) {
        const int n = fixed_in_E4(f);
        if (n == 0) return {Locus::empty, 0};
        if (n == 16) curve = true;
        points *= n;
    }
    return curve ? LocusCount{Locus::curve, 0} : LocusCount{Locus::finite, points};
}

// Value of a character given by its minus mask on the element selecting `mask` generators.
inline int char_value(std::uint32_t minus, std::uint32_t mask) {
    return std::popcount(minus & mask) % 2 == 0 ? 1 : -1;
}

}  // namespace oracle

namespace oracle {

// The seven basic involutions written out from their definitions:
// i_a = iota on E_a, i_ab = t on E_a and E_b, i123 = tau-flip on every factor.
inline Element basic(const std::string& token) {
    const Affine id{1, 0, 0}, flip{-1, 0, 0}, t{-1, 1, 0}, tau{-1, 0, 1};
    if (token == "i1") return {flip, id, id};
    if (token == "i2") return {id, flip, id};
    if (token == "i3") return {id, id, flip};
    if (token == "i12") return {t, t, id};
    if (token == "i13") return {t, id, t};
    if (token == "i23") return {id, t, t};
    if (token == "i123") return {tau, tau, tau};
    throw std::invalid_argument("unknown token " + token);
}

inline Element word(const std::string& text) {
    Element e(3, Affine{1, 0, 0});
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) e = compose(basic(tok), e);
    return e;
}

}  // namespace oracle
