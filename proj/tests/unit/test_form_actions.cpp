#include <doctest.h>

#include <algorithm>
#include <map>

#include "burniat/baseline.hpp"
#include "burniat/form_actions.hpp"
#include "oracles.hpp"

using namespace burniat;

namespace {

const PrintedTable1Row& row(const std::string& family) {
    const auto& rows = printed_table1();
    const auto it = std::find_if(rows.begin(), rows.end(), [&](const auto& r) { return r.family == family; });
    REQUIRE(it != rows.end());
    return *it;
}

ActionGroup group_of(const std::string& family) {
    std::vector<GroupElement> gens;
    for (const auto& w : row(family).generators) gens.push_back(parse_word(w));
    return generate_group(gens);
}

// Elements g1^a g2^b g3^c in canonical order, composed in the oracle representation.
std::vector<oracle::Element> oracle_elements(const std::string& family) {
    const auto& r = row(family);
    std::vector<oracle::Element> out;
    for (std::uint32_t m : {0u, 1u, 2u, 4u, 3u, 5u, 6u, 7u}) {
        oracle::Element e(3, oracle::Affine{1, 0, 0});
        for (int k = 0; k < 3; ++k) {
            if (m >> k & 1u) e = oracle::compose(oracle::word(r.generators[k]), e);
        }
        out.push_back(e);
    }
    return out;
}

std::vector<long long> type_oracle(const std::string& family) {
    std::vector<long long> p;
    for (const auto& e : oracle_elements(family)) {
        long long n = 0;
        for (const auto& f : e) n += std::get<0>(f) == 1 ? 1 : 0;
        p.push_back(n);
    }
    return p;
}

CharMultiset ms(std::initializer_list<const char*> chars) {
    CharMultiset m(3);
    for (const char* c : chars) m.add(Character::parse(c));
    return m;
}

}  // namespace

TEST_CASE("dz signs of the basic involutions") {
    CHECK(dz_signs(parse_word("i1")) == DzSignature{-1, 1, 1});
    CHECK(dz_signs(parse_word("i12")) == DzSignature{-1, -1, 1});
    CHECK(dz_signs(parse_word("i123")) == DzSignature{-1, -1, -1});
    CHECK(dz_signs(parse_word("i1 i3 i13")) == DzSignature{1, 1, 1});
}

TEST_CASE("dz signs are multiplicative on G0") {
    const auto elems = g0_elements();
    for (const auto& g : elems) {
        for (const auto& h : elems) {
            const DzSignature a = dz_signs(g), b = dz_signs(h), ab = dz_signs(g * h);
            for (int k = 0; k < 3; ++k) CHECK(ab[k] == a[k] * b[k]);
        }
    }
}

TEST_CASE("one-form characters") {
    SUBCASE("S5") {
        const OneFormData d = one_form_characters(group_of("S5"));
        CHECK(d.characters[0].str() == "(+-+)");
        CHECK(d.characters[1].str() == "(+--)");
        CHECK(d.characters[2].is_trivial());
        CHECK(d.invariant == std::vector<int>{2});
        CHECK(d.q == 1);
        CHECK(d.invariant_label() == "dz3");
    }
    SUBCASE("S16") {
        const OneFormData d = one_form_characters(group_of("S16"));
        CHECK(d.q == 3);
        CHECK(d.invariant_label() == "all");
    }
    SUBCASE("S1") {
        const OneFormData d = one_form_characters(group_of("S1"));
        CHECK(one_form_multiset(d.characters) == ms({"(-++)", "(--+)", "(-+-)"}));
        CHECK(d.q == 0);
        CHECK(d.invariant_label() == "none");
    }
}

TEST_CASE("chi_A") {
    CHECK(chi_A(group_of("S5")).str() == "(++-)");
    CHECK(chi_A(group_of("S10")).str() == "(---)");
    CHECK(chi_A(group_of("S3")).str() == "(+++)");
}

TEST_CASE("printed generator table: chi_A and invariant forms") {
    for (const auto& r : printed_table1()) {
        CAPTURE(r.family);
        const ActionGroup g = group_of(r.family);
        CHECK(chi_A(g) == Character::parse(r.chi_A));
        CHECK(one_form_characters(g).invariant_label() == r.invariant_forms);
    }
}

TEST_CASE("q distribution") {
    std::map<std::string, int> expected;
    for (int i = 1; i <= 16; ++i) {
        expected["S" + std::to_string(i)] = i <= 4 ? 0 : i <= 12 ? 1 : i <= 15 ? 2 : 3;
    }
    for (const auto& [fam, q] : expected) CHECK(one_form_characters(group_of(fam)).q == q);
}

TEST_CASE("type vectors") {
    CHECK(type_vector(group_of("S10")).str() == "(3|2 2 2|1 3 1|2)");
    CHECK(type_vector(group_of("S5")).str() == "(3|3 1 2|1 2 2|2)");
    const TraceVector s6 = type_vector(group_of("S6"));
    CHECK(s6[0] == 3);
    CHECK(s6[1] == 2);
    CHECK(s6[2] == 1);
    CHECK(s6[3] == 2);
    for (const auto& r : printed_table1()) {
        CAPTURE(r.family);
        CHECK(type_vector(group_of(r.family)).values() == type_oracle(r.family));
    }
}

TEST_CASE("wedge2 and h11") {
    SUBCASE("S2 wedge2 from the generator row") {
        // Generators i1 i3 i23, i3 i13, i2 i23: dz1 is flipped by i1 and i13, dz2 by
        // i23 in g1, dz3 by i23 in g3 (i3 cancels against i23 or i13 elsewhere).
        const OneFormData d = one_form_characters(group_of("S2"));
        CHECK(d.characters[0].str() == "(--+)");
        CHECK(d.characters[1].str() == "(-++)");
        CHECK(d.characters[2].str() == "(++-)");
        CHECK(wedge2_characters(group_of("S2")) == ms({"(+-+)", "(---)", "(-+-)"}));
    }
    SUBCASE("S16") {
        CharMultiset three(3), nine(3);
        three.add(Character::trivial(3), 3);
        nine.add(Character::trivial(3), 9);
        CHECK(wedge2_characters(group_of("S16")) == three);
        CHECK(h11_characters(group_of("S16")) == nine);
    }
    SUBCASE("h11 = 3·1 + 2 wedge2 for every family") {
        for (const auto& r : printed_table1()) {
            CAPTURE(r.family);
            const ActionGroup g = group_of(r.family);
            const auto dz = one_form_characters(g).characters;
            CharMultiset w(3), h(3);
            for (int a = 0; a < 3; ++a) {
                for (int b = a + 1; b < 3; ++b) w.add(dz[a] * dz[b]);
            }
            h.add(Character::trivial(3), 3);
            for (const auto& [c, n] : w.entries()) h.add(c, 2 * n);
            CHECK(wedge2_characters(g) == w);
            CHECK(h11_characters(g) == h);
            // The three wedge2 characters always multiply to the trivial character.
            Character prod = Character::trivial(3);
            for (const auto& [c, n] : w.entries()) {
                for (long long i = 0; i < n; ++i) prod = prod * c;
            }
            CHECK(prod == Character::trivial(3));
            CHECK(chi_A(g) == dz[0] * dz[1] * dz[2]);
        }
    }
}
