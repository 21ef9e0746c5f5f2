#include <doctest.h>

#include <random>

#include "burniat/characters.hpp"
#include "oracles.hpp"

using namespace burniat;

namespace {

TraceVector tv(std::vector<long long> v) { return TraceVector(3, std::move(v)); }

// Character values in canonical element order, from the minus mask alone.
// Combinations of generator indices of each size, in lexicographic order.
void subsets_of_size(int rank, int size, int start, std::uint32_t acc, std::vector<std::uint32_t>& out) {
    if (size == 0) {
        out.push_back(acc);
        return;
    }
    for (int k = start; k < rank; ++k) subsets_of_size(rank, size - 1, k + 1, acc | (1u << k), out);
}

std::vector<int> values_oracle(const Character& c, int rank) {
    std::vector<std::uint32_t> masks;
    for (int size = 0; size <= rank; ++size) subsets_of_size(rank, size, 0, 0, masks);
    std::vector<int> out;
    for (std::uint32_t m : masks) out.push_back(oracle::char_value(c.minus_mask(), m));
    return out;
}

}  // namespace

TEST_CASE("parse and print") {
    CHECK(Character::parse("(+-+)").str() == "(+-+)");
    CHECK(Character::parse("+-+") == Character::parse("(+-+)"));
    CHECK(Character::parse("(+−−)") == Character::parse("+--"));
    CHECK(Character::parse("(+-+)").on_generator(1) == -1);
    CHECK_THROWS_AS(Character::parse("(+x+)"), ParseError);
    CHECK_THROWS_AS(Character::parse("()"), ParseError);
}

TEST_CASE("ordering puts + before -") {
    const auto all = all_characters(3);
    REQUIRE(all.size() == 8);
    const char* expected[] = {"(+++)", "(++-)", "(+-+)", "(+--)", "(-++)", "(-+-)", "(--+)", "(---)"};
    for (int i = 0; i < 8; ++i) CHECK(all[i].str() == expected[i]);
}

TEST_CASE("products") {
    const Character a = Character::parse("(+--)"), b = Character::parse("(+-+)");
    CHECK(a * a == Character::trivial(3));
    CHECK((a * b).str() == "(++-)");
    CHECK(Character::trivial(3) * b == b);
    CHECK_THROWS(Character::parse("(+-)") * a);
}

TEST_CASE("values in canonical order") {
    for (const auto& c : all_characters(3)) {
        const auto ref = values_oracle(c, 3);
        const auto masks = std::vector<std::uint32_t>{0, 1, 2, 4, 3, 5, 6, 7};
        for (int i = 0; i < 8; ++i) CHECK(c.value(masks[i]) == ref[i]);
    }
}

TEST_CASE("multiplicity") {
    SUBCASE("regular representation") {
        for (const auto& c : all_characters(3)) CHECK(multiplicity(tv({8, 0, 0, 0, 0, 0, 0, 0}), c) == Rational(1));
    }
    SUBCASE("worked value 3") {
        // (1/8)(43 - 5 - 5 + 5 - 5 - 3 - 3 - 3) = 3.
        const Character chi = Character::from_generator_values({1, 1, -1});
        CHECK(values_oracle(chi, 3) == std::vector<int>{1, 1, 1, -1, 1, -1, -1, -1});
        CHECK(multiplicity(tv({43, -5, -5, -5, -5, 3, 3, 3}), chi) == Rational(3));
    }
    SUBCASE("S6 printed mult column value") {
        // Sum of products (43 - 3 - 5 - 3 + 5 + 3 + 5 + 3) / 8 by hand.
        const Character chi = Character::from_generator_values({-1, 1, -1});
        CHECK(values_oracle(chi, 3) == std::vector<int>{1, -1, 1, -1, -1, 1, -1, 1});
        const std::vector<long long> t{43, 3, -5, 3, -5, 3, -5, 3};
        long long s = 0;
        const auto v = values_oracle(chi, 3);
        for (int i = 0; i < 8; ++i) s += v[i] * t[i];
        CHECK(s == 48);
        CHECK(multiplicity(tv(t), chi) == Rational(6));
    }
    SUBCASE("non-integral") { CHECK(multiplicity(tv({15, 15, -1, -1, -1, 1, 1, 1}), Character::trivial(3)) == Rational(30, 8)); }
}

TEST_CASE("decompose_trace") {
    SUBCASE("regular") {
        const CharMultiset m = decompose_trace(tv({8, 0, 0, 0, 0, 0, 0, 0}));
        for (const auto& c : all_characters(3)) CHECK(m.count(c) == 1);
        CHECK(m.total() == 8);
    }
    SUBCASE("twice trivial") {
        const CharMultiset m = decompose_trace(tv({2, 2, 2, 2, 2, 2, 2, 2}));
        CHECK(m.count(Character::trivial(3)) == 2);
        CHECK(m.total() == 2);
    }
    SUBCASE("not a representation") {
        CHECK_THROWS_AS(decompose_trace(tv({15, 15, -1, -1, -1, 1, 1, 1})), NonRepresentation);
        try {
            decompose_trace(tv({15, 15, -1, -1, -1, 1, 1, 1}));
        } catch (const NonRepresentation& e) {
            CHECK(e.value().denominator() != 1);
        }
    }
    SUBCASE("negative multiplicity") { CHECK_THROWS_AS(decompose_trace(tv({0, 8, 0, 0, 0, 0, 0, 0})), NonRepresentation); }
    SUBCASE("wrong length") { CHECK_THROWS(TraceVector(3, {1, 2, 3})); }
}

TEST_CASE("trace_of_multiset") {
    SUBCASE("three times trivial") {
        CharMultiset m(3);
        m.add(Character::trivial(3), 3);
        CHECK(trace_of_multiset(m).values() == std::vector<long long>(8, 3));
    }
    SUBCASE("all characters once") {
        CharMultiset m(3);
        for (const auto& c : all_characters(3)) m.add(c);
        CHECK(trace_of_multiset(m) == tv({8, 0, 0, 0, 0, 0, 0, 0}));
    }
    SUBCASE("S2 section characters") {
        CharMultiset m(3);
        std::vector<long long> ref(8, 0);
        for (const char* s : {"(+++)", "(+-+)", "(-+-)", "(---)"}) {
            const Character c = Character::parse(s);
            m.add(c, 2);
            const auto v = values_oracle(c, 3);
            for (int i = 0; i < 8; ++i) ref[i] += 2 * v[i];
        }
        // {0, 2, 5, 7} is a subgroup; its annihilator is {1, g1g3}.
        CHECK(ref == std::vector<long long>{8, 0, 0, 0, 0, 8, 0, 0});
        CHECK(trace_of_multiset(m) == tv(ref));
    }
}

TEST_CASE("multiset display") {
    CharMultiset m(3);
    m.add(Character::parse("(+-+)"));
    m.add(Character::parse("(+--)"));
    m.add(Character::trivial(3));
    CHECK(m.str() == "(+-+)(+--) + 1");
    CharMultiset t(3);
    t.add(Character::trivial(3), 3);
    CHECK(t.str() == "3·1");
    CHECK(CharMultiset(3).str() == "0");
}

TEST_CASE("property: orthogonality and round trip") {
    std::mt19937_64 rng(20240601);
    int cases = 0;
    for (int rank = 1; rank <= 5; ++rank) {
        const auto all = all_characters(rank);
        const long long order = 1LL << rank;
        // Orthogonality computed from the oracle values, compared with multiplicity().
        for (const auto& a : all) {
            for (const auto& b : all) {
                const auto va = values_oracle(a, rank), vb = values_oracle(b, rank);
                long long s = 0;
                for (std::size_t i = 0; i < va.size(); ++i) s += va[i] * vb[i];
                CHECK(s == (a == b ? order : 0));
                std::vector<long long> t(vb.begin(), vb.end());
                CHECK(multiplicity(TraceVector(rank, t), a) == Rational(a == b ? 1 : 0));
            }
        }
    }
    std::uniform_int_distribution<int> rank_dist(1, 5), count_dist(0, 6);
    for (int n = 0; n < 1200; ++n) {
        const int rank = rank_dist(rng);
        CharMultiset m(rank);
        std::vector<long long> ref(std::size_t(1) << rank, 0);
        for (const auto& c : all_characters(rank)) {
            const int k = count_dist(rng) < 3 ? 0 : count_dist(rng);
            if (k == 0) continue;
            m.add(c, k);
            const auto v = values_oracle(c, rank);
            for (std::size_t i = 0; i < v.size(); ++i) ref[i] += k * v[i];
        }
        const TraceVector t = trace_of_multiset(m);
        CHECK(t.values() == ref);
        CHECK(decompose_trace(t) == m);
        CHECK(t.at_identity() == m.total());
        ++cases;
    }
    CHECK(cases >= 1000);
}

TEST_CASE("trace vector display groups by word length") {
    CHECK(tv({43, 3, -5, 3, -5, 3, -5, 3}).str() == "(43|3 -5 3|-5 3 -5|3)");
}
