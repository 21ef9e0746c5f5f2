#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "burniat/errors.hpp"

namespace burniat {

using Rational = boost::rational<long long>;

std::string to_string(const Rational& r);

// A +-1 character of (Z/2)^rank, stored as the set of generators it sends to -1.
class Character {
public:
    Character() = default;
    Character(int rank, std::uint32_t minus_mask);

    static Character trivial(int rank) { return Character(rank, 0); }
    // Accepts "(+-+)", "+-+" and the Unicode minus sign.
    static Character parse(std::string_view signs);
    static Character from_generator_values(const std::vector<int>& values);

    int rank() const { return rank_; }
    std::uint32_t minus_mask() const { return minus_; }
    bool is_trivial() const { return minus_ == 0; }

    int on_generator(int k) const { return (minus_ >> k) & 1u ? -1 : 1; }
    // Value on the product of the generators selected by element_mask.
    int value(std::uint32_t element_mask) const;

    std::string str() const;  // "(+-+)"

    friend Character operator*(const Character& a, const Character& b);
    friend bool operator==(const Character&, const Character&) = default;
    // Lexicographic in the sign string with + before -, so (+++) comes first.
    friend std::strong_ordering operator<=>(const Character& a, const Character& b);

private:
    int rank_ = 0;
    std::uint32_t minus_ = 0;
};

Character char_product(const Character& a, const Character& b);

// All 2^rank characters, trivial first, lexicographic in the sign string.
std::vector<Character> all_characters(int rank);

// Integer function on group elements in canonical element order.
class TraceVector {
public:
    TraceVector() = default;
    TraceVector(int rank, std::vector<long long> values);

    int rank() const { return rank_; }
    std::size_t size() const { return values_.size(); }
    const std::vector<long long>& values() const { return values_; }
    long long operator[](std::size_t i) const { return values_.at(i); }
    long long at_identity() const { return values_.at(0); }

    // Grouped by word length, e.g. "(43|3 -5 3|3 -5 3|-5)".
    std::string str() const;

    friend TraceVector operator+(const TraceVector& a, const TraceVector& b);
    friend TraceVector operator-(const TraceVector& a, const TraceVector& b);
    friend TraceVector operator*(long long k, const TraceVector& a);
    friend bool operator==(const TraceVector&, const TraceVector&) = default;

private:
    int rank_ = 0;
    std::vector<long long> values_;
};

class CharMultiset {
public:
    CharMultiset() = default;
    explicit CharMultiset(int rank) : rank_(rank) {}

    int rank() const { return rank_; }
    void add(const Character& c, long long count = 1);
    long long count(const Character& c) const;
    long long total() const;
    bool empty() const { return total() == 0; }
    const std::map<Character, long long>& entries() const { return counts_; }

    // Pointwise product with a fixed character.
    CharMultiset twisted(const Character& c) const;

    // Table-style display: "(+-+)(+--) + 1", "2(---) + 1", "3·1", "0".
    std::string str() const;

    friend bool operator==(const CharMultiset& a, const CharMultiset& b);

private:
    int rank_ = 0;
    std::map<Character, long long> counts_;  // only positive counts
};

// Raised when a trace vector is not the character of an actual representation.
class NonRepresentation : public Error {
public:
    NonRepresentation(const TraceVector& trace, const Character& character, const Rational& value);
    const Character& character() const { return character_; }
    const Rational& value() const { return value_; }

private:
    Character character_;
    Rational value_;
};

// (1/|G|) sum_g chi(g) t(g), exact.
Rational multiplicity(const TraceVector& t, const Character& chi);

// Strict inverse of trace_of_multiset; throws NonRepresentation.
CharMultiset decompose_trace(const TraceVector& t);

TraceVector trace_of_multiset(const CharMultiset& m);

}  // namespace burniat
