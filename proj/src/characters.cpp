#include "burniat/characters.hpp"

#include <algorithm>
#include <bit>

#include "burniat/affine_group.hpp"

namespace burniat {

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Character::Character(int rank, std::uint32_t minus_mask) : rank_(rank), minus_(minus_mask) {
    if (rank < 0 || rank > 16) throw ValidationError("unsupported character rank " + std::to_string(rank));
    if ((minus_mask >> rank) != 0) throw ValidationError("character mask exceeds its rank");
}

Character Character::parse(std::string_view text) {
    std::vector<int> values;
    std::size_t i = 0;
    bool open = false, closed = false;
    while (i < text.size()) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (c == '(' && values.empty() && !open) {
            open = true;
            ++i;
        } else if (c == ')' && open && !closed) {
            closed = true;
            ++i;
        } else if (c == '+' && !closed) {
            values.push_back(1);
            ++i;
        } else if (c == '-' && !closed) {
            values.push_back(-1);
            ++i;
        } else if (text.substr(i, 3) == "−" && !closed) {
            values.push_back(-1);
            i += 3;
        } else if (c == ' ') {
            ++i;
        } else {
            throw ParseError("bad character string '" + std::string(text) + "'");
        }
    }
    if (values.empty() || open != closed) throw ParseError("bad character string '" + std::string(text) + "'");
    return from_generator_values(values);
}

Character Character::from_generator_values(const std::vector<int>& values) {
    std::uint32_t mask = 0;
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (values[k] == -1) {
            mask |= 1u << k;
        } else if (values[k] != 1) {
            throw ValidationError("character values must be +1 or -1");
        }
    }
    return Character(static_cast<int>(values.size()), mask);
}

int Character::value(std::uint32_t element_mask) const {
    return std::popcount(minus_ & element_mask) % 2 == 0 ? 1 : -1;
}

std::string Character::str() const {
    std::string s = "(";
    for (int k = 0; k < rank_; ++k) s += on_generator(k) == 1 ? '+' : '-';
    return s + ")";
}

Character operator*(const Character& a, const Character& b) {
    if (a.rank_ != b.rank_) throw ValidationError("character product over different groups");
    return Character(a.rank_, a.minus_ ^ b.minus_);
}

std::strong_ordering operator<=>(const Character& a, const Character& b) {
    if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
    for (int k = 0; k < a.rank_; ++k) {
        if (auto c = a.on_generator(k) <=> b.on_generator(k); c != 0) return 0 <=> c;
    }
    return std::strong_ordering::equal;
}

Character char_product(const Character& a, const Character& b) { return a * b; }

std::vector<Character> all_characters(int rank) {
    std::vector<Character> out;
    for (std::uint32_t m = 0; m < (1u << rank); ++m) out.emplace_back(rank, m);
    std::sort(out.begin(), out.end());
    return out;
}

TraceVector::TraceVector(int rank, std::vector<long long> values) : rank_(rank), values_(std::move(values)) {
    if (values_.size() != (std::size_t{1} << rank)) {
        throw ValidationError("trace vector of length " + std::to_string(values_.size()) + " does not match a group of order 2^" +
                              std::to_string(rank));
    }
}

std::string TraceVector::str() const {
    const auto masks = canonical_subset_masks(rank_);
    std::string s = "(";
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i > 0) s += std::popcount(masks[i]) != std::popcount(masks[i - 1]) ? "|" : " ";
        s += std::to_string(values_[i]);
    }
    return s + ")";
}

namespace {
void require_same(const TraceVector& a, const TraceVector& b) {
    if (a.rank() != b.rank()) throw ValidationError("trace vectors over different groups");
}
}  // namespace

TraceVector operator+(const TraceVector& a, const TraceVector& b) {
    require_same(a, b);
    auto v = a.values_;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += b.values_[i];
    return TraceVector(a.rank_, std::move(v));
}

TraceVector operator-(const TraceVector& a, const TraceVector& b) {
    require_same(a, b);
    auto v = a.values_;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= b.values_[i];
    return TraceVector(a.rank_, std::move(v));
}

TraceVector operator*(long long k, const TraceVector& a) {
    auto v = a.values_;
    for (auto& x : v) x *= k;
    return TraceVector(a.rank_, std::move(v));
}

void CharMultiset::add(const Character& c, long long count) {
    if (c.rank() != rank_) throw ValidationError("character " + c.str() + " has the wrong rank for this multiset");
    long long n = counts_[c] + count;
    if (n < 0) throw ValidationError("negative multiplicity for " + c.str());
    if (n == 0) {
        counts_.erase(c);
    } else {
        counts_[c] = n;
    }
}

long long CharMultiset::count(const Character& c) const {
    auto it = counts_.find(c);
    return it == counts_.end() ? 0 : it->second;
}

long long CharMultiset::total() const {
    long long n = 0;
    for (const auto& [c, k] : counts_) n += k;
    return n;
}

CharMultiset CharMultiset::twisted(const Character& c) const {
    CharMultiset out(rank_);
    for (const auto& [x, k] : counts_) out.add(x * c, k);
    return out;
}

std::string CharMultiset::str() const {
    std::string s;
    long long trivial = 0;
    for (const auto& [c, k] : counts_) {
        if (c.is_trivial()) {
            trivial = k;
            continue;
        }
        if (k > 1) s += std::to_string(k);
        s += c.str();
    }
    if (trivial > 0) {
        std::string t = trivial == 1 ? "1" : std::to_string(trivial) + "·1";
        s = s.empty() ? t : s + " + " + t;
    }
    return s.empty() ? "0" : s;
}

bool operator==(const CharMultiset& a, const CharMultiset& b) {
    return a.rank_ == b.rank_ && a.counts_ == b.counts_;
}

NonRepresentation::NonRepresentation(const TraceVector& trace, const Character& character, const Rational& value)
    : Error("trace vector " + trace.str() + " is not a representation: multiplicity of " + character.str() + " is " +
            to_string(value)),
      character_(character),
      value_(value) {}

Rational multiplicity(const TraceVector& t, const Character& chi) {
    if (t.rank() != chi.rank()) {
        throw ValidationError("multiplicity: trace vector and character live on groups of rank " + std::to_string(t.rank()) +
                              " and " + std::to_string(chi.rank()));
    }
    const auto masks = canonical_subset_masks(t.rank());
    long long sum = 0;
    for (std::size_t i = 0; i < t.size(); ++i) sum += chi.value(masks[i]) * t[i];
    return Rational(sum, static_cast<long long>(t.size()));
}

CharMultiset decompose_trace(const TraceVector& t) {
    CharMultiset m(t.rank());
    for (const auto& chi : all_characters(t.rank())) {
        Rational r = multiplicity(t, chi);
        if (r.denominator() != 1 || r < 0) throw NonRepresentation(t, chi, r);
        m.add(chi, r.numerator());
    }
    return m;
}

TraceVector trace_of_multiset(const CharMultiset& m) {
    const auto masks = canonical_subset_masks(m.rank());
    std::vector<long long> v(masks.size(), 0);
    for (const auto& [chi, k] : m.entries()) {
        for (std::size_t i = 0; i < masks.size(); ++i) v[i] += k * chi.value(masks[i]);
    }
    return TraceVector(m.rank(), std::move(v));
}

}  // namespace burniat
