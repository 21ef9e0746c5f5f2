#include "burniat/affine_group.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <map>
#include <sstream>

namespace burniat {

namespace {

const std::vector<std::string> kTokens = {"i1", "i2", "i3", "i12", "i13", "i23", "i123"};

int token_rank(const std::string& token) {
    auto it = std::find(kTokens.begin(), kTokens.end(), token);
    return it == kTokens.end() ? static_cast<int>(kTokens.size()) : static_cast<int>(it - kTokens.begin());
}

std::vector<FactorAction> token_action(const std::string& token) {
    std::vector<FactorAction> f(3);
    if (token == "i1") {
        f[0] = kFlip;
    } else if (token == "i2") {
        f[1] = kFlip;
    } else if (token == "i3") {
        f[2] = kFlip;
    } else if (token == "i12") {
        f[0] = kFlipT;
        f[1] = kFlipT;
    } else if (token == "i13") {
        f[0] = kFlipT;
        f[2] = kFlipT;
    } else if (token == "i23") {
        f[1] = kFlipT;
        f[2] = kFlipT;
    } else if (token == "i123") {
        f = {kFlipTau, kFlipTau, kFlipTau};
    } else {
        throw ParseError("unknown token '" + token + "' (expected one of i1 i2 i3 i12 i13 i23 i123)");
    }
    return f;
}

}  // namespace

GroupElement::GroupElement(std::vector<FactorAction> factors, std::vector<std::string> word)
    : factors_(std::move(factors)), word_(reduce_word(std::move(word))) {}

GroupElement GroupElement::identity(std::size_t factor_count) {
    return GroupElement(std::vector<FactorAction>(factor_count));
}

std::string GroupElement::label() const {
    if (word_.empty()) return "1";
    std::string out;
    for (const auto& t : word_) {
        if (!out.empty()) out += ' ';
        out += t;
    }
    return out;
}

bool GroupElement::is_identity() const {
    return std::all_of(factors_.begin(), factors_.end(), [](const FactorAction& f) { return f.is_identity(); });
}

std::vector<std::string> reduce_word(std::vector<std::string> tokens) {
    std::map<std::pair<int, std::string>, int> counts;
    for (auto& t : tokens) counts[{token_rank(t), t}] += 1;
    std::vector<std::string> out;
    for (const auto& [key, n] : counts) {
        if (n % 2 == 1) out.push_back(key.second);
    }
    return out;
}

GroupElement compose(const GroupElement& a, const GroupElement& b) {
    if (a.factor_count() != b.factor_count()) {
        throw ValidationError("cannot compose elements with " + std::to_string(a.factor_count()) + " and " +
                              std::to_string(b.factor_count()) + " factors");
    }
    std::vector<FactorAction> f(a.factor_count());
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = a.factor(i) * b.factor(i);
    std::vector<std::string> word = a.word();
    word.insert(word.end(), b.word().begin(), b.word().end());
    return GroupElement(std::move(f), std::move(word));
}

GroupElement parse_word(std::string_view word) {
    std::istringstream in{std::string(word)};
    std::string token;
    GroupElement g = GroupElement::identity(3);
    while (in >> token) {
        std::transform(token.begin(), token.end(), token.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        g = compose(g, GroupElement(token_action(token), {token}));
    }
    return g;
}

const std::vector<std::string>& basic_tokens() { return kTokens; }

std::string pretty_word(const std::vector<std::string>& tokens) {
    static const char* digits[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
    if (tokens.empty()) return "1";
    std::string out;
    for (const auto& t : tokens) {
        if (t.size() > 1 && t[0] == 'i') {
            out += "ι";
            for (std::size_t k = 1; k < t.size(); ++k) {
                if (std::isdigit(static_cast<unsigned char>(t[k]))) {
                    out += digits[t[k] - '0'];
                } else {
                    out += t[k];
                }
            }
        } else {
            out += t;
        }
    }
    return out;
}

std::vector<GroupElement> g0_elements() {
    const std::vector<std::string> gens = {"i1", "i2", "i3", "i12", "i13", "i123"};
    std::vector<GroupElement> out;
    for (std::uint32_t mask = 0; mask < (1u << gens.size()); ++mask) {
        std::string w;
        for (std::size_t k = 0; k < gens.size(); ++k) {
            if (mask & (1u << k)) w += gens[k] + " ";
        }
        out.push_back(parse_word(w));
    }
    return out;
}

std::vector<std::uint32_t> canonical_subset_masks(int rank) {
    if (rank < 0 || rank > 16) throw ValidationError("unsupported group rank " + std::to_string(rank));
    std::vector<std::uint32_t> masks;
    for (std::uint32_t m = 0; m < (1u << rank); ++m) masks.push_back(m);
    // Lexicographic order of the selected generator indices within each size.
    auto indices = [](std::uint32_t m) {
        std::vector<int> v;
        for (int k = 0; m >> k; ++k) {
            if (m & (1u << k)) v.push_back(k);
        }
        return v;
    };
    std::stable_sort(masks.begin(), masks.end(), [&](std::uint32_t a, std::uint32_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        if (pa != pb) return pa < pb;
        return indices(a) < indices(b);
    });
    return masks;
}

std::optional<std::size_t> ActionGroup::index_of(const GroupElement& g) const {
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (elements_[i] == g) return i;
    }
    return std::nullopt;
}

std::string ActionGroup::element_name(std::size_t i) const {
    std::uint32_t m = masks_.at(i);
    if (m == 0) return "1";
    std::string out;
    for (int k = 0; k < rank(); ++k) {
        if (m & (1u << k)) out += "g" + std::to_string(k + 1);
    }
    return out;
}

ActionGroup generate_group(std::vector<GroupElement> gens) {
    if (gens.empty()) throw ValidationError("a group needs at least one generator");
    const std::size_t n = gens[0].factor_count();
    for (std::size_t k = 0; k < gens.size(); ++k) {
        if (gens[k].factor_count() != n) throw ValidationError("generators have different factor counts");
        if (!compose(gens[k], gens[k]).is_identity()) {
            throw ValidationError("generator " + gens[k].label() + " is not an involution");
        }
        if (gens[k].is_identity()) throw ValidationError("generator g" + std::to_string(k + 1) + " is the identity");
    }
    ActionGroup G;
    G.generators_ = gens;
    G.masks_ = canonical_subset_masks(static_cast<int>(gens.size()));
    for (std::uint32_t m : G.masks_) {
        GroupElement e = GroupElement::identity(n);
        for (std::size_t k = 0; k < gens.size(); ++k) {
            if (m & (1u << k)) e = compose(e, gens[k]);
        }
        for (std::size_t j = 0; j < G.elements_.size(); ++j) {
            if (G.elements_[j] == e) {
                std::string name;
                for (std::size_t k = 0; k < gens.size(); ++k) {
                    if (m & (1u << k)) name += "g" + std::to_string(k + 1);
                }
                throw ValidationError("redundant generators: " + G.element_name(j) + " = " + name + ", so |G| < 2^" +
                                      std::to_string(gens.size()));
            }
        }
        G.elements_.push_back(std::move(e));
    }
    return G;
}

bool FixedLocus::empty() const {
    return std::any_of(factors.begin(), factors.end(), [](LocusKind k) { return k == LocusKind::empty; });
}

bool FixedLocus::finite() const {
    return !empty() && std::all_of(factors.begin(), factors.end(), [](LocusKind k) { return k == LocusKind::points; });
}

int FixedLocus::dimension() const {
    if (empty()) return -1;
    return static_cast<int>(std::count(factors.begin(), factors.end(), LocusKind::curve));
}

long long FixedLocus::point_count() const {
    if (!finite()) return 0;
    long long n = 1;
    for (std::size_t i = 0; i < factors.size(); ++i) n *= 4;
    return n;
}

std::string FixedLocus::describe() const {
    if (empty()) return "empty";
    std::string out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) out += " x ";
        out += factors[i] == LocusKind::points ? "4 points" : "E" + std::to_string(i + 1);
    }
    return out;
}

FixedLocus fixed_locus(const GroupElement& g) {
    if (g.is_identity()) throw ValidationError("fixed_locus is undefined for the identity");
    FixedLocus locus;
    for (const auto& f : g.factors()) {
        if (f.sign == -1) {
            locus.factors.push_back(LocusKind::points);
        } else if (!f.shift.is_zero()) {
            locus.factors.push_back(LocusKind::empty);
        } else {
            locus.factors.push_back(LocusKind::curve);
        }
    }
    return locus;
}

FreenessVerdict is_free_on_A(const ActionGroup& group) {
    FreenessVerdict v;
    v.all_free = true;
    for (std::size_t i = 0; i < group.order(); ++i) {
        if (group.element(i).is_identity()) {
            v.element_free.push_back(false);
            continue;
        }
        bool free = fixed_locus(group.element(i)).empty();
        v.element_free.push_back(free);
        v.all_free = v.all_free && free;
    }
    return v;
}

int commutation_pairing(const GroupElement& g, const GroupElement& h, int degree) {
    if (g.factor_count() != h.factor_count()) throw ValidationError("pairing needs equal factor counts");
    if (degree <= 0 || degree % 2 != 0) {
        throw ValidationError("commutation pairing needs an even positive bundle degree, got " + std::to_string(degree));
    }
    // (-1)^{2 d E(c, c')} with E(1/2, tau/2) = 1/4 and E alternating.
    int exponent = 0;
    for (std::size_t a = 0; a < g.factor_count(); ++a) {
        const HalfPeriod c = g.factor(a).shift, d = h.factor(a).shift;
        exponent += (degree / 2) * (c.b1 * d.b2 + c.b2 * d.b1);
    }
    return exponent % 2 == 0 ? 1 : -1;
}

}  // namespace burniat
