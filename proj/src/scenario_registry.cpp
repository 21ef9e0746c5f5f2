#include "burniat/scenario_registry.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <set>
#include <sstream>

#include <json.hpp>

#include "burniat/form_actions.hpp"
#include "burniat/theta_model.hpp"

namespace burniat {

namespace {

using json = nlohmann::ordered_json;

struct FamilyWords {
    const char* name;
    std::array<const char*, 3> gens;
};

// Generator words of the sixteen families.
constexpr std::array<FamilyWords, 16> kFamilies = {{
    {"S1", {"i1 i2 i3", "i2 i3 i123", "i3 i23"}},
    {"S2", {"i1 i3 i23", "i3 i13", "i2 i23"}},
    {"S3", {"i1 i3 i23", "i3 i123", "i2 i3 i12"}},
    {"S4", {"i1 i3 i12", "i2 i123", "i2 i3 i23"}},
    {"S5", {"i1 i3 i13", "i3 i123", "i3 i23"}},
    {"S6", {"i2 i3 i123", "i2 i3 i13", "i3 i23"}},
    {"S7", {"i1 i3 i23", "i3 i123", "i2 i12"}},
    {"S8", {"i1 i3 i23", "i2 i3 i123", "i2 i3 i13"}},
    {"S9", {"i1 i2 i3 i13", "i3 i123", "i2 i12"}},
    {"S10", {"i1 i2 i3 i13", "i2 i3 i123", "i3 i23"}},
    {"S11", {"i1 i2 i23", "i2 i123", "i2 i3 i12"}},
    {"S12", {"i1 i3 i13", "i3 i123", "i2 i3 i23"}},
    {"S13", {"i1 i2 i3 i23", "i2 i3 i123", "i2 i12"}},
    {"S14", {"i1 i13", "i12 i123", "i2 i23"}},
    {"S15", {"i1 i3 i13", "i12 i123", "i2 i3 i23"}},
    {"S16", {"i1 i3 i13", "i3 i12 i123", "i2 i3 i23"}},
}};

constexpr long long kBurniatD3 = 48;  // D = 2L with L^3 = 6
constexpr int kSurfaceAmbientDim = 3;

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

Scenario sicilian() {
    Scenario s;
    s.name = "sicilian";
    s.kind = ScenarioKind::custom;
    // E: e -> e + tau/2 and e -> e + 1/2. T: a -> -a + tau1/2 and a -> a + tau2/2.
    s.generators = {"+01", "+10"};
    FactorDescriptor e;
    FactorDescriptor t;
    t.kind = FactorKind::opaque;
    t.opaque.dim = 2;
    t.opaque.dz_signs = {"--", "++"};
    t.opaque.free_elements = {"g2"};
    s.factors = {e, t};
    // (a+b)^3 = 3 a b^2 with deg a = 2 on E and b^2 = 4 for the (1,2) polarization.
    s.divisor_selfint = 24;
    CharMultiset sec(2);
    for (const auto& c : all_characters(2)) sec.add(c);
    s.supplied_sections = sec;
    return s;
}

bool is_factor_token(const std::string& t) {
    return t.size() == 3 && (t[0] == '+' || t[0] == '-') && (t[1] == '0' || t[1] == '1') && (t[2] == '0' || t[2] == '1');
}

GroupElement parse_generator(const std::string& text, std::size_t k, std::size_t elliptic_count) {
    std::istringstream in(text);
    std::vector<std::string> tokens;
    for (std::string t; in >> t;) tokens.push_back(t);
    if (!tokens.empty() && std::all_of(tokens.begin(), tokens.end(), is_factor_token)) {
        if (tokens.size() != elliptic_count) {
            throw ParseError("generator " + std::to_string(k + 1) + " (\"" + text + "\") has " + std::to_string(tokens.size()) +
                             " factor tokens, expected one per elliptic factor (" + std::to_string(elliptic_count) + ")");
        }
        std::vector<FactorAction> f;
        for (const auto& t : tokens) {
            f.push_back({t[0] == '+' ? 1 : -1, {static_cast<std::uint8_t>(t[1] - '0'), static_cast<std::uint8_t>(t[2] - '0')}});
        }
        return GroupElement(std::move(f), {"g" + std::to_string(k + 1)});
    }
    if (elliptic_count != 3) {
        throw ParseError("generator " + std::to_string(k + 1) + " (\"" + text +
                         "\"): involution words need exactly three elliptic factors; use factor tokens like \"+10\"");
    }
    try {
        return parse_word(text);
    } catch (const ParseError& e) {
        throw ParseError("generator " + std::to_string(k + 1) + ": " + e.what());
    }
}

// Element word in g1, g2, ... to a generator mask.
std::uint32_t parse_generator_product(const std::string& text, int rank) {
    std::uint32_t mask = 0;
    std::size_t i = 0;
    std::string t = lower(text);
    while (i < t.size()) {
        if (t[i] == ' ') {
            ++i;
            continue;
        }
        if (t[i] != 'g') throw ParseError("bad element word \"" + text + "\" (expected g1, g2, ...)");
        std::size_t j = i + 1;
        while (j < t.size() && std::isdigit(static_cast<unsigned char>(t[j]))) ++j;
        if (j == i + 1) throw ParseError("bad element word \"" + text + "\"");
        int k = std::stoi(t.substr(i + 1, j - i - 1));
        if (k < 1 || k > rank) throw ParseError("element word \"" + text + "\" names a missing generator g" + std::to_string(k));
        mask ^= 1u << (k - 1);
        i = j;
    }
    return mask;
}

std::string element_label(const Scenario& s, std::size_t i) {
    const GroupElement& g = s.group.element(i);
    const std::string name = s.group.element_name(i);
    if (g.word().empty() || g.label() == name) return name;
    bool generic = std::any_of(g.word().begin(), g.word().end(), [](const std::string& t) { return t[0] == 'g'; });
    return generic ? name : g.label();
}

void derive_one_forms(Scenario& s) {
    const int r = s.group.rank();
    std::vector<Character> forms;
    std::size_t e = 0;
    for (const auto& f : s.factors) {
        if (f.kind == FactorKind::elliptic) {
            std::vector<int> values;
            for (const auto& g : s.group.generators()) values.push_back(g.factor(e).sign);
            forms.push_back(Character::from_generator_values(values));
            ++e;
            continue;
        }
        const auto& o = f.opaque;
        if (static_cast<int>(o.dz_signs.size()) != r) {
            throw ValidationError("opaque factor needs one dz sign string per generator (" + std::to_string(r) + "), got " +
                                  std::to_string(o.dz_signs.size()));
        }
        std::vector<std::vector<int>> per_form(o.dim);
        for (int k = 0; k < r; ++k) {
            const std::string& row = o.dz_signs[k];
            if (static_cast<int>(row.size()) != o.dim) {
                throw ValidationError("dz sign string \"" + row + "\" for g" + std::to_string(k + 1) + " must have length " +
                                      std::to_string(o.dim));
            }
            for (int a = 0; a < o.dim; ++a) {
                if (row[a] != '+' && row[a] != '-') throw ParseError("bad dz sign string \"" + row + "\"");
                per_form[a].push_back(row[a] == '+' ? 1 : -1);
            }
        }
        for (const auto& v : per_form) forms.push_back(Character::from_generator_values(v));
    }
    s.one_forms = std::move(forms);
}

void derive_status(Scenario& s) {
    s.status.assign(s.order(), ElementStatus::identity);
    // Opaque certificates, as generator masks.
    std::vector<std::set<std::uint32_t>> certified(s.factors.size());
    for (std::size_t fi = 0; fi < s.factors.size(); ++fi) {
        if (s.factors[fi].kind != FactorKind::opaque) continue;
        for (const auto& w : s.factors[fi].opaque.free_elements) {
            std::uint32_t m = parse_generator_product(w, s.rank());
            if (m == 0) throw ValidationError("free_elements lists the identity (\"" + w + "\"), which fixes everything");
            certified[fi].insert(m);
        }
    }
    for (std::size_t i = 1; i < s.order(); ++i) {
        const std::uint32_t mask = s.group.masks()[i];
        const FixedLocus elliptic = fixed_locus(s.group.element(i));
        if (elliptic.empty()) {
            s.status[i] = ElementStatus::free_on_A;
            continue;
        }
        bool finite = elliptic.finite();
        bool free = false;
        std::size_t form = 0;
        for (std::size_t fi = 0; fi < s.factors.size(); ++fi) {
            if (s.factors[fi].kind == FactorKind::elliptic) {
                ++form;
                continue;
            }
            const int dim = s.factors[fi].opaque.dim;
            bool any_plus = false, all_minus = true;
            for (int a = 0; a < dim; ++a) {
                int v = s.one_forms[form + a].value(mask);
                any_plus = any_plus || v == 1;
                all_minus = all_minus && v == -1;
            }
            form += dim;
            if (certified[fi].count(mask)) {
                if (!any_plus) {
                    throw ValidationError("element " + element_label(s, i) +
                                          " is certified free on an opaque factor where it acts by -1 on every 1-form");
                }
                free = true;
            }
            finite = finite && all_minus;
        }
        if (free) {
            s.status[i] = ElementStatus::free_on_A;
        } else if (finite) {
            s.status[i] = ElementStatus::isolated_fixed_points;
        } else {
            throw ValidationError("element " + element_label(s, i) + " has fixed points on A (" + elliptic.describe() + ")");
        }
    }
}

}  // namespace

bool Scenario::has_opaque_factor() const {
    return std::any_of(factors.begin(), factors.end(), [](const FactorDescriptor& f) { return f.kind == FactorKind::opaque; });
}

const std::vector<std::string>& burniat_family_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& f : kFamilies) v.push_back(f.name);
        return v;
    }();
    return names;
}

const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names = [] {
        auto v = burniat_family_names();
        v.push_back("sicilian");
        return v;
    }();
    return names;
}

Scenario builtin(std::string_view name) {
    const std::string key = lower(name);
    Scenario s;
    if (key == "sicilian") {
        s = sicilian();
    } else {
        auto it = std::find_if(kFamilies.begin(), kFamilies.end(), [&](const FamilyWords& f) { return lower(f.name) == key; });
        if (it == kFamilies.end()) {
            throw ValidationError("unknown scenario \"" + std::string(name) + "\" (expected S1..S16 or sicilian)");
        }
        s.name = it->name;
        s.kind = ScenarioKind::burniat;
        s.generators.assign(it->gens.begin(), it->gens.end());
        s.divisor_selfint = kBurniatD3;
    }
    validate(s);
    return s;
}

void validate(Scenario& s) {
    if (s.factors.empty()) s.factors.assign(3, FactorDescriptor{});
    if (s.kind == ScenarioKind::burniat) {
        if (s.factors.size() != 3 || s.has_opaque_factor()) throw ValidationError("burniat scenarios have three elliptic factors");
        if (s.supplied_sections) throw ValidationError("burniat scenarios derive their section characters");
    }
    const std::size_t elliptic = static_cast<std::size_t>(
        std::count_if(s.factors.begin(), s.factors.end(), [](const FactorDescriptor& f) { return f.kind == FactorKind::elliptic; }));
    if (elliptic == 0) throw ValidationError("a scenario needs at least one elliptic factor");
    for (const auto& f : s.factors) {
        if (f.kind == FactorKind::opaque && f.opaque.dim <= 0) throw ValidationError("opaque factor dimension must be positive");
    }
    if (s.generators.empty()) throw ValidationError("a scenario needs at least one generator");

    std::vector<GroupElement> gens;
    for (std::size_t k = 0; k < s.generators.size(); ++k) gens.push_back(parse_generator(s.generators[k], k, elliptic));
    s.group = generate_group(std::move(gens));

    // Lifts to the theta-model section space must commute.
    if (!s.supplied_sections) {
        if (s.has_opaque_factor()) throw ValidationError("section_chars are required when a factor is opaque");
        const auto& g = s.group.generators();
        for (std::size_t a = 0; a < g.size(); ++a) {
            for (std::size_t b = a + 1; b < g.size(); ++b) {
                if (commutation_pairing(g[a], g[b]) != 1) {
                    throw ValidationError("generators g" + std::to_string(a + 1) + " and g" + std::to_string(b + 1) +
                                          " do not commute on sections (commutation pairing -1)");
                }
            }
        }
    }

    derive_one_forms(s);
    if (s.dimension() != kSurfaceAmbientDim) {
        throw ValidationError("dimension mismatch: the factors give an abelian variety of dimension " +
                              std::to_string(s.dimension()) + ", expected 3");
    }
    derive_status(s);

    if (s.divisor_selfint <= 0) throw ValidationError("divisor_selfint must be positive");
    if (s.divisor_selfint % 6 != 0) {
        throw ValidationError("divisor_selfint " + std::to_string(s.divisor_selfint) +
                              " is not 6 h^0(D) for an integer section count");
    }
    const long long expected_sections = s.divisor_selfint / 6;
    s.sections = s.supplied_sections ? *s.supplied_sections : section_characters(s.group);
    if (s.sections.rank() != s.rank()) throw ValidationError("section characters have the wrong number of signs");
    if (s.sections.total() != expected_sections) {
        throw ValidationError("section space has dimension " + std::to_string(s.sections.total()) + " but D^3/6 = " +
                              std::to_string(expected_sections));
    }
    if (s.chi0) {
        if (s.chi0->rank() != s.rank()) throw ValidationError("chi0 has the wrong number of signs");
        if (s.sections.count(*s.chi0) == 0) {
            throw ValidationError("chi0 " + s.chi0->str() + " does not occur in the section space " + s.sections.str());
        }
    }
}

Scenario parse_scenario(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("scenario is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("scenario must be a JSON object");
    static const std::set<std::string> known = {"name", "kind", "generators", "divisor_selfint", "chi0", "factors", "section_chars", "schema"};
    for (const auto& [key, value] : j.items()) {
        if (!known.count(key)) throw ParseError("unknown field \"" + key + "\"");
    }
    auto require = [&](const char* key) -> const json& {
        if (!j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
        return j.at(key);
    };
    auto as_string = [](const json& v, const std::string& where) {
        if (!v.is_string()) throw ParseError(where + " must be a string");
        return v.get<std::string>();
    };

    Scenario s;
    s.name = as_string(require("name"), "name");
    const std::string kind = as_string(require("kind"), "kind");
    if (kind == "burniat") {
        s.kind = ScenarioKind::burniat;
    } else if (kind == "custom") {
        s.kind = ScenarioKind::custom;
    } else {
        throw ParseError("kind must be \"burniat\" or \"custom\", got \"" + kind + "\"");
    }
    const json& gens = require("generators");
    if (!gens.is_array()) throw ParseError("generators must be an array of strings");
    for (std::size_t k = 0; k < gens.size(); ++k) s.generators.push_back(as_string(gens[k], "generators[" + std::to_string(k) + "]"));
    const json& d3 = require("divisor_selfint");
    if (!d3.is_number_integer()) throw ParseError("divisor_selfint must be an integer");
    s.divisor_selfint = d3.get<long long>();
    if (j.contains("schema") && j.at("schema") != "1") throw ParseError("unsupported schema version");

    const int rank = static_cast<int>(s.generators.size());
    if (j.contains("chi0")) {
        s.chi0 = Character::parse(as_string(j.at("chi0"), "chi0"));
    }
    if (j.contains("factors")) {
        if (s.kind != ScenarioKind::custom) throw ParseError("factors are only allowed for custom scenarios");
        const json& fs = j.at("factors");
        if (!fs.is_array() || fs.empty()) throw ParseError("factors must be a non-empty array");
        for (std::size_t i = 0; i < fs.size(); ++i) {
            const json& f = fs[i];
            const std::string where = "factors[" + std::to_string(i) + "]";
            if (!f.is_object()) throw ParseError(where + " must be an object");
            FactorDescriptor d;
            const std::string fk = f.contains("kind") ? as_string(f.at("kind"), where + ".kind") : "";
            if (fk == "elliptic") {
                for (const auto& [key, value] : f.items()) {
                    if (key != "kind") throw ParseError(where + ": unknown field \"" + key + "\"");
                }
            } else if (fk == "opaque") {
                for (const auto& [key, value] : f.items()) {
                    if (key != "kind" && key != "dim" && key != "dz_signs" && key != "free_elements") {
                        throw ParseError(where + ": unknown field \"" + key + "\"");
                    }
                }
                d.kind = FactorKind::opaque;
                if (!f.contains("dim") || !f.at("dim").is_number_integer()) throw ParseError(where + ".dim must be an integer");
                d.opaque.dim = f.at("dim").get<int>();
                if (!f.contains("dz_signs") || !f.at("dz_signs").is_array()) throw ParseError(where + ".dz_signs must be an array");
                for (const auto& row : f.at("dz_signs")) d.opaque.dz_signs.push_back(as_string(row, where + ".dz_signs[]"));
                if (f.contains("free_elements")) {
                    if (!f.at("free_elements").is_array()) throw ParseError(where + ".free_elements must be an array");
                    for (const auto& w : f.at("free_elements")) d.opaque.free_elements.push_back(as_string(w, where + ".free_elements[]"));
                }
            } else {
                throw ParseError(where + ".kind must be \"elliptic\" or \"opaque\"");
            }
            s.factors.push_back(std::move(d));
        }
    }
    if (j.contains("section_chars")) {
        if (s.kind != ScenarioKind::custom) throw ParseError("section_chars are only allowed for custom scenarios");
        const json& sc = j.at("section_chars");
        if (!sc.is_array()) throw ParseError("section_chars must be an array of sign strings");
        CharMultiset m(rank);
        for (const auto& c : sc) {
            Character chi = Character::parse(as_string(c, "section_chars[]"));
            if (chi.rank() != rank) throw ParseError("section character " + chi.str() + " has the wrong number of signs");
            m.add(chi);
        }
        s.supplied_sections = m;
    }
    validate(s);
    return s;
}

std::string render_scenario(const Scenario& s) {
    json j;
    j["schema"] = "1";
    j["name"] = s.name;
    j["kind"] = s.kind == ScenarioKind::burniat ? "burniat" : "custom";
    if (s.kind == ScenarioKind::custom) {
        json fs = json::array();
        for (const auto& f : s.factors) {
            if (f.kind == FactorKind::elliptic) {
                fs.push_back({{"kind", "elliptic"}});
            } else {
                fs.push_back({{"kind", "opaque"},
                              {"dim", f.opaque.dim},
                              {"dz_signs", f.opaque.dz_signs},
                              {"free_elements", f.opaque.free_elements}});
            }
        }
        j["factors"] = fs;
    }
    j["generators"] = s.generators;
    j["divisor_selfint"] = s.divisor_selfint;
    if (s.chi0) j["chi0"] = s.chi0->str();
    if (s.supplied_sections) {
        json sc = json::array();
        for (const auto& [c, k] : s.supplied_sections->entries()) {
            for (long long n = 0; n < k; ++n) sc.push_back(c.str());
        }
        j["section_chars"] = sc;
    }
    return j.dump(2) + "\n";
}

}  // namespace burniat
