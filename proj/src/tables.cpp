#include "burniat/tables.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "burniat/baseline.hpp"
#include "burniat/errors.hpp"
#include "burniat/form_actions.hpp"
#include "burniat/scenario_registry.hpp"
#include "burniat/theta_model.hpp"

namespace burniat {

namespace {

using json = nlohmann::ordered_json;

struct FamilyData {
    Scenario scenario;
    HodgeSummary summary;
};

const std::map<std::string, FamilyData>& families() {
    static const std::map<std::string, FamilyData> data = [] {
        std::map<std::string, FamilyData> m;
        for (const auto& name : burniat_family_names()) {
            Scenario s = builtin(name);
            HodgeSummary h = hodge_Y(s);
            m.emplace(name, FamilyData{std::move(s), std::move(h)});
        }
        return m;
    }();
    return data;
}

const FamilyData& family(const std::string& name) { return families().at(name); }

std::string replace_all(std::string s, const std::string& from, const std::string& to) {
    for (std::size_t p = s.find(from); p != std::string::npos; p = s.find(from, p + to.size())) s.replace(p, from.size(), to);
    return s;
}

// ASCII table text to the Unicode used in md output.
std::string unicode(std::string s) {
    s = replace_all(s, "-", "−");
    static const char* digits[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
    for (int d = 0; d < 10; ++d) s = replace_all(s, "dz" + std::to_string(d), std::string("dz") + digits[d]);
    return s;
}

std::string ascii(std::string s) {
    s = replace_all(s, "−", "-");
    s = replace_all(s, "·", "*");
    return s;
}

Cell text_cell(const std::string& plain) { return {unicode(plain), ascii(plain), plain}; }

Cell plain_cell(const std::string& s) { return {s, s, s}; }

Cell sign_cell(int s) { return {s > 0 ? "+" : "−", s > 0 ? "+" : "-", s}; }

json triple_json(const HodgeTriple& t) { return json::array({t.h20, t.h11, t.h02}); }

Cell triple_cell(const HodgeTriple& t) { return {t.str(), t.str(), triple_json(t)}; }

Cell trace_cell(const TraceVector& t) { return {unicode(t.str()), t.str(), t.values()}; }

std::string bare_signs(const Character& c) {
    const std::string s = c.str();
    return s.substr(1, s.size() - 2);
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    return "\"" + replace_all(s, "\"", "\"\"") + "\"";
}

// Number of invariant one-forms named by a printed "G-invariant 1-forms" cell.
long long q_from_label(const std::string& label) {
    if (label == "none") return 0;
    if (label == "all") return 3;
    long long q = 0;
    for (std::size_t p = label.find("dz"); p != std::string::npos; p = label.find("dz", p + 2)) ++q;
    return q;
}

Character product_of(const CharMultiset& m) {
    Character out = Character::trivial(m.rank());
    for (const auto& [c, k] : m.entries()) {
        if (k % 2 == 1) out = out * c;
    }
    return out;
}

CharMultiset expand_pairs(const CharMultiset& u, bool ordered) {
    std::vector<Character> list;
    for (const auto& [c, k] : u.entries()) {
        for (long long i = 0; i < k; ++i) list.push_back(c);
    }
    CharMultiset out(u.rank());
    for (std::size_t a = 0; a < list.size(); ++a) {
        for (std::size_t b = ordered ? 0 : a + 1; b < list.size(); ++b) out.add(list[a] * list[b]);
    }
    return out;
}

CharMultiset wedge2_of(const CharMultiset& u) { return expand_pairs(u, false); }
CharMultiset h11_of(const CharMultiset& u) { return expand_pairs(u, true); }

CharMultiset h11_formula(const CharMultiset& w, long long dim) {
    CharMultiset out(w.rank());
    out.add(Character::trivial(w.rank()), dim);
    for (const auto& [c, k] : w.entries()) out.add(c, 2 * k);
    return out;
}

HodgeTriple fix_from(const CharMultiset& u) {
    const Character one = Character::trivial(u.rank());
    const long long w = wedge2_of(u).count(one);
    return {w, h11_of(u).count(one), w};
}

Witness make_witness(std::string name, bool printed_ok, bool recomputed_ok, std::string detail) {
    return {std::move(name), printed_ok, recomputed_ok, std::move(detail)};
}

}  // namespace

Format parse_format(const std::string& name) {
    if (name == "md") return Format::md;
    if (name == "csv") return Format::csv;
    if (name == "json") return Format::json;
    throw ValidationError("unknown format \"" + name + "\" (expected md, csv or json)");
}

RenderedTable table1() {
    RenderedTable t;
    t.id = "T1";
    t.title = "Burniat hypersurfaces";
    t.columns = {"type", "involution 1", "involution 2", "involution 3", "G-invariant 1-forms", "chi_A"};
    for (const auto& name : burniat_family_names()) {
        const FamilyData& f = family(name);
        std::vector<Cell> row;
        for (const auto& g : f.scenario.group.generators()) row.push_back({pretty_word(g.word()), g.label(), g.label()});
        row.push_back(text_cell(f.summary.one_forms.invariant_label()));
        const std::string chi = bare_signs(f.summary.chi_A);
        row.push_back({unicode("(" + chi + ")"), chi, chi});
        t.keys.push_back(name);
        t.rows.push_back(std::move(row));
    }
    return t;
}

RenderedTable table2() {
    RenderedTable t;
    t.id = "T2";
    t.title = "Action on forms and invariants of the generalized Burniat surfaces";
    t.columns = {"type", "U = H^0(Omega^1_A)", "W = wedge^2 U", "H^1(Omega^1_A)", "b2_fix(Y)", "b2_var(Y)"};
    for (const auto& name : burniat_family_names()) {
        const FamilyData& f = family(name);
        const auto& chars = f.summary.one_forms.characters;
        const CharMultiset U = one_form_multiset(chars);
        const CharMultiset W = wedge2_characters(chars);
        const CharMultiset H11 = h11_characters(chars);
        std::vector<Cell> row;
        row.push_back(text_cell(U.str()));
        row.push_back(text_cell(W.str()));
        const bool formula = H11 == h11_formula(W, static_cast<long long>(chars.size()));
        row.push_back({formula ? "3·1 + 2W" : unicode(H11.str()), formula ? "3*1 + 2W" : H11.str(), H11.str()});
        row.push_back(triple_cell(f.summary.fix_Y));
        row.push_back(triple_cell(f.summary.var_Y));
        t.keys.push_back(name);
        t.rows.push_back(std::move(row));
    }
    return t;
}

RenderedTable table3() {
    RenderedTable t;
    t.id = "T3";
    t.title = "Trace vectors";
    t.columns = {"type", "type H^0(Omega^1_A)", "trace H^2_var(X)", "trace H^0(Omega^3_A)", "mult chi_A"};
    for (const auto& printed : printed_table3()) {
        const FamilyData& f = family(printed.family);
        std::vector<long long> chi;
        for (std::size_t e = 0; e < f.scenario.order(); ++e) chi.push_back(f.summary.chi_A.value(f.scenario.group.masks()[e]));
        std::vector<Cell> row;
        row.push_back(trace_cell(f.summary.type));
        row.push_back(trace_cell(f.summary.trace_H2var));
        row.push_back(trace_cell(TraceVector(f.scenario.rank(), chi)));
        const std::string m = to_string(f.summary.mult_chiA);
        row.push_back({m, m, m});
        t.keys.push_back(printed.family);
        t.rows.push_back(std::move(row));
    }
    t.notes.push_back("rows are the families listed in the printed table; every family is available through verify");
    return t;
}

RenderedTable theta_table() {
    const SignTable s = generator_sign_table();
    RenderedTable t;
    t.id = "theta-table";
    t.title = "G0 action on the theta basis";
    t.columns = {"element"};
    for (const auto& c : s.column_labels) t.columns.push_back(c);
    for (std::size_t r = 0; r < s.row_labels.size(); ++r) {
        std::vector<Cell> row;
        for (int v : s.signs[r]) row.push_back(sign_cell(v));
        t.keys.push_back("theta" + s.row_labels[r]);
        t.rows.push_back(std::move(row));
    }
    return t;
}

RenderedTable theta_worked_table() {
    RenderedTable t;
    t.id = "theta-worked";
    t.title = "Generator action on the theta basis for S2 and S6";
    t.columns = {"element"};
    std::vector<SignTable> parts;
    for (const char* fam : {"S2", "S6"}) {
        const FamilyData& f = family(fam);
        parts.push_back(worked_sign_table(f.scenario.group));
        for (std::size_t k = 0; k < f.scenario.group.generators().size(); ++k) {
            t.columns.push_back(std::string(fam) + " g" + std::to_string(k + 1) + "=" + f.scenario.group.generators()[k].label());
        }
    }
    for (std::size_t r = 0; r < parts[0].row_labels.size(); ++r) {
        std::vector<Cell> row;
        for (const auto& p : parts) {
            for (int v : p.signs[r]) row.push_back(sign_cell(v));
        }
        t.keys.push_back("theta" + parts[0].row_labels[r]);
        t.rows.push_back(std::move(row));
    }
    return t;
}

RenderedTable hodge_x_table() {
    const XInvariants X = x_invariants(family("S1").scenario.divisor_selfint);
    RenderedTable t;
    t.id = "hodge-X";
    t.title = "Invariants of the Burniat hypersurface X";
    t.columns = {"invariant", "value"};
    auto add = [&](const std::string& key, Cell c) {
        t.keys.push_back(key);
        t.rows.push_back({std::move(c)});
    };
    const auto num = [](long long v) { return Cell{std::to_string(v), std::to_string(v), v}; };
    add("b1", num(X.b1));
    add("b2", num(X.b2));
    add("var", triple_cell(X.var));
    add("fix", triple_cell(X.fix));
    add("euler", num(X.euler));
    add("c1sq", num(X.c1sq));
    add("sections", num(X.sections));
    return t;
}

RenderedTable checker_table(const std::vector<CheckReport>& reports) {
    RenderedTable t;
    t.id = "checker";
    t.title = "Hypothesis verdicts";
    t.columns = {"family", "chi_A", "q", "fix(Y)", "var(Y)", "cond 1", "cond 2", "cond 3", "cond 4", "cond 5", "mult chi_A", "route", "audit"};
    for (const auto& r : reports) {
        const HodgeSummary& h = r.summary;
        std::vector<Cell> row;
        row.push_back(text_cell(h.chi_A.str()));
        row.push_back({std::to_string(h.q_Y), std::to_string(h.q_Y), h.q_Y});
        row.push_back(triple_cell(h.fix_Y));
        row.push_back(triple_cell(h.var_Y));
        for (const auto& c : r.conditions) row.push_back(plain_cell(to_string(c.status)));
        const std::string m = to_string(r.mult_chiA.value);
        row.push_back({m, m, m});
        row.push_back(plain_cell(to_string(r.route)));
        row.push_back(plain_cell(r.audit.passed() ? "pass" : "FAIL"));
        t.keys.push_back(r.family);
        t.rows.push_back(std::move(row));
    }
    return t;
}

RenderedTable table_by_name(const std::string& which) {
    if (which == "1") return table1();
    if (which == "2") return table2();
    if (which == "3") return table3();
    if (which == "theta") return theta_table();
    if (which == "theta-worked") return theta_worked_table();
    if (which == "hodge-x") return hodge_x_table();
    throw ValidationError("unknown table \"" + which + "\" (expected 1, 2, 3, theta, theta-worked or hodge-x)");
}

std::string render(const RenderedTable& t, Format f) {
    std::ostringstream os;
    if (f == Format::json) {
        json j;
        j["schema"] = "1";
        if (t.id == "hodge-X") {
            for (std::size_t r = 0; r < t.keys.size(); ++r) j[t.keys[r]] = t.rows[r][0].raw;
        } else {
            j["table"] = t.id;
            j["columns"] = t.columns;
            json rows = json::array();
            for (std::size_t r = 0; r < t.keys.size(); ++r) {
                json row;
                row[t.columns[0]] = t.keys[r];
                for (std::size_t c = 0; c < t.rows[r].size(); ++c) row[t.columns[c + 1]] = t.rows[r][c].raw;
                rows.push_back(row);
            }
            j["rows"] = rows;
            if (!t.notes.empty()) j["notes"] = t.notes;
        }
        os << j.dump(2) << "\n";
        return os.str();
    }
    if (f == Format::csv) {
        for (std::size_t c = 0; c < t.columns.size(); ++c) os << (c ? "," : "") << csv_escape(t.columns[c]);
        os << "\n";
        for (std::size_t r = 0; r < t.keys.size(); ++r) {
            os << csv_escape(t.keys[r]);
            for (const auto& cell : t.rows[r]) os << "," << csv_escape(cell.plain);
            os << "\n";
        }
        return os.str();
    }
    os << "## " << t.title << "\n\n|";
    for (const auto& c : t.columns) os << " " << c << " |";
    os << "\n|";
    for (std::size_t c = 0; c < t.columns.size(); ++c) os << "---|";
    os << "\n";
    for (std::size_t r = 0; r < t.keys.size(); ++r) {
        os << "| " << t.keys[r] << " |";
        for (const auto& cell : t.rows[r]) os << " " << cell.md << " |";
        os << "\n";
    }
    for (const auto& n : t.notes) os << "\nNote: " << n << "\n";
    return os.str();
}

bool DiffCell::witnessed() const {
    return std::any_of(witnesses.begin(), witnesses.end(), [](const Witness& w) { return w.discriminates(); });
}

int DiffReport::matches() const {
    return static_cast<int>(std::count_if(cells.begin(), cells.end(), [](const DiffCell& c) { return c.match; }));
}

int DiffReport::mismatches() const { return static_cast<int>(cells.size()) - matches(); }

int DiffReport::unwitnessed() const {
    return static_cast<int>(std::count_if(cells.begin(), cells.end(), [](const DiffCell& c) { return !c.match && !c.witnessed(); }));
}

std::vector<std::string> DiffReport::mismatched_rows() const {
    std::vector<std::string> rows;
    for (const auto& c : cells) {
        if (!c.match && std::find(rows.begin(), rows.end(), c.row) == rows.end()) rows.push_back(c.row);
    }
    return rows;
}

DiffReport diff_table1() {
    DiffReport d;
    d.table = "T1";
    for (const auto& p : printed_table1()) {
        const FamilyData& f = family(p.family);
        const std::string forms = f.summary.one_forms.invariant_label();
        DiffCell c1{p.family, "G-invariant 1-forms", p.invariant_forms, forms, replace_all(p.invariant_forms, " ", "") == forms, {}};
        if (!c1.match) {
            c1.witnesses.push_back(make_witness("trivial-part-of-U", false, true,
                                                "invariant one-forms are the trivial characters of U = " + one_form_multiset(f.summary.one_forms.characters).str()));
        }
        const std::string chi = bare_signs(f.summary.chi_A);
        DiffCell c2{p.family, "chi_A", p.chi_A, chi, p.chi_A == chi, {}};
        if (!c2.match) {
            const Character printed = Character::parse(p.chi_A);
            const Character det = product_of(one_form_multiset(f.summary.one_forms.characters));
            c2.witnesses.push_back(make_witness("determinant", printed == det, det == f.summary.chi_A,
                                                "chi_A must be the product of the one-form characters, " + det.str()));
        }
        d.cells.push_back(std::move(c1));
        d.cells.push_back(std::move(c2));
    }
    return d;
}

DiffReport diff_table2() {
    DiffReport d;
    d.table = "T2";
    const auto& t1 = printed_table1();
    for (const auto& p : printed_table2()) {
        const FamilyData& f = family(p.family);
        const auto& chars = f.summary.one_forms.characters;
        const int rank = f.scenario.rank();
        const auto t1row = std::find_if(t1.begin(), t1.end(), [&](const auto& r) { return r.family == p.family; });
        const Character printed_chi = Character::parse(t1row->chi_A);
        const long long printed_q = q_from_label(t1row->invariant_forms);

        const CharMultiset U = one_form_multiset(chars);
        const CharMultiset W = wedge2_characters(chars);
        const CharMultiset H11 = h11_characters(chars);
        const CharMultiset pU = parse_multiset_expr(p.U, rank);
        const CharMultiset pW = parse_multiset_expr(p.W, rank);
        const Character one = Character::trivial(rank);
        const HodgeTriple expect_b2{printed_q, 4 + 2 * printed_q, printed_q};

        DiffCell u{p.family, "U", p.U, U.str(), pU == U, {}};
        if (!u.match) {
            u.witnesses.push_back(make_witness("determinant-is-chi_A", product_of(pU) == printed_chi, product_of(U) == printed_chi,
                                               "product of the characters in U against the printed chi_A " + printed_chi.str()));
            u.witnesses.push_back(make_witness("trivial-part-is-q", pU.count(one) == printed_q, U.count(one) == printed_q,
                                               "trivial multiplicity in U against the printed invariant forms (q = " +
                                                   std::to_string(printed_q) + ")"));
            u.witnesses.push_back(make_witness("wedge2-of-U-is-W", wedge2_of(pU) == pW, wedge2_of(U) == W,
                                               "printed W against wedge^2 of printed U, " + wedge2_of(pU).str()));
        }
        d.cells.push_back(std::move(u));

        DiffCell w{p.family, "W", p.W, W.str(), pW == W, {}};
        if (!w.match) {
            w.witnesses.push_back(make_witness("wedge2-of-U-is-W", wedge2_of(pU) == pW, wedge2_of(U) == W,
                                               "wedge^2 of printed U is " + wedge2_of(pU).str()));
            w.witnesses.push_back(make_witness("W-is-chi_A-times-U", pW == pU.twisted(printed_chi), W == U.twisted(printed_chi),
                                               "for three one-forms wedge^2 U = chi_A U; printed chi_A U is " + pU.twisted(printed_chi).str()));
        }
        d.cells.push_back(std::move(w));

        const CharMultiset pH11 = h11_formula(pW, 3);
        DiffCell h{p.family, "H^1(Omega^1_A)", p.H11, H11.str(), pH11 == H11, {}};
        if (!h.match) {
            h.witnesses.push_back(make_witness("U-tensor-conj-U", pH11 == h11_of(pU), H11 == h11_of(U),
                                               "3·1 + 2W with printed W against U (x) conj(U) of printed U"));
            // The cell is determined by U, so a bad printed U is evidence here too.
            h.witnesses.push_back(make_witness("determinant-is-chi_A", product_of(pU) == printed_chi, product_of(U) == printed_chi,
                                               "product of the characters in U against the printed chi_A " + printed_chi.str()));
            h.witnesses.push_back(make_witness("W-is-chi_A-times-U", pW == pU.twisted(printed_chi), W == U.twisted(printed_chi),
                                               "printed chi_A U is " + pU.twisted(printed_chi).str()));
        }
        d.cells.push_back(std::move(h));

        DiffCell fx{p.family, "b2_fix(Y)", p.b2_fix.str(), f.summary.fix_Y.str(), p.b2_fix == f.summary.fix_Y, {}};
        if (!fx.match) {
            fx.witnesses.push_back(make_witness("fix-from-printed-U", fix_from(pU) == p.b2_fix, fix_from(U) == f.summary.fix_Y,
                                                "invariant parts of wedge^2 U, U (x) conj(U) from printed U give " + fix_from(pU).str()));
            fx.witnesses.push_back(make_witness("b2-is-(q,4+2q,q)", p.b2_fix + p.b2_var == expect_b2, f.summary.b2_Y() == expect_b2,
                                                "printed fix + var = " + (p.b2_fix + p.b2_var).str() + ", expected " + expect_b2.str()));
        }
        d.cells.push_back(std::move(fx));

        DiffCell vr{p.family, "b2_var(Y)", p.b2_var.str(), f.summary.var_Y.str(), p.b2_var == f.summary.var_Y, {}};
        if (!vr.match) {
            vr.witnesses.push_back(make_witness("b2-is-(q,4+2q,q)", p.b2_fix + p.b2_var == expect_b2, f.summary.b2_Y() == expect_b2,
                                                "printed fix + var = " + (p.b2_fix + p.b2_var).str() + ", expected " + expect_b2.str()));
            const long long invariant = f.summary.h2var_chars.count(one);
            vr.witnesses.push_back(make_witness("var-is-invariant-H2var", p.b2_var.total() == invariant, f.summary.var_Y.total() == invariant,
                                                "b2_var(Y) must equal the invariant part of H^2_var(X), " + std::to_string(invariant)));
        }
        if (!p.note.empty()) vr.witnesses.push_back(make_witness("normalized", true, true, p.note));
        d.cells.push_back(std::move(vr));
    }
    return d;
}

DiffReport diff_table3() {
    DiffReport d;
    d.table = "T3";
    const auto& t2 = printed_table2();
    for (const auto& p : printed_table3()) {
        const FamilyData& f = family(p.family);
        const int rank = f.scenario.rank();
        const auto masks = f.scenario.group.masks();
        const TraceVector pType(rank, p.type), pTrace(rank, p.trace_H2var), pChi(rank, p.trace_chiA);
        std::vector<long long> chi;
        for (std::size_t e = 0; e < f.scenario.order(); ++e) chi.push_back(f.summary.chi_A.value(masks[e]));
        const TraceVector cChi(rank, chi);
        const Character one = Character::trivial(rank);
        const auto t2row = std::find_if(t2.begin(), t2.end(), [&](const auto& r) { return r.family == p.family; });
        const long long printed_var = t2row->b2_var.total();

        // (a) integrality: every character multiplicity of each trace the row determines is a
        // non-negative integer. The type p(g) gives the trace 2p(g) - 3 on H^0(Omega^1_A).
        auto integral = [&](const TraceVector& t, std::string& why) {
            for (const auto& c : all_characters(rank)) {
                const Rational m = multiplicity(t, c);
                if (m.denominator() != 1 || m < 0) {
                    why = "multiplicity of " + c.str() + " is " + to_string(m);
                    return false;
                }
            }
            return true;
        };
        auto one_forms = [&](const TraceVector& type) {
            std::vector<long long> v;
            for (std::size_t e = 0; e < type.size(); ++e) v.push_back(2 * type[e] - 3);
            return TraceVector(rank, v);
        };
        auto row_integral = [&](const TraceVector& type, const TraceVector& tr, const TraceVector& chiv, std::string& why) {
            std::string w;
            if (!integral(one_forms(type), w)) {
                why = "H0(Omega1) trace from type: " + w;
                return false;
            }
            if (!integral(tr, w)) {
                why = "H2_var trace: " + w;
                return false;
            }
            if (!integral(chiv, w)) {
                why = "H0(Omega3) trace: " + w;
                return false;
            }
            return true;
        };
        std::string why_p, why_c;
        const bool int_p = row_integral(pType, pTrace, pChi, why_p);
        const bool int_c = row_integral(f.summary.type, f.summary.trace_H2var, cChi, why_c);
        const Witness a = make_witness("a-integrality", int_p, int_c, int_p ? "printed row decomposes integrally" : "printed " + why_p);
        // (b) the invariant part of H^2_var is b2_var(Y) from the printed Table 2.
        const Rational mt_p = multiplicity(pTrace, one), mt_c = multiplicity(f.summary.trace_H2var, one);
        const Witness b = make_witness("b-table2-invariants", mt_p == Rational(printed_var), mt_c == Rational(printed_var),
                                       "mult_triv(printed) = " + to_string(mt_p) + ", recomputed " + to_string(mt_c) +
                                           ", printed b2_var(Y) sum " + std::to_string(printed_var));
        // (c) chi_A(g) = (-1)^(3 - p(g)) and agrees with the printed chi_A column.
        auto parity_ok = [&](const TraceVector& type, const TraceVector& chiv) {
            for (std::size_t e = 0; e < type.size(); ++e) {
                if (chiv[e] != (((3 - type[e]) % 2 == 0) ? 1 : -1)) return false;
            }
            return true;
        };
        const Character t1chi = Character::parse(printed_table1()[std::stoi(p.family.substr(1)) - 1].chi_A);
        bool chi_vs_t1 = true;
        for (std::size_t e = 0; e < pChi.size(); ++e) chi_vs_t1 = chi_vs_t1 && pChi[e] == t1chi.value(masks[e]);
        const Witness c = make_witness("c-parity", parity_ok(pType, pChi) && chi_vs_t1, parity_ok(f.summary.type, cChi),
                                       "chi_A(g) = (-1)^(3-p(g)) and the printed chi_A " + t1chi.str());
        // (d) Lefschetz: the trace at g != 1 is fixed by p(g).
        auto lefschetz_ok = [&](const TraceVector& type, const TraceVector& tr) {
            for (std::size_t e = 1; e < type.size(); ++e) {
                if (tr[e] != closed_trace_H2_var(static_cast<int>(type[e]))) return false;
            }
            return tr[0] == f.summary.X.var.total();
        };
        const Witness dW = make_witness("d-lefschetz", lefschetz_ok(pType, pTrace), lefschetz_ok(f.summary.type, f.summary.trace_H2var),
                                        "Tr g|H2_var = -29 + 8p(4-p) for g != 1");
        const std::vector<Witness> row_witnesses = {a, b, c, dW};

        auto cell = [&](const std::string& col, const TraceVector& printed, const TraceVector& computed) {
            DiffCell x{p.family, col, printed.str(), computed.str(), printed == computed, {}};
            if (!x.match) x.witnesses = row_witnesses;
            d.cells.push_back(std::move(x));
        };
        cell("type", pType, f.summary.type);
        cell("trace H2_var", pTrace, f.summary.trace_H2var);
        cell("trace H0(Omega3)", pChi, cChi);

        const std::string mc = to_string(f.summary.mult_chiA);
        DiffCell m{p.family, "mult chi_A", std::to_string(p.mult_chiA), mc, Rational(p.mult_chiA) == f.summary.mult_chiA, {}};
        if (!m.match) {
            m.witnesses = row_witnesses;
            const Character pchar = Character::from_generator_values({static_cast<int>(pChi[1]), static_cast<int>(pChi[2]), static_cast<int>(pChi[3])});
            const Rational own = multiplicity(pTrace, pchar);
            m.witnesses.push_back(make_witness("e-mult-from-printed-trace", own == Rational(p.mult_chiA),
                                               multiplicity(f.summary.trace_H2var, f.summary.chi_A) == f.summary.mult_chiA,
                                               "multiplicity of " + pchar.str() + " in the printed trace is " + to_string(own)));
        }
        d.cells.push_back(std::move(m));
    }
    return d;
}

namespace {

void diff_sign_grid(DiffReport& d, const SignTable& printed, const SignTable& computed, const std::string& prefix,
                    const std::function<std::vector<Witness>(std::size_t, std::size_t)>& witnesses) {
    for (std::size_t r = 0; r < printed.row_labels.size(); ++r) {
        for (std::size_t k = 0; k < printed.column_labels.size(); ++k) {
            const int ps = printed.signs[r][k], cs = computed.signs[r][k];
            DiffCell c{"theta" + printed.row_labels[r], prefix + printed.column_labels[k], ps > 0 ? "+" : "-", cs > 0 ? "+" : "-", ps == cs, {}};
            if (!c.match) c.witnesses = witnesses(r, k);
            d.cells.push_back(std::move(c));
        }
    }
}

}  // namespace

DiffReport diff_theta_table() {
    DiffReport d;
    d.table = "theta-table";
    const SignTable printed = printed_theta_table();
    const SignTable computed = generator_sign_table();
    // Columns: i1 i2 i3 i12 i13 i23 i123; i12 i13 = i23 in G0, so each row must satisfy s12 s13 = s23.
    auto mult_ok = [](const std::vector<int>& row) { return row[3] * row[4] == row[5]; };
    diff_sign_grid(d, printed, computed, "", [&](std::size_t r, std::size_t) {
        return std::vector<Witness>{make_witness("row-is-a-character", mult_ok(printed.signs[r]), mult_ok(computed.signs[r]),
                                                 "sign(i12) sign(i13) must equal sign(i23)")};
    });
    return d;
}

DiffReport diff_theta_worked() {
    DiffReport d;
    d.table = "theta-worked";
    const SignTable lemma = printed_theta_table();
    const auto& tokens = basic_tokens();
    for (const char* fam : {"S2", "S6"}) {
        const FamilyData& f = family(fam);
        const SignTable printed = printed_worked_table(fam);
        const SignTable computed = worked_sign_table(f.scenario.group);
        diff_sign_grid(d, printed, computed, std::string(fam) + " ", [&](std::size_t r, std::size_t k) {
            // The worked entry must be the product of the printed G0 table entries along the word.
            int s = 1;
            for (const auto& tok : f.scenario.group.generators()[k].word()) {
                s *= lemma.signs[r][static_cast<std::size_t>(std::find(tokens.begin(), tokens.end(), tok) - tokens.begin())];
            }
            return std::vector<Witness>{make_witness("product-of-printed-G0-table", printed.signs[r][k] == s, computed.signs[r][k] == s,
                                                     std::string("the printed G0 table gives ") + (s > 0 ? "+" : "-"))};
        });
    }
    return d;
}

DiffReport diff_hodge_x() {
    DiffReport d;
    d.table = "hodge-X";
    const PrintedXInvariants p = printed_x_invariants();
    const XInvariants X = x_invariants(family("S1").scenario.divisor_selfint);
    const Witness euler = make_witness("euler-betti", p.euler == 2 - 2 * p.b1 + p.b2, X.euler == 2 - 2 * X.b1 + X.b2, "e = 2 - 2 b1 + b2");
    const Witness split = make_witness("fix-plus-var", (p.fix + p.var).total() == p.b2, (X.fix + X.var).total() == X.b2, "fix + var = b2");
    auto cell = [&](const std::string& name, const std::string& printed, const std::string& computed) {
        DiffCell c{"X", name, printed, computed, printed == computed, {}};
        if (!c.match) c.witnesses = {euler, split};
        d.cells.push_back(std::move(c));
    };
    cell("euler", std::to_string(p.euler), std::to_string(X.euler));
    cell("b1", std::to_string(p.b1), std::to_string(X.b1));
    cell("b2", std::to_string(p.b2), std::to_string(X.b2));
    cell("var", p.var.str(), X.var.str());
    cell("fix", p.fix.str(), X.fix.str());
    return d;
}

DiffReport diff_by_name(const std::string& which) {
    if (which == "1") return diff_table1();
    if (which == "2") return diff_table2();
    if (which == "3") return diff_table3();
    if (which == "theta") return diff_theta_table();
    if (which == "theta-worked") return diff_theta_worked();
    if (which == "hodge-x") return diff_hodge_x();
    throw ValidationError("unknown table \"" + which + "\" (expected 1, 2, 3, theta, theta-worked or hodge-x)");
}

std::string render(const DiffReport& d, Format f) {
    std::ostringstream os;
    if (f == Format::json) {
        json j;
        j["schema"] = "1";
        j["table"] = d.table;
        j["summary"] = {{"cells", d.cells.size()}, {"match", d.matches()}, {"mismatch", d.mismatches()}, {"unwitnessed", d.unwitnessed()}};
        json cells = json::array();
        for (const auto& c : d.cells) {
            if (c.match) continue;
            json w = json::array();
            for (const auto& x : c.witnesses) {
                w.push_back({{"name", x.name}, {"printed_ok", x.printed_ok}, {"recomputed_ok", x.recomputed_ok}, {"detail", x.detail}});
            }
            cells.push_back({{"row", c.row}, {"column", c.column}, {"status", "mismatch"}, {"printed", c.printed},
                             {"recomputed", c.recomputed}, {"evidence", w}});
        }
        j["mismatches"] = cells;
        os << j.dump(2) << "\n";
        return os.str();
    }
    if (f == Format::csv) {
        os << "table,row,column,status,printed,recomputed,witnesses\n";
        for (const auto& c : d.cells) {
            std::string ws;
            for (const auto& x : c.witnesses) {
                if (x.discriminates()) ws += (ws.empty() ? "" : ";") + x.name;
            }
            os << d.table << "," << csv_escape(c.row) << "," << csv_escape(c.column) << "," << (c.match ? "match" : "mismatch") << ","
               << csv_escape(c.printed) << "," << csv_escape(c.recomputed) << "," << csv_escape(ws) << "\n";
        }
        return os.str();
    }
    os << "## Diff against the printed " << d.table << "\n\n";
    os << d.matches() << " of " << d.cells.size() << " cells match, " << d.mismatches() << " mismatch";
    if (d.unwitnessed() > 0) os << " (" << d.unwitnessed() << " without a discriminating witness)";
    os << "\n";
    if (d.mismatches() > 0) {
        os << "\n| row | column | printed | recomputed | evidence |\n|---|---|---|---|---|\n";
        for (const auto& c : d.cells) {
            if (c.match) continue;
            std::string ev;
            for (const auto& x : c.witnesses) {
                if (!x.discriminates()) continue;
                ev += (ev.empty() ? "" : "; ") + x.name + ": " + x.detail;
            }
            if (ev.empty()) ev = "none";
            os << "| " << c.row << " | " << c.column << " | " << unicode(c.printed) << " | " << unicode(c.recomputed) << " | " << ev << " |\n";
        }
    }
    return os.str();
}

}  // namespace burniat
