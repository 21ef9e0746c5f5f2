#include "burniat/hodge_engine.hpp"

#include <algorithm>
#include <functional>

namespace burniat {

namespace {

constexpr int kDim = 3;

long long trivial_count(const CharMultiset& m) { return m.count(Character::trivial(m.rank())); }

long long integral_multiplicity(const TraceVector& t, const Character& chi) {
    Rational r = multiplicity(t, chi);
    if (r.denominator() != 1 || r < 0) throw NonRepresentation(t, chi, r);
    return r.numerator();
}

// Elementary symmetric polynomial e2 of a list.
long long e2(const std::vector<long long>& v) {
    long long s = 0;
    for (std::size_t a = 0; a < v.size(); ++a) {
        for (std::size_t b = a + 1; b < v.size(); ++b) s += v[a] * v[b];
    }
    return s;
}

// Each holomorphic eigenvalue appears twice in real cohomology (H^{1,0} and H^{0,1}).
std::vector<long long> doubled(const DzSignature& dz) {
    std::vector<long long> v;
    for (int s : dz) {
        v.push_back(s);
        v.push_back(s);
    }
    return v;
}

}  // namespace

std::string HodgeTriple::str() const {
    return "(" + std::to_string(h20) + "," + std::to_string(h11) + "," + std::to_string(h02) + ")";
}

long long euler_X(long long d3) {
    if (d3 <= 0) throw ValidationError("divisor self-intersection must be positive, got " + std::to_string(d3));
    return d3;
}

XInvariants x_invariants(long long d3) {
    XInvariants x;
    x.euler = euler_X(d3);
    x.c1sq = d3;
    x.b1 = 2 * kDim;
    x.b2 = x.euler - 2 + 2 * x.b1;
    x.fix = {kDim * (kDim - 1) / 2, kDim * kDim, kDim * (kDim - 1) / 2};
    if (d3 % 6 != 0) throw ValidationError("D^3 = " + std::to_string(d3) + " is not divisible by 6");
    x.sections = d3 / 6;
    // Poincare residue: h^{2,0}(X) = (h^0(D) - 1) + h^{2,0}(A).
    const long long h20var = x.sections - 1;
    const long long b2var = x.b2 - x.fix.total();
    x.var = {h20var, b2var - 2 * h20var, h20var};
    return x;
}

long long trace_H1_A(const DzSignature& dz) {
    long long t = 0;
    for (int s : dz) t += s;
    return 2 * t;
}

long long trace_H2_A(const DzSignature& dz) { return e2(doubled(dz)); }

long long trace_H2_var(const DzSignature& dz, bool free) {
    if (!free) throw ValidationError("the Lefschetz trace formula needs an element acting freely on X");
    return -2 + 2 * trace_H1_A(dz) - trace_H2_A(dz);
}

long long closed_trace_H1_A(int p) { return 4 * p - 6; }
long long closed_trace_H2_A(int p) { return 8 * p * (p - 3) + 15; }
long long closed_trace_H2_var(int p) { return -29 + 8 * p * (4 - p); }

DzSignature dz_from_type(long long p, int dim) {
    if (p < 0 || p > dim) throw ValidationError("type value " + std::to_string(p) + " out of range 0.." + std::to_string(dim));
    DzSignature dz(dim, -1);
    std::fill(dz.begin(), dz.begin() + p, 1);
    return dz;
}

std::vector<Character> admissible_chi0(const Scenario& s) {
    std::vector<Character> out;
    for (const auto& [c, k] : s.sections.entries()) out.push_back(c);
    return out;
}

Character default_chi0(const Scenario& s) {
    if (s.chi0) return *s.chi0;
    const Character triv = Character::trivial(s.rank());
    if (s.sections.count(triv) > 0) return triv;
    auto adm = admissible_chi0(s);
    if (adm.empty()) throw ValidationError("empty section space");
    return adm.front();
}

CharMultiset h20_var_characters(const Scenario& s, const Character& chi0) {
    if (s.sections.count(chi0) == 0) {
        throw ValidationError("chi0 " + chi0.str() + " does not occur in the section space " + s.sections.str());
    }
    const Character chiA = chi_A(s.one_forms);
    CharMultiset m = s.sections.twisted(chi0 * chiA);
    m.add(chiA, -1);
    return m;
}

TraceSet traces_from_type(const TraceVector& type, const XInvariants& X, int dim) {
    std::vector<long long> u, h1, h2a, h2var;
    for (std::size_t i = 0; i < type.size(); ++i) {
        DzSignature dz = dz_from_type(type[i], dim);
        u.push_back(trace_H1_A(dz) / 2);
        h1.push_back(trace_H1_A(dz));
        h2a.push_back(trace_H2_A(dz));
        h2var.push_back(i == 0 ? X.b2 - X.fix.total() : trace_H2_var(dz, true));
    }
    const int r = type.rank();
    return {TraceVector(r, u), TraceVector(r, h1), TraceVector(r, h2a), TraceVector(r, h2var)};
}

TraceVector trace_H2_var_vector(const Scenario& s) {
    const XInvariants X = x_invariants(s.divisor_selfint);
    std::vector<long long> v;
    const auto& masks = s.group.masks();
    for (std::size_t i = 0; i < s.order(); ++i) {
        if (i == 0) {
            v.push_back(X.b2 - X.fix.total());
            continue;
        }
        v.push_back(trace_H2_var(dz_signs_at(s.one_forms, masks[i]), s.status[i] != ElementStatus::identity));
    }
    return TraceVector(s.rank(), v);
}

HodgeSummary hodge_Y(const Scenario& s, std::optional<Character> chi0) {
    HodgeSummary h;
    h.X = x_invariants(s.divisor_selfint);
    h.chi0 = chi0 ? *chi0 : default_chi0(s);
    h.one_forms = one_form_data(s.one_forms);
    h.q_Y = h.one_forms.q;
    h.chi_A = chi_A(s.one_forms);
    h.type = type_vector(s.one_forms);
    const TraceSet t = traces_from_type(h.type, h.X, s.dimension());
    h.trace_U = t.U;
    h.trace_H1 = t.H1;
    h.trace_H2A = t.H2A;
    h.trace_H2var = trace_H2_var_vector(s);
    h.h2var_chars = decompose_trace(h.trace_H2var);
    h.h20var_chars = h20_var_characters(s, h.chi0);
    h.h11var_trace = h.trace_H2var - 2 * trace_of_multiset(h.h20var_chars);

    const CharMultiset w = wedge2_characters(s.one_forms);
    const CharMultiset h11 = h11_characters(s.one_forms);
    h.fix_Y = {trivial_count(w), trivial_count(h11), trivial_count(w)};
    const long long v20 = trivial_count(h.h20var_chars);
    h.var_Y = {v20, integral_multiplicity(h.h11var_trace, Character::trivial(s.rank())), v20};

    const long long order = static_cast<long long>(s.order());
    h.euler_Y = h.X.euler / order;
    h.c1sq_Y = h.X.c1sq / order;
    h.mult_chiA = multiplicity(h.trace_H2var, h.chi_A);
    return h;
}

bool AuditReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const AuditCheck& c) { return c.passed; });
}

const AuditCheck* AuditReport::find(const std::string& id) const {
    for (const auto& c : checks) {
        if (c.id == id) return &c;
    }
    return nullptr;
}

AuditReport consistency_suite(const Scenario& s, const std::optional<TraceVector>& type_override) {
    AuditReport report;
    report.scenario = s.name;
    auto run = [&](const std::string& id, const std::string& description, const std::function<std::string()>& body) {
        AuditCheck c{id, description, false, ""};
        try {
            c.detail = body();
            c.passed = c.detail.rfind("FAIL", 0) != 0;
        } catch (const std::exception& e) {
            c.detail = std::string("FAIL: ") + e.what();
        }
        report.checks.push_back(std::move(c));
    };
    auto fail = [](const std::string& msg) { return "FAIL: " + msg; };

    const XInvariants X = x_invariants(s.divisor_selfint);
    const long long order = static_cast<long long>(s.order());
    const int r = s.rank();
    const Character triv = Character::trivial(r);
    const OneFormData forms = one_form_data(s.one_forms);
    const TraceVector type = type_override ? *type_override : type_vector(s.one_forms);
    if (type.rank() != r) throw ValidationError("type vector override has the wrong length");
    const Character chiA = chi_A(s.one_forms);
    const Character chi0 = default_chi0(s);
    const CharMultiset w = wedge2_characters(s.one_forms);
    const CharMultiset h11 = h11_characters(s.one_forms);

    // Everything below is recomputed from `type`, so an override propagates.
    auto traces = [&] { return traces_from_type(type, X, s.dimension()); };
    auto var_triple = [&]() -> HodgeTriple {
        const CharMultiset h20 = h20_var_characters(s, chi0);
        const TraceVector h11var = traces().H2var - 2 * trace_of_multiset(h20);
        const long long v20 = trivial_count(h20);
        return {v20, integral_multiplicity(h11var, triv), v20};
    };
    const HodgeTriple fix{trivial_count(w), trivial_count(h11), trivial_count(w)};

    run("a-euler", "e(Y) |G| = e(X)", [&] {
        if (X.euler % order != 0) return fail("e(X) = " + std::to_string(X.euler) + " is not divisible by |G| = " + std::to_string(order));
        return "e(X) = " + std::to_string(X.euler) + " = " + std::to_string(order) + " * " + std::to_string(X.euler / order);
    });

    run("b-betti", "b2(Y) = (q,4+2q,q), e(Y) = 2 - 4q + b2(Y), Noether", [&] {
        const HodgeTriple b2 = fix + var_triple();
        const long long q = forms.q;
        const long long eY = X.euler / order, kY = X.c1sq / order;
        const HodgeTriple expect{q, 4 + 2 * q, q};
        if (!(b2 == expect)) return fail("b2(Y) = " + b2.str() + ", expected " + expect.str());
        if (eY != 2 - 4 * q + b2.total()) return fail("e(Y) = " + std::to_string(eY) + " but 2 - 4q + b2 = " + std::to_string(2 - 4 * q + b2.total()));
        if (12 * (1 - q + b2.h20) != kY + eY) return fail("Noether: 12 chi(O_Y) != K^2 + e");
        return "b2(Y) = " + b2.str() + ", e(Y) = " + std::to_string(eY) + ", 12 chi = " + std::to_string(12 * (1 - q + b2.h20));
    });

    run("c-two-routes", "invariant dimensions and chi_A from multisets agree with trace formulas", [&] {
        const TraceSet t = traces();
        const Rational qU = multiplicity(t.U, triv);
        if (qU != Rational(forms.q)) return fail("q from 1-form characters is " + std::to_string(forms.q) + ", trace formula on U gives " + to_string(qU));
        const Rational fixTr = multiplicity(t.H2A, triv);
        if (fixTr != Rational(fix.total())) return fail("fixed invariants " + fix.str() + " vs trace formula " + to_string(fixTr));
        std::vector<long long> parity;
        for (std::size_t i = 0; i < type.size(); ++i) parity.push_back((s.dimension() - type[i]) % 2 == 0 ? 1 : -1);
        if (TraceVector(r, parity) != trace_of_multiset([&] {
                CharMultiset m(r);
                m.add(chiA);
                return m;
            }())) {
            return fail("chi_A " + chiA.str() + " disagrees with the parity of the type vector " + type.str());
        }
        const HodgeTriple var = var_triple();
        const Rational varTr = multiplicity(t.H2var, triv);
        if (varTr != Rational(var.total())) return fail("variable invariants " + var.str() + " vs trace formula " + to_string(varTr));
        return "q = " + std::to_string(forms.q) + ", fix " + fix.str() + ", var " + var.str();
    });

    run("d-integrality", "every produced trace vector decomposes into characters", [&] {
        const TraceSet t = traces();
        const CharMultiset h20 = h20_var_characters(s, chi0);
        const std::vector<std::pair<std::string, TraceVector>> all = {
            {"H^0(Omega^1)", t.U},
            {"H^1(A)", t.H1},
            {"H^2(A)", t.H2A},
            {"H^2_var(X)", t.H2var},
            {"H^{1,1}_var(X)", t.H2var - 2 * trace_of_multiset(h20)},
            {"H^0(L)", trace_of_multiset(s.sections)},
        };
        for (const auto& [name, v] : all) {
            try {
                decompose_trace(v);
            } catch (const NonRepresentation& e) {
                return fail(name + ": " + e.what());
            }
        }
        return std::string("6 trace vectors decompose");
    });

    run("e-c1sq", "c1^2(Y) = D^3/|G| = 6", [&] {
        if (X.c1sq % order != 0) return fail("D^3 not divisible by |G|");
        if (X.c1sq / order != 6) return fail("c1^2(Y) = " + std::to_string(X.c1sq / order));
        return std::string("c1^2(Y) = 6");
    });

    run("f-splits", "fix/var character multisets sum to the invariants of X", [&] {
        const CharMultiset h20 = h20_var_characters(s, chi0);
        const TraceVector h11var = traces().H2var - 2 * trace_of_multiset(h20);
        const HodgeTriple fixX{w.total(), h11.total(), w.total()};
        const HodgeTriple varX{h20.total(), h11var.at_identity(), h20.total()};
        if (!(fixX == X.fix)) return fail("fixed part " + fixX.str() + " vs " + X.fix.str());
        if (!(varX == X.var)) return fail("variable part " + varX.str() + " vs " + X.var.str());
        if (fixX.total() + varX.total() != X.b2) return fail("fix + var != b2(X)");
        if (X.b2 != X.euler - 2 + 2 * X.b1) return fail("b2(X) != e - 2 + 2 b1");
        return "fix " + fixX.str() + " + var " + varX.str() + " = " + std::to_string(X.b2);
    });

    run("g-chi0", "reported invariants agree for every admissible chi0", [&] {
        if (type_override) return std::string("skipped under a type override");
        const HodgeSummary ref = hodge_Y(s, chi0);
        for (const auto& c : admissible_chi0(s)) {
            const HodgeSummary h = hodge_Y(s, c);
            if (!(h.var_Y == ref.var_Y) || !(h.fix_Y == ref.fix_Y) || h.mult_chiA != ref.mult_chiA ||
                h.h20var_chars.count(h.chi_A) != ref.h20var_chars.count(ref.chi_A)) {
                return fail("chi0 = " + c.str() + " changes the reported invariants");
            }
        }
        return std::to_string(admissible_chi0(s).size()) + " admissible chi0 agree";
    });

    run("h-closed-form", "generic trace route matches -29 + 8p(4-p) and its parts", [&] {
        const TraceSet t = traces();
        for (std::size_t i = 1; i < type.size(); ++i) {
            const int p = static_cast<int>(type[i]);
            if (t.H1[i] != closed_trace_H1_A(p) || t.H2A[i] != closed_trace_H2_A(p) || t.H2var[i] != closed_trace_H2_var(p)) {
                return fail("element " + std::to_string(i) + " with p = " + std::to_string(p));
            }
        }
        return std::to_string(type.size() - 1) + " elements agree";
    });

    return report;
}

}  // namespace burniat
