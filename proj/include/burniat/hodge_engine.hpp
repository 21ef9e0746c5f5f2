#pragma once

#include <optional>
#include <string>
#include <vector>

#include "burniat/characters.hpp"
#include "burniat/form_actions.hpp"
#include "burniat/scenario.hpp"

namespace burniat {

struct HodgeTriple {
    long long h20 = 0;
    long long h11 = 0;
    long long h02 = 0;

    long long total() const { return h20 + h11 + h02; }
    std::string str() const;  // "(1,3,1)"
    friend HodgeTriple operator+(const HodgeTriple& a, const HodgeTriple& b) {
        return {a.h20 + b.h20, a.h11 + b.h11, a.h02 + b.h02};
    }
    friend bool operator==(const HodgeTriple&, const HodgeTriple&) = default;
};

// Invariants of a smooth ample hypersurface X in an abelian threefold A.
struct XInvariants {
    long long euler = 0;  // e(X) = D^3
    long long c1sq = 0;  // c1^2(X) = D^3
    long long b1 = 0;
    long long b2 = 0;
    HodgeTriple fix;  // image of H^2(A)
    HodgeTriple var;
    long long sections = 0;  // h^0(D) = D^3 / 6
};

long long euler_X(long long divisor_selfint);
XInvariants x_invariants(long long divisor_selfint);

// Real-cohomology traces on A from the +-1 eigenvalues on holomorphic 1-forms.
long long trace_H1_A(const DzSignature& dz);
long long trace_H2_A(const DzSignature& dz);
// Lefschetz for a fixed-point-free g on X: 0 = 2 - 2 Tr|H1 + Tr|H2(A) + Tr|H2var.
long long trace_H2_var(const DzSignature& dz, bool free);

// Closed forms for three elliptic factors, p = number of +1 eigenvalues.
long long closed_trace_H1_A(int p);
long long closed_trace_H2_A(int p);
long long closed_trace_H2_var(int p);

DzSignature dz_from_type(long long p, int dim);

// Characters occurring in the section space: the admissible choices of chi0.
std::vector<Character> admissible_chi0(const Scenario& s);
Character default_chi0(const Scenario& s);

// Residues of theta/theta0 dz1^dz2^dz3, minus the kernel H^0(Omega^3_A).
CharMultiset h20_var_characters(const Scenario& s, const Character& chi0);

struct HodgeSummary {
    XInvariants X;
    int q_Y = 0;
    HodgeTriple fix_Y;
    HodgeTriple var_Y;
    long long euler_Y = 0;
    long long c1sq_Y = 0;
    Character chi_A;
    Character chi0;
    OneFormData one_forms;
    TraceVector type;  // p(g)
    TraceVector trace_U;  // holomorphic 1-forms, 2p - 3
    TraceVector trace_H1;
    TraceVector trace_H2A;
    TraceVector trace_H2var;
    CharMultiset h2var_chars;
    CharMultiset h20var_chars;
    TraceVector h11var_trace;
    Rational mult_chiA;

    HodgeTriple b2_Y() const { return fix_Y + var_Y; }
};

// Trace vectors from a type vector (p-values); identity entry of H2var is b2var(X).
struct TraceSet {
    TraceVector U, H1, H2A, H2var;
};
TraceSet traces_from_type(const TraceVector& type, const XInvariants& X, int dim = 3);

TraceVector trace_H2_var_vector(const Scenario& s);

HodgeSummary hodge_Y(const Scenario& s, std::optional<Character> chi0 = std::nullopt);

struct AuditCheck {
    std::string id;
    std::string description;
    bool passed = false;
    std::string detail;
};

struct AuditReport {
    std::string scenario;
    std::vector<AuditCheck> checks;

    bool passed() const;
    const AuditCheck* find(const std::string& id) const;
};

// Redundant cross-checks. With type_override, every trace is recomputed from
// the supplied type vector instead of the one-form characters.
AuditReport consistency_suite(const Scenario& s, const std::optional<TraceVector>& type_override = std::nullopt);

}  // namespace burniat
