#pragma once

// Floating-point theta functions and a numerical cross-check of the symbolic
// sign model.

#include <array>
#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "burniat/affine_group.hpp"
#include "burniat/scenario.hpp"
#include "burniat/theta_model.hpp"

namespace burniat {

using Complex = std::complex<double>;

struct ThetaParams {
    double a = 0.0;
    double b = 0.0;
    Complex tau{0.0, 1.0};
    double truncation_tol = 1e-12;
};

struct EvalResult {
    Complex value;
    double error_bound = 0.0;  // tail bound plus a rounding allowance
    int order = 0;  // terms |n| <= order
};

// Tail bound of the series outside |n| <= N; infinity when N is too small
// for the geometric estimate to apply.
double theta_tail_bound(const ThetaParams& p, Complex z, int N);

// theta[a;b](z, tau) = sum_n exp(pi i (n+a)^2 tau + 2 pi i (n+a)(z+b)).
EvalResult theta_eval_order(const ThetaParams& p, Complex z, int N);
EvalResult theta_eval(const ThetaParams& p, Complex z);

Complex parse_complex(const std::string& text);  // "0.3+1.2i", "i", "2i", "-0.5-1i"
std::string format_complex(Complex z);

// f_j(z) = theta[j/2;0](2z, 2tau), j = 0, 1: the concrete basis of H^0(E, L0^2).
class Level2Basis {
public:
    explicit Level2Basis(Complex tau, double tol = 1e-12);

    EvalResult eval(int j, Complex z) const;
    Complex tau() const { return tau_; }
    double tol() const { return tol_; }

private:
    Complex tau_;
    double tol_;
};

// Linearized action of z -> s z + c on span{f_0, f_1}: after multiplying by
// exp(2 pi i k z), f_j(s z + c) = sum_i M(i, j) f_i(z).
struct FactorMatrix {
    Eigen::Matrix2cd raw;
    Eigen::Matrix2cd normalized;  // raw / sqrt(mu), where raw^2 = mu I
    int k = 0;
    Complex mu;
    double residual = 0.0;  // relative least-squares residual
    double square_deviation = 0.0;  // |normalized^2 - I|
};

FactorMatrix recover_factor_action(const Level2Basis& basis, const FactorAction& f, int samples, std::mt19937_64& rng);

struct BasisCheck {
    double evenness = 0.0;  // max |f_j(-z) - f_j(z)| / bound
    double t_sign = 0.0;  // max |f_j(-z + 1/2) - s_j f_j(z)| / bound, s = (+, -)
    bool squares_vanish = false;  // each theta[a;b]^2 has a double zero at one 2-torsion point
    bool tau_offdiagonal = false;  // tau-type action swaps f_0 and f_1
    bool passed = false;
    std::string detail;
};

BasisCheck check_level2_basis(Complex tau, int samples, std::uint64_t seed, double tol = 1e-9);

struct SignVerification {
    bool passed = false;
    SignTable numeric;  // rows labelled by the matched symbolic basis vector
    std::vector<std::pair<int, int>> mismatches;  // (row, column) of the symbolic table
    double max_offdiagonal = 0.0;
    double max_sign_deviation = 0.0;  // over agreeing entries
    double max_commutator = 0.0;
    double max_involution = 0.0;
    double max_fit_residual = 0.0;
    std::vector<std::string> notes;
    // Joint eigenvectors in the f-product basis, one column per matched row.
    Eigen::MatrixXcd eigenvectors;
    std::array<Complex, 3> taus{};
};

// Numerical 8x7 table for i1 ... i123 against the symbolic one (default: the
// model's table). Gauge: flips act by +1 and theta_222 is fully invariant.
SignVerification verify_sign_table(const std::array<Complex, 3>& taus, int samples, double tol, std::uint64_t seed,
                                   const SignTable& symbolic = generator_sign_table());

// Generator signs derived from the numerical eigenbasis.
SignTable numeric_worked_table(const SignVerification& v, const ActionGroup& group);

// Fixed points of g on E1 x E2 x E3 found by Newton steps on the lattice residual.
// Returns -1 when the locus is positive-dimensional.
long long numeric_fixed_point_count(const GroupElement& g, const std::array<Complex, 3>& taus, int starts = 12);

struct AvoidanceResult {
    std::string chi0;
    int eigenspace_dim = 0;
    bool avoids_all = false;  // a generic section is nonzero at every fixed point
    double min_max_value = 0.0;  // min over fixed points of max |section|
};

// For an element with isolated fixed points (S1, S2: j = i1 i2 i3), checks that a generic
// invariant section avoids the 64 two-torsion points for every admissible chi0.
std::vector<AvoidanceResult> avoidance_certificate(const Scenario& s, const SignVerification& v);

struct NumericConfig {
    std::array<Complex, 3> taus{Complex(0, 1), Complex(0, 1), Complex(0, 1)};
    int samples = 100;
    double tol = 1e-9;
    std::uint64_t seed = 1;
};

struct NumericCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct NumericReport {
    NumericConfig config;
    std::vector<NumericCheck> checks;
    SignVerification signs;

    bool passed() const;
};

NumericReport run_numeric(const NumericConfig& config);

}  // namespace burniat
