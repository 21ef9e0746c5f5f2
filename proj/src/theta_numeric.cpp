#include "burniat/theta_numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "burniat/errors.hpp"
#include "burniat/scenario_registry.hpp"

namespace burniat {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};
constexpr int kMaxOrder = 100000;

void require_upper_half_plane(Complex tau) {
    if (!(tau.imag() > 0.0)) throw ValidationError("tau must have positive imaginary part, got " + format_complex(tau));
}

// Sum of exp(-g(m)) over m >= m0, g(m) = pi y m^2 + 2 pi v m, with m0 > 0.
double one_sided_tail(double y, double v, double m0) {
    const double delta = kPi * y * (2.0 * m0 + 1.0) + 2.0 * kPi * v;
    const double first_gap = kPi * y * m0 * m0 + 2.0 * kPi * v * m0;
    if (delta <= 0.0 || m0 <= 0.0) return std::numeric_limits<double>::infinity();
    return std::exp(-first_gap) / (1.0 - std::exp(-delta));
}

// Point of C reduced to lattice coordinates w = u + v tau.
std::pair<double, double> lattice_coords(Complex w, Complex tau) {
    const double v = w.imag() / tau.imag();
    const double u = w.real() - v * tau.real();
    return {u, v};
}

Complex half_period(const HalfPeriod& h, Complex tau) { return 0.5 * static_cast<double>(h.b1) + 0.5 * static_cast<double>(h.b2) * tau; }

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
    return out;
}

double max_abs(const Eigen::MatrixXcd& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

Complex sample_point(std::mt19937_64& rng, Complex tau) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double x = u(rng);
    const double y = u(rng);
    return x + y * tau;
}

bool well_conditioned(const EvalResult& r) { return std::abs(r.value) > 1e3 * std::max(r.error_bound, 1e-300); }

}  // namespace

double theta_tail_bound(const ThetaParams& p, Complex z, int N) {
    require_upper_half_plane(p.tau);
    const double y = p.tau.imag();
    const double v = z.imag();
    return one_sided_tail(y, v, N + 1 + p.a) + one_sided_tail(y, -v, N + 1 - p.a);
}

EvalResult theta_eval_order(const ThetaParams& p, Complex z, int N) {
    require_upper_half_plane(p.tau);
    if (N < 0) throw ValidationError("truncation order must be non-negative");
    Complex sum = 0.0;
    double magnitude = 0.0;
    for (int n = -N; n <= N; ++n) {
        const double m = n + p.a;
        const Complex term = std::exp(kI * kPi * m * m * p.tau + 2.0 * kI * kPi * m * (z + p.b));
        sum += term;
        magnitude += std::abs(term);
    }
    const double rounding = 16.0 * std::numeric_limits<double>::epsilon() * magnitude;
    return {sum, theta_tail_bound(p, z, N) + rounding, N};
}

EvalResult theta_eval(const ThetaParams& p, Complex z) {
    require_upper_half_plane(p.tau);
    if (!(p.truncation_tol > 0.0)) throw ValidationError("truncation tolerance must be positive");
    int N = 1;
    while (theta_tail_bound(p, z, N) > p.truncation_tol) {
        if (++N > kMaxOrder) throw Error("theta series did not reach tolerance by order " + std::to_string(kMaxOrder));
    }
    return theta_eval_order(p, z, N);
}

Complex parse_complex(const std::string& text) {
    std::string s;
    for (char c : text) {
        if (c != ' ') s += c;
    }
    auto bad = [&] { return ParseError("bad complex number \"" + text + "\" (expected a+bi)"); };
    if (s.empty()) throw bad();
    auto number = [&](const std::string& part) {
        std::size_t used = 0;
        double x = 0.0;
        try {
            x = std::stod(part, &used);
        } catch (const std::exception&) {
            throw bad();
        }
        if (used != part.size()) throw bad();
        return x;
    };
    if (s.back() != 'i') return {number(s), 0.0};
    s.pop_back();
    // Split at the last sign that is not a leading sign or an exponent sign.
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    const std::string re = split == std::string::npos ? "" : s.substr(0, split);
    std::string im = split == std::string::npos ? s : s.substr(split);
    if (im.empty() || im == "+") im = "1";
    if (im == "-") im = "-1";
    return {re.empty() ? 0.0 : number(re), number(im)};
}

std::string format_complex(Complex z) {
    std::ostringstream os;
    os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
    return os.str();
}

Level2Basis::Level2Basis(Complex tau, double tol) : tau_(tau), tol_(tol) { require_upper_half_plane(tau); }

EvalResult Level2Basis::eval(int j, Complex z) const {
    if (j != 0 && j != 1) throw ValidationError("level-2 basis index must be 0 or 1");
    ThetaParams p;
    p.a = 0.5 * j;
    p.tau = 2.0 * tau_;
    p.truncation_tol = tol_;
    return theta_eval(p, 2.0 * z);
}

FactorMatrix recover_factor_action(const Level2Basis& basis, const FactorAction& f, int samples, std::mt19937_64& rng) {
    if (samples < 4) throw ValidationError("need at least 4 sample points");
    const Complex c = half_period(f.shift, basis.tau());
    std::vector<Complex> points;
    Eigen::MatrixXcd A(samples, 2), image(samples, 2);
    int attempts = 0;
    while (static_cast<int>(points.size()) < samples) {
        if (++attempts > 50 * samples) throw Error("sample points keep landing near theta zeros; recovery is ill-conditioned");
        const Complex z = sample_point(rng, basis.tau());
        const Complex w = static_cast<double>(f.sign) * z + c;
        const EvalResult a0 = basis.eval(0, z), a1 = basis.eval(1, z), b0 = basis.eval(0, w), b1 = basis.eval(1, w);
        if (!well_conditioned(a0) || !well_conditioned(a1) || !well_conditioned(b0) || !well_conditioned(b1)) continue;
        const auto r = static_cast<Eigen::Index>(points.size());
        A(r, 0) = a0.value;
        A(r, 1) = a1.value;
        image(r, 0) = b0.value;
        image(r, 1) = b1.value;
        points.push_back(z);
    }

    FactorMatrix best;
    best.residual = std::numeric_limits<double>::infinity();
    const auto qr = A.colPivHouseholderQr();
    for (int k = -2; k <= 2; ++k) {
        Eigen::MatrixXcd B = image;
        for (int r = 0; r < samples; ++r) B.row(r) *= std::exp(2.0 * kPi * kI * static_cast<double>(k) * points[r]);
        const Eigen::MatrixXcd M = qr.solve(B);
        const double residual = (A * M - B).norm() / B.norm();
        if (residual < best.residual) {
            best.residual = residual;
            best.k = k;
            best.raw = M;
        }
    }
    const Eigen::Matrix2cd sq = best.raw * best.raw;
    best.mu = sq.trace() / 2.0;
    best.normalized = best.raw / std::sqrt(best.mu);
    best.square_deviation = max_abs(best.normalized * best.normalized - Eigen::Matrix2cd::Identity());
    return best;
}

BasisCheck check_level2_basis(Complex tau, int samples, std::uint64_t seed, double tol) {
    BasisCheck out;
    const Level2Basis basis(tau);
    std::mt19937_64 rng(seed);
    std::ostringstream detail;

    // Evenness and the (+, -) character of the 1/2 translation, as ratios to the combined bounds.
    for (int s = 0; s < samples; ++s) {
        const Complex z = sample_point(rng, tau);
        for (int j = 0; j < 2; ++j) {
            const EvalResult f = basis.eval(j, z);
            const EvalResult fm = basis.eval(j, -z);
            const EvalResult ft = basis.eval(j, -z + 0.5);
            const double sign = j == 0 ? 1.0 : -1.0;
            const double allowance = f.error_bound + std::max(fm.error_bound, ft.error_bound);
            out.evenness = std::max(out.evenness, std::abs(fm.value - f.value) / allowance);
            out.t_sign = std::max(out.t_sign, std::abs(ft.value - sign * f.value) / allowance);
        }
    }

    // Squares of the four classical thetas lie in span{f0, f1}; each vanishes to
    // second order at exactly one 2-torsion point.
    const std::array<std::pair<double, double>, 4> chars = {{{0.5, 0.5}, {0.5, 0.0}, {0.0, 0.5}, {0.0, 0.0}}};
    const std::array<Complex, 4> torsion = {0.0, 0.5, 0.5 * tau, 0.5 + 0.5 * tau};
    out.squares_vanish = true;
    for (std::size_t q = 0; q < chars.size(); ++q) {
        ThetaParams p;
        p.a = chars[q].first;
        p.b = chars[q].second;
        p.tau = tau;
        Eigen::MatrixXcd A(samples, 2);
        Eigen::VectorXcd y(samples);
        for (int s = 0; s < samples; ++s) {
            const Complex z = sample_point(rng, tau);
            A(s, 0) = basis.eval(0, z).value;
            A(s, 1) = basis.eval(1, z).value;
            const Complex t = theta_eval(p, z).value;
            y(s) = t * t;
        }
        const Eigen::VectorXcd coef = A.colPivHouseholderQr().solve(y);
        const double fit = (A * coef - y).norm() / y.norm();
        auto combo = [&](Complex z) { return coef(0) * basis.eval(0, z).value + coef(1) * basis.eval(1, z).value; };
        const double scale = coef.norm();
        int zeros = 0;
        bool here = false;
        for (std::size_t e = 0; e < torsion.size(); ++e) {
            const double val = std::abs(combo(torsion[e])) / scale;
            if (val < 10.0 * tol) {
                ++zeros;
                here = e == q;
            }
        }
        const double h = 1e-3;
        const double ratio = std::abs(combo(torsion[q] + 2.0 * h)) / std::abs(combo(torsion[q] + h));
        const bool double_zero = ratio > 3.5 && ratio < 4.5;
        const bool ok = fit < tol && zeros == 1 && here && double_zero;
        out.squares_vanish = out.squares_vanish && ok;
        detail << "theta[" << chars[q].first << ";" << chars[q].second << "]^2: fit " << fit << ", zeros " << zeros
               << ", order ratio " << ratio << "; ";
    }

    std::mt19937_64 fit_rng(seed + 1);
    const FactorMatrix tm = recover_factor_action(basis, kFlipTau, std::max(samples, 8), fit_rng);
    out.tau_offdiagonal = std::abs(tm.normalized(0, 0)) < tol && std::abs(tm.normalized(1, 1)) < tol &&
                          std::abs(std::abs(tm.normalized(0, 1)) - 1.0) < tol && tm.residual < tol;
    detail << "tau action k = " << tm.k << ", residual " << tm.residual;
    out.passed = out.evenness <= 1.0 && out.t_sign <= 1.0 && out.squares_vanish && out.tau_offdiagonal;
    out.detail = detail.str();
    return out;
}

SignVerification verify_sign_table(const std::array<Complex, 3>& taus, int samples, double tol, std::uint64_t seed,
                                   const SignTable& symbolic) {
    SignVerification out;
    out.taus = taus;
    std::mt19937_64 rng(seed);
    const auto& tokens = basic_tokens();
    if (symbolic.signs.size() != 8 || symbolic.column_labels != tokens) {
        throw ValidationError("symbolic table must be 8 rows against i1 ... i123");
    }

    // Per-factor matrices for every factor action that occurs in a basic token.
    std::vector<Level2Basis> bases;
    for (const Complex& t : taus) bases.emplace_back(t);
    std::vector<Eigen::MatrixXcd> ops;
    for (const auto& tok : tokens) {
        const GroupElement g = parse_word(tok);
        Eigen::MatrixXcd op = Eigen::MatrixXcd::Identity(1, 1);
        for (std::size_t f = 0; f < 3; ++f) {
            Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(2, 2);
            if (!g.factor(f).is_identity()) {
                const FactorMatrix fm = recover_factor_action(bases[f], g.factor(f), samples, rng);
                out.max_fit_residual = std::max(out.max_fit_residual, fm.residual);
                m = fm.normalized;
            }
            op = kron(op, m);
        }
        // Gauge: diagonal operators fix f1 f1 f1 (theta_222). The tau-type operator
        // swaps theta_111 and theta_222, so either sign yields the same rows.
        if (std::abs(op(7, 7)) > 0.5 && op(7, 7).real() < 0) op = -op;
        ops.push_back(op);
    }
    for (std::size_t a = 0; a < ops.size(); ++a) {
        out.max_involution = std::max(out.max_involution, max_abs(ops[a] * ops[a] - Eigen::MatrixXcd::Identity(8, 8)));
        for (std::size_t b = a + 1; b < ops.size(); ++b) {
            out.max_commutator = std::max(out.max_commutator, max_abs(ops[a] * ops[b] - ops[b] * ops[a]));
        }
    }

    // Joint eigenvectors from a random real combination.
    std::uniform_real_distribution<double> coeff(0.5, 1.5);
    Eigen::MatrixXcd combo = Eigen::MatrixXcd::Zero(8, 8);
    for (const auto& op : ops) combo += coeff(rng) * op;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(combo);
    if (solver.info() != Eigen::Success) throw Error("eigen-decomposition of the joint action failed");
    struct Vec {
        Eigen::VectorXcd v;
        std::vector<int> signs;
    };
    std::vector<Vec> vecs;
    for (int c = 0; c < 8; ++c) {
        Vec e{solver.eigenvectors().col(c).normalized(), {}};
        for (const auto& op : ops) {
            const Complex lambda = e.v.dot(op * e.v);
            e.signs.push_back(lambda.real() >= 0 ? 1 : -1);
        }
        vecs.push_back(std::move(e));
    }
    std::sort(vecs.begin(), vecs.end(), [](const Vec& a, const Vec& b) { return a.signs > b.signs; });

    // Assign numeric eigenvectors to symbolic rows: fewest disagreements, then a clean theta_222 row.
    const std::size_t row222 = static_cast<std::size_t>(
        std::find(symbolic.row_labels.begin(), symbolic.row_labels.end(), "222") - symbolic.row_labels.begin());
    std::array<int, 8> perm{0, 1, 2, 3, 4, 5, 6, 7}, best{};
    std::pair<int, int> best_score{1 << 30, 1 << 30};
    do {
        int total = 0, on222 = 0;
        for (std::size_t r = 0; r < 8; ++r) {
            for (std::size_t k = 0; k < tokens.size(); ++k) {
                if (vecs[perm[r]].signs[k] != symbolic.signs[r][k]) {
                    ++total;
                    if (r == row222) ++on222;
                }
            }
        }
        const std::pair<int, int> score{total, on222};
        if (score < best_score) {
            best_score = score;
            best = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    out.eigenvectors.resize(8, 8);
    for (int r = 0; r < 8; ++r) out.eigenvectors.col(r) = vecs[best[r]].v;
    const auto lu = out.eigenvectors.partialPivLu();
    out.numeric.row_labels = symbolic.row_labels;
    out.numeric.column_labels = tokens;
    out.numeric.signs.assign(8, std::vector<int>(tokens.size(), 0));
    for (std::size_t k = 0; k < ops.size(); ++k) {
        const Eigen::MatrixXcd D = lu.solve(ops[k] * out.eigenvectors);
        for (int r = 0; r < 8; ++r) {
            for (int c = 0; c < 8; ++c) {
                if (r != c) out.max_offdiagonal = std::max(out.max_offdiagonal, std::abs(D(r, c)));
            }
            const Complex d = D(r, r);
            out.numeric.signs[r][k] = d.real() >= 0 ? 1 : -1;
            const double dev = std::abs(d - static_cast<double>(symbolic.signs[r][k]));
            if (dev > tol) {
                out.mismatches.push_back({r, static_cast<int>(k)});
            } else {
                out.max_sign_deviation = std::max(out.max_sign_deviation, dev);
            }
        }
    }
    if (out.max_fit_residual > tol) out.notes.push_back("least-squares recovery residual above tolerance");
    if (out.max_commutator > tol) out.notes.push_back("generator operators do not commute");
    if (out.max_involution > tol) out.notes.push_back("generator operators are not involutions");
    if (out.max_offdiagonal > tol) out.notes.push_back("operators are not diagonal in the joint eigenbasis");
    out.passed = out.mismatches.empty() && out.max_fit_residual <= tol && out.max_commutator <= tol &&
                 out.max_involution <= tol && out.max_offdiagonal <= tol;
    return out;
}

SignTable numeric_worked_table(const SignVerification& v, const ActionGroup& group) {
    const auto& tokens = basic_tokens();
    SignTable t;
    t.row_labels = v.numeric.row_labels;
    for (const auto& g : group.generators()) t.column_labels.push_back(g.label());
    for (std::size_t r = 0; r < v.numeric.signs.size(); ++r) {
        std::vector<int> row;
        for (const auto& g : group.generators()) {
            int s = 1;
            for (const auto& tok : g.word()) {
                const auto k = static_cast<std::size_t>(std::find(tokens.begin(), tokens.end(), tok) - tokens.begin());
                if (k == tokens.size()) throw ValidationError("generator " + g.label() + " is not a word in i1 ... i123");
                s *= v.numeric.signs[r][k];
            }
            row.push_back(s);
        }
        t.signs.push_back(row);
    }
    return t;
}

long long numeric_fixed_point_count(const GroupElement& g, const std::array<Complex, 3>& taus, int starts) {
    if (g.factor_count() != 3) throw ValidationError("numeric fixed points need three elliptic factors");
    long long total = 1;
    bool positive_dim = false;
    for (std::size_t f = 0; f < 3; ++f) {
        const Complex tau = taus[f];
        const FactorAction& a = g.factor(f);
        const Complex c = half_period(a.shift, tau);
        const double s = static_cast<double>(a.sign);
        auto residual = [&](Complex z) {
            auto [u, v] = lattice_coords(s * z + c - z, tau);
            u -= std::round(u);
            v -= std::round(v);
            return std::abs(u + v * tau);
        };
        if (a.sign == 1) {
            // Translation: the residual is constant, zero only for the identity.
            if (residual(0.0) < 1e-12) {
                positive_dim = true;
            } else {
                total = 0;
            }
            continue;
        }
        std::vector<std::pair<double, double>> found;
        for (int x = 0; x < starts; ++x) {
            for (int y = 0; y < starts; ++y) {
                Complex z = (x + 0.5) / starts + (y + 0.5) / starts * tau;
                for (int it = 0; it < 8 && residual(z) > 1e-13; ++it) {
                    const Complex w = s * z + c - z;
                    auto [u, v] = lattice_coords(w, tau);
                    const Complex nearest = std::round(u) + std::round(v) * tau;
                    z -= (w - nearest) / (s - 1.0);
                }
                if (residual(z) > 1e-10) continue;
                auto [u, v] = lattice_coords(z, tau);
                u -= std::floor(u);
                v -= std::floor(v);
                const bool seen = std::any_of(found.begin(), found.end(), [&](const auto& p) {
                    const double du = std::abs(p.first - u), dv = std::abs(p.second - v);
                    return std::min(du, 1.0 - du) < 1e-8 && std::min(dv, 1.0 - dv) < 1e-8;
                });
                if (!seen) found.emplace_back(u, v);
            }
        }
        total *= static_cast<long long>(found.size());
    }
    if (total == 0) return 0;
    return positive_dim ? -1 : total;
}

std::vector<AvoidanceResult> avoidance_certificate(const Scenario& s, const SignVerification& v) {
    if (s.has_opaque_factor() || s.group.factor_count() != 3) {
        throw ValidationError("avoidance certificate needs three elliptic factors");
    }
    std::vector<AvoidanceResult> out;
    const SignTable worked = numeric_worked_table(v, s.group);
    std::vector<Level2Basis> bases;
    for (const Complex& t : v.taus) bases.emplace_back(t);

    // Fixed points of the elements with isolated fixed points.
    std::vector<std::array<Complex, 3>> points;
    for (std::size_t e = 0; e < s.group.order(); ++e) {
        if (s.status[e] != ElementStatus::isolated_fixed_points) continue;
        const GroupElement& g = s.group.element(e);
        std::array<std::array<Complex, 4>, 3> per{};
        for (std::size_t f = 0; f < 3; ++f) {
            const Complex tau = v.taus[f];
            const Complex c = half_period(g.factor(f).shift, tau);
            per[f] = {0.5 * c, 0.5 * c + 0.5, 0.5 * c + 0.5 * tau, 0.5 * c + 0.5 + 0.5 * tau};
        }
        for (const auto& a : per[0]) {
            for (const auto& b : per[1]) {
                for (const auto& c : per[2]) points.push_back({a, b, c});
            }
        }
    }

    for (const auto& chi0 : all_characters(s.rank())) {
        if (s.sections.count(chi0) == 0) continue;
        AvoidanceResult r;
        r.chi0 = chi0.str();
        std::vector<int> cols;
        for (int row = 0; row < 8; ++row) {
            bool match = true;
            for (int k = 0; k < s.rank(); ++k) match = match && worked.signs[row][k] == chi0.on_generator(k);
            if (match) cols.push_back(row);
        }
        r.eigenspace_dim = static_cast<int>(cols.size());
        r.min_max_value = std::numeric_limits<double>::infinity();
        for (const auto& p : points) {
            std::array<std::array<Complex, 2>, 3> fv{};
            for (int f = 0; f < 3; ++f) {
                for (int j = 0; j < 2; ++j) fv[f][j] = bases[f].eval(j, p[f]).value;
            }
            double scale = 0.0, best = 0.0;
            for (int idx = 0; idx < 8; ++idx) scale = std::max(scale, std::abs(fv[0][idx >> 2] * fv[1][(idx >> 1) & 1] * fv[2][idx & 1]));
            for (int col : cols) {
                Complex val = 0.0;
                for (int idx = 0; idx < 8; ++idx) {
                    val += v.eigenvectors(idx, col) * fv[0][idx >> 2] * fv[1][(idx >> 1) & 1] * fv[2][idx & 1];
                }
                best = std::max(best, std::abs(val) / scale);
            }
            r.min_max_value = std::min(r.min_max_value, best);
        }
        if (points.empty()) r.min_max_value = 1.0;
        r.avoids_all = r.min_max_value > 1e-6;
        out.push_back(r);
    }
    return out;
}

bool NumericReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const NumericCheck& c) { return c.passed; });
}

NumericReport run_numeric(const NumericConfig& config) {
    NumericReport rep;
    rep.config = config;
    std::ostringstream os;

    for (std::size_t f = 0; f < 3; ++f) {
        const BasisCheck b = check_level2_basis(config.taus[f], config.samples, config.seed + f, config.tol);
        std::ostringstream d;
        d << "tau " << format_complex(config.taus[f]) << ": evenness " << b.evenness << ", t-sign " << b.t_sign << "; "
          << b.detail;
        rep.checks.push_back({"level2-basis-E" + std::to_string(f + 1), b.passed, d.str()});
    }

    rep.signs = verify_sign_table(config.taus, config.samples, config.tol, config.seed);
    {
        std::ostringstream d;
        d << rep.signs.mismatches.size() << " mismatches; off-diagonal " << rep.signs.max_offdiagonal << ", commutator "
          << rep.signs.max_commutator << ", involution " << rep.signs.max_involution << ", fit residual "
          << rep.signs.max_fit_residual;
        rep.checks.push_back({"sign-table", rep.signs.passed, d.str()});
    }

    for (const char* fam : {"S2", "S6"}) {
        const Scenario s = builtin(fam);
        const bool same = numeric_worked_table(rep.signs, s.group) == worked_sign_table(s.group);
        rep.checks.push_back({std::string("worked-table-") + fam, same, same ? "matches the symbolic worked table" : "differs"});
    }

    {
        long long bad = 0;
        for (const auto& g : g0_elements()) {
            if (g.is_identity()) continue;
            const FixedLocus L = fixed_locus(g);
            const long long expect = L.empty() ? 0 : (L.finite() ? L.point_count() : -1);
            if (numeric_fixed_point_count(g, config.taus) != expect) ++bad;
        }
        rep.checks.push_back({"fixed-point-counts", bad == 0, std::to_string(63 - bad) + "/63 elements agree"});
    }

    for (const char* fam : {"S1", "S2"}) {
        const Scenario s = builtin(fam);
        const auto res = avoidance_certificate(s, rep.signs);
        bool ok = true;
        std::ostringstream d;
        for (const auto& r : res) {
            ok = ok && r.avoids_all;
            if (d.tellp() > 0) d << "; ";
            d << "chi0 " << r.chi0 << " (dim " << r.eigenspace_dim << "): " << (r.avoids_all ? "avoids" : "meets")
              << " the fixed points, min " << r.min_max_value;
        }
        rep.checks.push_back({std::string("avoidance-") + fam, ok, d.str()});
    }

    {
        ThetaParams p;
        double worst = 0.0;
        for (const Complex& t : config.taus) {
            p.a = 0.5;
            p.b = 0.5;
            p.tau = t;
            const EvalResult r = theta_eval(p, 0.0);
            worst = std::max(worst, std::abs(r.value) / r.error_bound);
        }
        rep.checks.push_back({"odd-theta-vanishes", worst <= 1.0, "max |theta[1/2;1/2](0)| / bound = " + std::to_string(worst)});
    }
    return rep;
}

}  // namespace burniat
