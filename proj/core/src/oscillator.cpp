#include "lgriffiths/oscillator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>
#include <unsupported/Eigen/NonLinearOptimization>
#include <unsupported/Eigen/NumericalDiff>

#include "lgriffiths/combinatorics.hpp"
#include "lgriffiths/errors.hpp"
#include "lgriffiths/krawtchouk.hpp"
#include "lgriffiths/triangle_grid.hpp"

namespace lgriffiths::oscillator {

std::vector<FockState> fock_basis(int N) {
    if (N < 0) throw std::invalid_argument("fock_basis: N must be non-negative");
    std::vector<FockState> out;
    out.reserve(TriangleGrid::count(N));
    for (int a = 0; a <= N; ++a) {
        for (int b = 0; b <= N - a; ++b) out.push_back({a, b, N - a - b});
    }
    return out;
}

std::size_t fock_index(const FockState& s) {
    if (s.n1 < 0 || s.n2 < 0 || s.n3 < 0) throw OutOfDomain("Fock state with negative occupation");
    return TriangleGrid(s.total()).index_of({s.n1, s.n2});
}

namespace {

int& occupation(FockState& s, int mode) { return mode == 0 ? s.n1 : (mode == 1 ? s.n2 : s.n3); }

}  // namespace

ComplexMatrix rep_generator(const GeneratorMatrix& B, int N) {
    const auto basis = fock_basis(N);
    const auto dim = static_cast<Eigen::Index>(basis.size());
    ComplexMatrix M = ComplexMatrix::Zero(dim, dim);
    for (Eigen::Index c = 0; c < dim; ++c) {
        for (int i = 0; i < 3; ++i) {
            for (int k = 0; k < 3; ++k) {
                if (B(i, k) == Complex(0)) continue;
                FockState m = basis[static_cast<std::size_t>(c)];
                if (occupation(m, k) == 0) continue;
                double factor = std::sqrt(static_cast<double>(occupation(m, k)));
                --occupation(m, k);
                factor *= std::sqrt(static_cast<double>(occupation(m, i) + 1));
                ++occupation(m, i);
                M(static_cast<Eigen::Index>(fock_index(m)), c) += B(i, k) * factor;
            }
        }
    }
    return M;
}

RationalMatrix rep_generator_exact(const std::array<std::array<Rational, 3>, 3>& B, int N) {
    const auto basis = fock_basis(N);
    RationalMatrix M(basis.size(), basis.size());
    for (std::size_t c = 0; c < basis.size(); ++c) {
        for (int i = 0; i < 3; ++i) {
            for (int k = 0; k < 3; ++k) {
                const Rational& b = B[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
                if (b.is_zero()) continue;
                FockState m = basis[c];
                const int nk = occupation(m, k);
                if (nk == 0) continue;
                --occupation(m, k);
                ++occupation(m, i);
                M(fock_index(m), c) += b * nk;
            }
        }
    }
    return M;
}

ComplexMatrix rep_exp(const ComplexMatrix& M) {
    if (M.rows() != M.cols()) throw std::invalid_argument("rep_exp: matrix is not square");
    for (Eigen::Index r = 0; r < M.rows(); ++r) {
        for (Eigen::Index c = 0; c < M.cols(); ++c) {
            if (!std::isfinite(M(r, c).real()) || !std::isfinite(M(r, c).imag())) {
                throw std::invalid_argument("rep_exp: non-finite entry");
            }
        }
    }
    return M.exp();
}

GeneratorMatrix xz_generator(double alpha) {
    GeneratorMatrix B = GeneratorMatrix::Zero();
    B(0, 2) = alpha;
    B(2, 0) = -alpha;
    return B;
}

GeneratorMatrix yz_generator(double alpha) {
    GeneratorMatrix B = GeneratorMatrix::Zero();
    B(1, 2) = alpha;
    B(2, 1) = -alpha;
    return B;
}

GeneratorMatrix twist_generator(Complex varphi) {
    GeneratorMatrix B = GeneratorMatrix::Zero();
    B(0, 0) = Complex(0, 1) * varphi;
    return B;
}

ComplexMatrix euler_product(double phi, double theta, double psi, Complex varphi, int N) {
    return rep_exp(rep_generator(xz_generator(phi), N)) * rep_exp(rep_generator(yz_generator(theta), N)) *
           rep_exp(rep_generator(twist_generator(varphi), N)) * rep_exp(rep_generator(xz_generator(psi), N));
}

double unitarity_defect(const ComplexMatrix& U) {
    const ComplexMatrix D = U.adjoint() * U - ComplexMatrix::Identity(U.rows(), U.cols());
    return D.cwiseAbs().maxCoeff();
}

Complex griffiths_value(int i, int j, int x, int y, double p1, double p2, double p3, Complex lambda, int N) {
    if (x < 0 || y < 0 || x + y > N) return Complex(0);
    using krawtchouk::value_as;
    Complex sum(0);
    Complex power(1);
    for (int a = 0; a <= N - j && a <= N - y; ++a, power *= lambda) {
        const double term = value_as<double>(i, a, p1, N - j) * value_as<double>(j, y, p2, N - a) *
                            value_as<double>(a, x, p3, N - y);
        sum += power * term;
    }
    return sum;
}

namespace {

double fact(int n) { return std::tgamma(n + 1.0); }

double kw(int x, double p, int n) { return std::pow((1 - p) / p, x) * fact(x) * fact(n - x); }

struct Labels {
    int x, y;
};

constexpr std::array<Labels, 3> kFitLabels = {{{0, 0}, {1, 0}, {0, 1}}};

FockState row_state(int x, int y, int N) { return {x, y, N - x - y}; }
FockState col_state(int i, int j, int N) { return {N - i - j, j, i}; }

double sigmoid(double t) { return 1.0 / (1.0 + std::exp(-t)); }

Complex lambda_for(double p1, double p2, double p3, Complex varphi) {
    const double mu = (1 - p1) * p3 / (p1 * (1 - p2) * (1 - p3));
    return std::exp(Complex(0, 1) * varphi) * std::sqrt(mu);
}

struct FitProblem {
    std::vector<FockState> rows;
    std::vector<FockState> cols;
    std::vector<Complex> targets;
    Complex varphi;

    std::vector<Complex> model(double p1, double p2, double p3) const {
        const Complex lambda = lambda_for(p1, p2, p3, varphi);
        std::vector<Complex> out(targets.size());
        for (std::size_t k = 0; k < targets.size(); ++k) out[k] = model_entry(rows[k], cols[k], p1, p2, p3, lambda);
        return out;
    }

    /// Least-squares scale c minimizing |T - c M|; nullopt when M vanishes.
    static std::optional<Complex> scale(const std::vector<Complex>& M, const std::vector<Complex>& T) {
        Complex num(0);
        double den = 0;
        for (std::size_t k = 0; k < M.size(); ++k) {
            num += std::conj(M[k]) * T[k];
            den += std::norm(M[k]);
        }
        if (!(den > 1e-300)) return std::nullopt;
        return num / den;
    }
};

// Functor in the shape Eigen's NumericalDiff / LevenbergMarquardt expect.
struct FitFunctor {
    using Scalar = double;
    using InputType = Eigen::VectorXd;
    using ValueType = Eigen::VectorXd;
    using JacobianType = Eigen::MatrixXd;
    enum { InputsAtCompileTime = Eigen::Dynamic, ValuesAtCompileTime = Eigen::Dynamic };

    const FitProblem* problem = nullptr;

    [[nodiscard]] int inputs() const { return 3; }
    [[nodiscard]] int values() const { return static_cast<int>(2 * problem->targets.size()); }

    int operator()(const Eigen::VectorXd& t, Eigen::VectorXd& residual) const {
        const auto M = problem->model(sigmoid(t[0]), sigmoid(t[1]), sigmoid(t[2]));
        const auto c = FitProblem::scale(M, problem->targets);
        for (std::size_t k = 0; k < M.size(); ++k) {
            const Complex d = c ? problem->targets[k] - *c * M[k] : problem->targets[k];
            residual[static_cast<Eigen::Index>(2 * k)] = d.real();
            residual[static_cast<Eigen::Index>(2 * k + 1)] = d.imag();
        }
        return 0;
    }
};

}  // namespace

Complex model_entry(const FockState& row, const FockState& col, double p1, double p2, double p3, Complex lambda) {
    const int N = row.total();
    if (col.total() != N) throw std::invalid_argument("model_entry: states of different degree");
    const int x = row.n1;
    const int y = row.n2;
    const int i = col.n3;
    const int j = col.n2;
    const double r = (1 - p2) / p2;
    const double rho = std::pow(1 - p1, (N - j) / 2.0) * std::pow(1 - p2, N / 2.0) * std::pow(1 - p3, (N - y) / 2.0) *
                       std::sqrt(kw(x, p3, N - y) * fact(y) * std::pow(r, y) / (kw(i, p1, N - j) * fact(j) * std::pow(r, j)));
    const double sign = ((col.n1 + col.n2) % 2 == 0) ? 1.0 : -1.0;
    return sign * rho * griffiths_value(i, j, x, y, p1, p2, p3, lambda, N);
}

FitReport fit_and_verify(double phi, double theta, double psi, Complex varphi, int N) {
    if (N < 1) throw std::invalid_argument("fit_and_verify: N must be at least 1");
    for (double v : {phi, theta, psi, varphi.real(), varphi.imag()}) {
        if (!std::isfinite(v)) throw std::invalid_argument("fit_and_verify: non-finite angle");
    }

    const ComplexMatrix U = euler_product(phi, theta, psi, varphi, N);

    FitProblem problem;
    problem.varphi = varphi;
    for (const auto& rl : kFitLabels) {
        for (const auto& cl : kFitLabels) {
            const FockState m = row_state(rl.x, rl.y, N);
            const FockState n = col_state(cl.x, cl.y, N);
            problem.rows.push_back(m);
            problem.cols.push_back(n);
            problem.targets.push_back(U(static_cast<Eigen::Index>(fock_index(m)), static_cast<Eigen::Index>(fock_index(n))));
        }
    }

    FitFunctor functor;
    functor.problem = &problem;
    Eigen::NumericalDiff<FitFunctor> numdiff(functor);

    constexpr std::array<double, 4> kStarts = {-2.0, -0.7, 0.7, 2.0};
    Eigen::VectorXd best;
    double best_cost = std::numeric_limits<double>::infinity();
    Eigen::VectorXd residual(functor.values());
    for (double s1 : kStarts) {
        for (double s2 : kStarts) {
            for (double s3 : kStarts) {
                Eigen::VectorXd t(3);
                t << s1, s2, s3;
                Eigen::LevenbergMarquardt<Eigen::NumericalDiff<FitFunctor>> lm(numdiff);
                lm.parameters.xtol = 1e-15;
                lm.parameters.ftol = 1e-15;
                lm.parameters.maxfev = 2000;
                lm.minimize(t);
                if (!t.allFinite()) continue;
                functor(t, residual);
                const double cost = residual.squaredNorm();
                if (cost < best_cost) {
                    best_cost = cost;
                    best = t;
                }
            }
        }
    }
    if (best.size() == 0) throw FitFailure("oscillator fit: no start converged");

    FitReport report;
    report.phi = phi;
    report.theta = theta;
    report.psi = psi;
    report.varphi = varphi;
    report.N = N;
    report.p1 = sigmoid(best[0]);
    report.p2 = sigmoid(best[1]);
    report.p3 = sigmoid(best[2]);
    for (double p : {report.p1, report.p2, report.p3}) {
        if (p < 1e-9 || p > 1 - 1e-9) throw FitFailure("oscillator fit: parameters collapse to 0 or 1 (degenerate angles)");
    }
    report.mu = (1 - report.p1) * report.p3 / (report.p1 * (1 - report.p2) * (1 - report.p3));
    report.lambda = lambda_for(report.p1, report.p2, report.p3, varphi);

    const auto matched = problem.model(report.p1, report.p2, report.p3);
    const auto c = FitProblem::scale(matched, problem.targets);
    if (!c) throw FitFailure("oscillator fit: low-index matching system is singular");
    report.normalization = *c;

    const auto basis = fock_basis(N);
    double mismatch = 0;
    for (std::size_t r = 0; r < basis.size(); ++r) {
        for (std::size_t k = 0; k < basis.size(); ++k) {
            const Complex predicted = *c * model_entry(basis[r], basis[k], report.p1, report.p2, report.p3, report.lambda);
            mismatch = std::max(mismatch, std::abs(U(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(k)) - predicted));
        }
    }
    report.max_mismatch = mismatch;
    report.unitarity_defect = unitarity_defect(U);
    const double root_mu = std::sqrt(report.mu);
    report.orthogonal_case = std::abs(report.lambda - root_mu) <= 1e-12 * std::max(1.0, root_mu);
    report.fitted_entries = problem.targets.size();
    report.fitted_parameters = 4;
    report.verified_entries = basis.size() * basis.size();
    return report;
}

}  // namespace lgriffiths::oscillator
