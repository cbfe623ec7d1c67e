#pragma once

/**
 * @file oscillator.hpp
 * @brief Degree-N Fock representation of three-mode quadratic generators
 * sum B_ik a_i^+ a_k, and a fit-and-verify comparison of the product
 *
 *     U = U(R_xz(phi)) U(R_yz(theta)) U_varphi U(R_xz(psi))
 *
 * against lambda-Griffiths values with lambda = e^{i varphi} sqrt(mu).
 */

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "lgriffiths/matrix.hpp"
#include "lgriffiths/rational.hpp"

namespace lgriffiths::oscillator {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using GeneratorMatrix = Eigen::Matrix3cd;

struct FockState {
    int n1 = 0;
    int n2 = 0;
    int n3 = 0;

    [[nodiscard]] int total() const { return n1 + n2 + n3; }
    friend bool operator==(const FockState&, const FockState&) = default;
};

/// States ordered like TriangleGrid(N) under (n1, n2) -> grid point.
std::vector<FockState> fock_basis(int N);

/// Position of s in fock_basis(s.total()). Throws OutOfDomain on negative occupations.
std::size_t fock_index(const FockState& s);

/// Matrix of sum B_ik a_i^+ a_k on the degree-N sector, in the orthonormal
/// basis (a_k lowers with sqrt(n_k), a_i^+ raises with sqrt(n_i + 1)).
ComplexMatrix rep_generator(const GeneratorMatrix& B, int N);

/**
 * The same operator on the unnormalized monomial basis x1^n1 x2^n2 x3^n3,
 * where a_i^+ a_k acts as x_i d/dx_k. Entries are rational for rational B,
 * and B -> rep is an exact Lie algebra homomorphism. Related to
 * rep_generator by conjugation with diag(sqrt(n1! n2! n3!)).
 */
RationalMatrix rep_generator_exact(const std::array<std::array<Rational, 3>, 3>& B, int N);

/// Matrix exponential. Throws std::invalid_argument on non-square or
/// non-finite input.
ComplexMatrix rep_exp(const ComplexMatrix& M);

/// B_13 = alpha = -B_31.
GeneratorMatrix xz_generator(double alpha);
/// B_23 = alpha = -B_32.
GeneratorMatrix yz_generator(double alpha);
/// diag(i varphi, 0, 0); the logarithm of U_varphi = exp(i varphi a_1^+ a_1).
GeneratorMatrix twist_generator(Complex varphi);

/// The product U on fock_basis(N).
ComplexMatrix euler_product(double phi, double theta, double psi, Complex varphi, int N);

/// max |U^+ U - I|.
double unitarity_defect(const ComplexMatrix& U);

/// Floating-point G^lambda_{i,j}(x,y) by the direct sum; 0 off the triangle.
Complex griffiths_value(int i, int j, int x, int y, double p1, double p2, double p3, Complex lambda, int N);

/**
 * Model of the product entry at row state m and column state n. Rows carry
 * the variables (x, y) = (m1, m2), columns the degrees (i, j) = (n3, n2):
 *
 *     (-1)^{n1+n2} rho G^lambda_{i,j}(x,y),
 *     rho = (1-p1)^{(N-j)/2} (1-p2)^{N/2} (1-p3)^{(N-y)/2}
 *           sqrt( w(x; p3, N-y) y! r^y / (w(i; p1, N-j) j! r^j) ),
 *
 * with w(x; p, n) = ((1-p)/p)^x x! (n-x)! and r = (1-p2)/p2. The overall
 * scale is left to the fit.
 */
Complex model_entry(const FockState& row, const FockState& col, double p1, double p2, double p3, Complex lambda);

struct FitReport {
    double phi = 0;
    double theta = 0;
    double psi = 0;
    Complex varphi;
    int N = 0;
    double p1 = 0;
    double p2 = 0;
    double p3 = 0;
    double mu = 0;
    Complex lambda;
    Complex normalization;
    double max_mismatch = 0;
    double unitarity_defect = 0;
    /// lambda = +sqrt(mu) within 1e-12 (the orthogonal case, varphi = 0).
    bool orthogonal_case = false;
    std::size_t fitted_entries = 0;
    std::size_t fitted_parameters = 0;
    std::size_t verified_entries = 0;
};

/**
 * Fits (p1, p2, p3) and a complex normalization on the entries whose row and
 * column labels lie in {(0,0), (1,0), (0,1)}, then measures the mismatch on
 * every entry of the product. Throws FitFailure when the matching system is
 * singular or the fitted parameters collapse onto 0 or 1.
 *
 * The model's sign and square-root conventions hold for angles in (0, pi/2);
 * elsewhere the product differs from it by sign patterns the scalar
 * normalization cannot absorb, and the fit fails or reports a large mismatch.
 */
FitReport fit_and_verify(double phi, double theta, double psi, Complex varphi, int N);

}  // namespace lgriffiths::oscillator
