#pragma once

/**
 * @file krawtchouk.hpp
 * @brief Univariate Krawtchouk functions in the weight-dressed normalization
 *
 *     k_i(x; p, N) = (p/(1-p))^x C(N,x) 2F1(-i, -x; -N; 1/p),
 *
 * their weight, orthogonality, duality and the fourteen three-term/contiguity
 * identities that the bivariate constructions are built from.
 *
 * Boundary convention: k_i(x; p, N) = 0 for x < 0 or x > N, inherited from the
 * zero-extended binomial prefactor. This closes every difference stencil at
 * the edge of the support without special cases.
 */

#include <array>
#include <span>
#include <string_view>
#include <vector>

#include "lgriffiths/combinatorics.hpp"
#include "lgriffiths/errors.hpp"
#include "lgriffiths/hypergeometric.hpp"
#include "lgriffiths/matrix.hpp"
#include "lgriffiths/rational.hpp"

namespace lgriffiths::krawtchouk {

/// Parameter pair (p, N) with p not in {0, 1} and N >= 0.
class KrawtchoukParams {
public:
    /// Throws DegenerateParams for p in {0,1} and std::invalid_argument for N < 0.
    KrawtchoukParams(Rational p, int N);

    [[nodiscard]] const Rational& p() const { return p_; }
    [[nodiscard]] int N() const { return N_; }

private:
    Rational p_;
    int N_;
};

/// Throws DegenerateParams when p is 0 or 1.
void require_valid_p(const Rational& p, std::string_view name);

/// Shared evaluation kernel for any field type (Rational, double). No
/// parameter validation beyond the degree range.
template <typename T>
T value_as(long i, long x, const T& p, long N) {
    if (x < 0 || x > N) return T(0);
    if (i < 0 || i > N) throw OutOfDomain("krawtchouk degree outside 0..N");
    T ratio = p / (T(1) - p);
    T prefactor(1);
    for (long t = 0; t < x; ++t) prefactor *= ratio;
    // C(N,x) built multiplicatively so the kernel stays generic in T.
    T binom(1);
    for (long t = 0; t < x; ++t) {
        binom *= T(N - t);
        binom /= T(t + 1);
    }
    return prefactor * binom * hyp2f1_terminating_as<T>(i, x, N, T(1) / p);
}

/// k_i(x; p, N). Requires 0 <= i <= N; zero for x outside 0..N.
Rational k_eval(int i, int x, const KrawtchoukParams& params);

/// w(x; p, N) = ((1-p)/p)^x x! (N-x)!, for 0 <= x <= N.
Rational k_weight(int x, const KrawtchoukParams& params);

/// Entry (i,l) = sum_x w(x) k_i(x) k_l(x), an (N+1) x (N+1) matrix.
RationalMatrix k_gram(const KrawtchoukParams& params);

/// Closed-form Gram diagonal w(i; p, N) / (1-p)^N.
Rational k_gram_diagonal(int i, const KrawtchoukParams& params);

/// w(x) k_i(x) - w(i) k_x(i); identically zero.
Rational k_duality_residual(int i, int x, const KrawtchoukParams& params);

/**
 * Memoized k tables for one p at every size 0..max_size.
 *
 * All values are computed in the constructor, so a constructed family is
 * immutable and safe to share between threads.
 */
class KrawtchoukFamily {
public:
    KrawtchoukFamily(Rational p, int max_size);

    [[nodiscard]] const Rational& p() const { return p_; }
    [[nodiscard]] int max_size() const { return max_size_; }

    /// k_i(x; p, size). Zero outside 0 <= x <= size; OutOfDomain for a degree
    /// outside 0..size or a size outside 0..max_size.
    [[nodiscard]] const Rational& value(int i, int x, int size) const;

private:
    Rational p_;
    int max_size_;
    std::vector<std::vector<Rational>> tables_;  // tables_[size][i * (size+1) + x]
    Rational zero_{0};
};

enum class RelationId {
    Difference,
    Recurrence,
    ContigDiff1,
    ContigDiff2,
    ContigRecu1,
    ContigRecu2,
    Forward,
    Backward,
    DualForward,
    DualBackward,
    ShiftedDiff1,
    ShiftedDiff2,
    ShiftedRecu1,
    ShiftedRecu2,
};

inline constexpr std::array<RelationId, 14> kAllRelations = {
    RelationId::Difference,   RelationId::Recurrence,   RelationId::ContigDiff1,  RelationId::ContigDiff2,
    RelationId::ContigRecu1,  RelationId::ContigRecu2,  RelationId::Forward,      RelationId::Backward,
    RelationId::DualForward,  RelationId::DualBackward, RelationId::ShiftedDiff1, RelationId::ShiftedDiff2,
    RelationId::ShiftedRecu1, RelationId::ShiftedRecu2,
};

/// Identifier used in reports and on the command line, e.g. "ContigDiff1".
std::string_view to_string(RelationId rel);
/// Human-readable heading, e.g. "Contiguity difference relation (I)".
std::string_view heading(RelationId rel);
/// Inverse of to_string. Throws std::invalid_argument for unknown names.
RelationId parse_relation(std::string_view name);

/// Inclusive (degree, argument) rectangle on which a relation is checked.
struct AdmissibleRect {
    int degree_min = 0;
    int degree_max = -1;
    int arg_min = 0;
    int arg_max = -1;

    [[nodiscard]] bool empty() const { return degree_min > degree_max || arg_min > arg_max; }
    [[nodiscard]] bool contains(int n, int x) const {
        return n >= degree_min && n <= degree_max && x >= arg_min && x <= arg_max;
    }
};

/// Relations that reference size N-1 with degree n need n <= N-1; relations
/// that reference degree n-1 need n >= 1. Everything else is the full square.
AdmissibleRect relation_domain(RelationId rel, int N);

/// One summand c * k_degree(arg; p, size).
struct RelationTerm {
    Rational coefficient;
    int degree;
    int arg;
    int size;
};

/// Both sides of a relation at (n, x), transcribed term by term.
struct RelationInstance {
    std::vector<RelationTerm> lhs;
    std::vector<RelationTerm> rhs;
};

/// Literal transcription of the relation at degree n and argument x.
RelationInstance relation_terms(RelationId rel, int n, int x, const KrawtchoukParams& params);

/// LHS - RHS evaluated exactly. Throws OutOfDomain outside relation_domain.
Rational k_relation_residual(RelationId rel, int i, int x, const KrawtchoukParams& params);

/// Same, reading values from a precomputed family (same p, max_size >= N+1).
Rational k_relation_residual(RelationId rel, int i, int x, const KrawtchoukParams& params,
                             const KrawtchoukFamily& family);

}  // namespace lgriffiths::krawtchouk
