#pragma once

/**
 * @file tratnik.hpp
 * @brief Bivariate Tratnik functions of Krawtchouk type
 *
 *     T_{i,j}(x, y; p1, p2, N) = k_i(x; p1, N-j) k_j(y; p2, N-x),
 *
 * their two recurrence relations (acting on the degrees (i,j)) and two
 * difference relations (acting on the variables (x,y)).
 */

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "lgriffiths/krawtchouk.hpp"
#include "lgriffiths/matrix.hpp"
#include "lgriffiths/stencil.hpp"
#include "lgriffiths/triangle_grid.hpp"

namespace lgriffiths::tratnik {

class TratnikParams {
public:
    /// Throws DegenerateParams for p1 or p2 in {0,1}.
    TratnikParams(Rational p1, Rational p2, int N);

    [[nodiscard]] const Rational& p1() const { return p1_; }
    [[nodiscard]] const Rational& p2() const { return p2_; }
    [[nodiscard]] int N() const { return N_; }

private:
    Rational p1_;
    Rational p2_;
    int N_;
};

enum class TRelationId { RecX, RecY, DiffJ, DiffI };

inline constexpr std::array<TRelationId, 4> kAllTRelations = {TRelationId::RecX, TRelationId::RecY, TRelationId::DiffJ,
                                                              TRelationId::DiffI};

std::string_view to_string(TRelationId rel);
TRelationId parse_trelation(std::string_view name);

/// True for the recurrences, whose stencil moves the degree pair (i,j).
bool acts_on_degrees(TRelationId rel);

/// T_{i,j}(x,y). (i,j) must lie in the triangle; (x,y) outside it gives 0.
Rational t_eval(int i, int j, int x, int y, const TratnikParams& params);

/**
 * Full value table: rows are degree points (i,j), columns variable points
 * (x,y), both in TriangleGrid(N) order. Built from memoized Krawtchouk
 * families; immutable after construction.
 */
class TratnikTable {
public:
    explicit TratnikTable(const TratnikParams& params);

    [[nodiscard]] const TratnikParams& params() const { return params_; }
    [[nodiscard]] const TriangleGrid& grid() const { return grid_; }
    [[nodiscard]] const RationalMatrix& values() const { return values_; }

    /// T_{i,j}(x,y) with zero-extension in (x,y).
    [[nodiscard]] const Rational& at(int i, int j, int x, int y) const;

private:
    TratnikParams params_;
    TriangleGrid grid_;
    RationalMatrix values_;
    Rational zero_{0};
};

/// Stencil coefficients of rel centred at `center`: (i,j) for the
/// recurrences, (x,y) for the difference relations.
Stencil t_stencil(TRelationId rel, const LatticePoint& center, const TratnikParams& params);

/// Left-hand eigenvalue of rel for the opposite index pair:
/// RecX: -x, RecY: -y (opposite = (x,y)); DiffJ: -(j+1), DiffI: -(i+1)
/// (opposite = (i,j)).
Rational t_eigenvalue(TRelationId rel, const LatticePoint& opposite);

/// LHS - RHS of rel at (i,j,x,y). Both pairs must lie in the triangle.
Rational t_relation_residual(TRelationId rel, int i, int j, int x, int y, const TratnikParams& params);
Rational t_relation_residual(TRelationId rel, int i, int j, int x, int y, const TratnikTable& table);

using WeightFunction = std::function<Rational(int x, int y)>;

/// Entry ((i,j),(i',j')) = sum_{(x,y)} weight(x,y) T_{i,j}(x,y) T_{i',j'}(x,y).
RationalMatrix t_gram_diagnostic(const WeightFunction& weight, const TratnikParams& params);

/**
 * Trinomial weight that diagonalizes the Tratnik Gram matrix,
 *
 *     W(x,y) = x! y! (N-x-y)! ((1-p1)/(p1 (1-p2)))^x ((1-p2)/p2)^y.
 *
 * Derived by summing y first with Krawtchouk orthogonality at size N-x; it is
 * cross-checked against diagonalizing_weights() in the tests.
 */
Rational trinomial_weight(int x, int y, const TratnikParams& params);

/// Gram diagonal under trinomial_weight:
/// i! j! (N-i-j)! ((1-p1)/p1)^i ((1-p2)/p2)^j (1-p1)^j / ((1-p1)(1-p2))^N.
Rational trinomial_gram_diagonal(int i, int j, const TratnikParams& params);

/**
 * Solves for weights W over the variable columns of `table` (rows indexed by
 * degree) such that sum_v W(v) F(d,v) F(d',v) = 0 for every d != d'. Returns
 * the solution scaled to W[0] = 1 when the solution space is one-dimensional
 * with W[0] != 0, and nothing otherwise.
 */
std::optional<std::vector<Rational>> diagonalizing_weights(const RationalMatrix& table);

}  // namespace lgriffiths::tratnik
