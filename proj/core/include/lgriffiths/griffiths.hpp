#pragma once

/**
 * @file griffiths.hpp
 * @brief lambda-Griffiths functions
 *
 *     G^lambda_{i,j}(x,y) = sum_{a=0}^{N-j} lambda^a k_i(a; p1, N-j) k_j(y; p2, N-a) k_a(x; p3, N-y)
 *
 * with their two Tratnik rewrites, duality, recurrence and difference
 * relations, and the biorthogonality pairing G^lambda against G^{mu/lambda}.
 */

#include <array>
#include <functional>
#include <optional>
#include <string_view>
#include <utility>

#include "lgriffiths/krawtchouk.hpp"
#include "lgriffiths/matrix.hpp"
#include "lgriffiths/stencil.hpp"
#include "lgriffiths/triangle_grid.hpp"
#include "lgriffiths/tratnik.hpp"

namespace lgriffiths::griffiths {

/// (p1, p2, p3, lambda, N) with every p outside {0,1} and lambda != 0.
class ParamSet {
public:
    /// Throws DegenerateParams on p in {0,1} or lambda = 0.
    ParamSet(Rational p1, Rational p2, Rational p3, Rational lambda, int N);

    [[nodiscard]] const Rational& p1() const { return p1_; }
    [[nodiscard]] const Rational& p2() const { return p2_; }
    [[nodiscard]] const Rational& p3() const { return p3_; }
    [[nodiscard]] const Rational& lambda() const { return lambda_; }
    [[nodiscard]] int N() const { return N_; }

    [[nodiscard]] ParamSet with_lambda(Rational lambda) const;
    /// Same family with lambda replaced by mu / lambda.
    [[nodiscard]] ParamSet partner() const;

private:
    Rational p1_;
    Rational p2_;
    Rational p3_;
    Rational lambda_;
    int N_;
};

enum class EvalMethod { DirectSum, ViaTratnikXY, ViaTratnikYX };

inline constexpr std::array<EvalMethod, 3> kAllEvalMethods = {EvalMethod::DirectSum, EvalMethod::ViaTratnikXY,
                                                              EvalMethod::ViaTratnikYX};

std::string_view to_string(EvalMethod method);

enum class GRelationId { RecX, RecY, DiffI, DiffJ };

inline constexpr std::array<GRelationId, 4> kAllGRelations = {GRelationId::RecX, GRelationId::RecY, GRelationId::DiffI,
                                                              GRelationId::DiffJ};

std::string_view to_string(GRelationId rel);
GRelationId parse_grelation(std::string_view name);
bool acts_on_degrees(GRelationId rel);

/// G^lambda_{i,j}(x,y). (i,j) must lie in the triangle; (x,y) outside it
/// gives 0. All three methods return the same exact value.
Rational g_eval(int i, int j, int x, int y, const ParamSet& params, EvalMethod method = EvalMethod::DirectSum);

/// The a = 0 summand alone, k_j(y; p2, N) (p3/(1-p3))^x C(N-y, x): the only
/// part of the sum that survives as lambda -> 0. lambda is not read.
Rational g_lambda_zero_term(int i, int j, int x, int y, const ParamSet& params);

/// Normalized function used by the duality relation:
/// 1/(i! j! (N-i-j)!) (p1/(1-p1))^i (p2/(1-p2))^j G^{lambda (1-p1)/p1}_{i,j}(x,y).
Rational g_tilde_eval(int i, int j, int x, int y, const ParamSet& params);

/// g_tilde(i,j,x,y; p1,p2,p3) - g_tilde(x,y,i,j; p3,p2,p1), same lambda; zero.
Rational g_duality_residual(int i, int j, int x, int y, const ParamSet& params);

/**
 * Value table over degree points (rows) and variable points (columns), built
 * by the direct sum over memoized Krawtchouk families at every intermediate
 * size. Immutable after construction.
 */
class GriffithsTable {
public:
    explicit GriffithsTable(const ParamSet& params);

    [[nodiscard]] const ParamSet& params() const { return params_; }
    [[nodiscard]] const TriangleGrid& grid() const { return grid_; }
    [[nodiscard]] const RationalMatrix& values() const { return values_; }
    [[nodiscard]] const Rational& at(int i, int j, int x, int y) const;

private:
    ParamSet params_;
    TriangleGrid grid_;
    RationalMatrix values_;
    Rational zero_{0};
};

/// Stencil coefficients of rel centred at (i,j) (recurrences) or (x,y)
/// (difference relations), transcribed without algebraic simplification.
Stencil g_stencil(GRelationId rel, const LatticePoint& center, const ParamSet& params);

/// RecX: -x, RecY: -y, DiffI: -i, DiffJ: -j, read from the opposite pair.
Rational g_eigenvalue(GRelationId rel, const LatticePoint& opposite);

Rational g_relation_residual(GRelationId rel, int i, int j, int x, int y, const ParamSet& params);
Rational g_relation_residual(GRelationId rel, int i, int j, int x, int y, const GriffithsTable& table);

/// mu = (1-p1) p3 / (p1 (1-p2) (1-p3)). Throws DegenerateParams when p1 = 0,
/// p2 = 1 or p3 = 1.
Rational mu(const Rational& p1, const Rational& p2, const Rational& p3);

/// Omega_{x,y}(pa, pb) = x! y! (N-x-y)! ((1-pa)/pa)^y ((1-pb)/pb)^x (1-pb)^y.
/// The first slot powers y and the second powers x.
Rational omega(int x, int y, const Rational& pa, const Rational& pb, int N);

/**
 * Weight of the biorthogonality sum over (x,y):
 *
 *     Omega_{x,y}(p2, p3) / (1-p3)^{2y}
 *       = x! y! (N-x-y)! ((1-p3)/p3)^x ((1-p2)/(p2 (1-p3)))^y.
 *
 * Summing x first with Krawtchouk orthogonality at size N-y leaves a factor
 * (1-p3)^{y-N}, which the weight must cancel; Omega_{x,y}(p2,p3) on its own
 * carries (1-p3)^{+y} and does not diagonalize the pairing. Independent of
 * lambda.
 */
Rational biorth_weight(int x, int y, const ParamSet& params);

/// Omega_{i,j}(p2, p1) / ((1-p1)(1-p2)(1-p3))^N.
Rational biorth_diagonal(int i, int j, const ParamSet& params);

using WeightFunction = std::function<Rational(int x, int y)>;

/// Entry ((i,j),(i',j')) = sum_{(x,y)} weight(x,y) G^lambda_{i,j}(x,y) G^{mu/lambda}_{i',j'}(x,y).
RationalMatrix g_pairing_gram(const ParamSet& params, const WeightFunction& weight);

/// g_pairing_gram with biorth_weight; exactly diagonal with biorth_diagonal.
RationalMatrix g_biorth_gram(const ParamSet& params);

/// (+sqrt(mu), -sqrt(mu)) when mu is a rational square.
std::optional<std::pair<Rational, Rational>> orthogonal_lambdas(const Rational& p1, const Rational& p2,
                                                                const Rational& p3);

/// p3 such that mu(p1, p2, p3) = s^2, i.e. the solution of
/// (1-p1) p3 = s^2 p1 (1-p2) (1-p3).
Rational p3_for_square_mu(const Rational& p1, const Rational& p2, const Rational& s);

}  // namespace lgriffiths::griffiths
