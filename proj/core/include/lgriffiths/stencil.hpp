#pragma once

/**
 * @file stencil.hpp
 * @brief Seven-point stencils on the triangular lattice.
 *
 * Every bivariate relation here has the shape
 *
 *     eigenvalue * F(a, b) = sum_{(da,db) in W} c_{da,db} * F(a+da, b+db)
 *
 * with W = {(0,0), (1,0), (-1,0), (0,1), (0,-1), (1,-1), (-1,1)}. A Stencil
 * stores the seven coefficients at one centre point (the eigenvalue depends
 * on the opposite index pair and is supplied separately); the
 * residual checkers and the sparse operator builders both consume it, so each
 * relation's coefficients are written down exactly once.
 */

#include <array>

#include "lgriffiths/rational.hpp"

namespace lgriffiths {

struct StencilShift {
    int da;
    int db;
};

inline constexpr std::array<StencilShift, 7> kStencilShifts = {{
    {0, 0},
    {1, 0},
    {-1, 0},
    {0, 1},
    {0, -1},
    {1, -1},
    {-1, 1},
}};

struct Stencil {
    std::array<Rational, 7> coefficients;  // aligned with kStencilShifts
};

/// eigenvalue * F(a,b) - sum c * F(a+da, b+db), skipping zero coefficients so
/// out-of-triangle degree references are never evaluated.
template <typename Lookup>
Rational stencil_residual(const Rational& eigenvalue, const Stencil& stencil, int a, int b, Lookup&& lookup) {
    Rational rhs(0);
    for (std::size_t k = 0; k < kStencilShifts.size(); ++k) {
        const Rational& c = stencil.coefficients[k];
        if (c.is_zero()) continue;
        rhs += c * lookup(a + kStencilShifts[k].da, b + kStencilShifts[k].db);
    }
    return eigenvalue * lookup(a, b) - rhs;
}

}  // namespace lgriffiths
