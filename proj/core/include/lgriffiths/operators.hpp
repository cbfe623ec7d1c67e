#pragma once

/**
 * @file operators.hpp
 * @brief Bispectral relations materialized as sparse stencil matrices.
 *
 * Rows are output points and columns input points, so that the family
 * vectors (a column of the value table for degree-side operators, a row for
 * variable-side operators) are right eigenvectors: L psi = nu psi.
 */

#include <array>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lgriffiths/griffiths.hpp"
#include "lgriffiths/matrix.hpp"
#include "lgriffiths/triangle_grid.hpp"
#include "lgriffiths/tratnik.hpp"

namespace lgriffiths::operators {

enum class OperatorKind {
    TratnikRecX,
    TratnikRecY,
    TratnikDiffJ,
    TratnikDiffI,
    GriffithsRecX,
    GriffithsRecY,
    GriffithsDiffI,
    GriffithsDiffJ,
};

inline constexpr std::array<OperatorKind, 8> kAllOperatorKinds = {
    OperatorKind::TratnikRecX,   OperatorKind::TratnikRecY,   OperatorKind::TratnikDiffJ,   OperatorKind::TratnikDiffI,
    OperatorKind::GriffithsRecX, OperatorKind::GriffithsRecY, OperatorKind::GriffithsDiffI, OperatorKind::GriffithsDiffJ,
};

std::string_view to_string(OperatorKind kind);
OperatorKind parse_operator_kind(std::string_view name);
bool is_tratnik(OperatorKind kind);
bool acts_on_degrees(OperatorKind kind);

struct OperatorEntry {
    LatticePoint row;
    LatticePoint col;
    Rational value;
};

class StencilOperator {
public:
    StencilOperator(OperatorKind kind, TriangleGrid grid, std::vector<std::pair<std::string, Rational>> params);

    [[nodiscard]] OperatorKind kind() const { return kind_; }
    [[nodiscard]] const TriangleGrid& grid() const { return grid_; }
    [[nodiscard]] const std::vector<std::pair<std::string, Rational>>& params() const { return params_; }

    /// Adds value at (row, col); zero values are not stored.
    void add(std::size_t row, std::size_t col, const Rational& value);

    [[nodiscard]] const std::vector<std::pair<std::size_t, Rational>>& row(std::size_t r) const { return rows_[r]; }
    [[nodiscard]] std::size_t nonzeros() const;
    [[nodiscard]] std::size_t max_row_nonzeros() const;

    /// All nonzero entries, sorted by (row index, column index).
    [[nodiscard]] std::vector<OperatorEntry> entries() const;
    [[nodiscard]] RationalMatrix to_dense() const;

    /// this * rhs, where rhs has grid().size() rows.
    [[nodiscard]] RationalMatrix apply(const RationalMatrix& rhs) const;

private:
    OperatorKind kind_;
    TriangleGrid grid_;
    std::vector<std::pair<std::string, Rational>> params_;
    std::vector<std::vector<std::pair<std::size_t, Rational>>> rows_;  // sorted by column
};

/// Tratnik kinds only; throws std::invalid_argument for a Griffiths kind.
StencilOperator build_operator(OperatorKind kind, const tratnik::TratnikParams& params);
/// Griffiths kinds only; throws std::invalid_argument for a Tratnik kind.
StencilOperator build_operator(OperatorKind kind, const griffiths::ParamSet& params);

using EigenvalueFunction = std::function<Rational(const LatticePoint&)>;

/// The eigenvalue each kind carries for its family, as a function of the
/// opposite index pair: Tratnik (-x, -y, -(j+1), -(i+1)), Griffiths
/// (-x, -y, -i, -j).
EigenvalueFunction matched_eigenvalue(OperatorKind kind);

/**
 * max |op u - eigenvalue(opposite) u| over every family vector u drawn from
 * family_table (rows = degree points, columns = variable points). Throws
 * std::invalid_argument on a shape mismatch.
 */
Rational eigen_residual(const StencilOperator& op, const RationalMatrix& family_table,
                        const EigenvalueFunction& eigenvalue);

/// True iff a b = b a exactly. Throws std::invalid_argument for different grids.
bool commutator_is_zero(const StencilOperator& a, const StencilOperator& b);

/// The identity on a grid, tagged with `kind` for bookkeeping.
StencilOperator identity_operator(OperatorKind kind, const TriangleGrid& grid);

/// Dump format: {"kind", "N", "params": {name: "num/den"}, "entries": [[[a,b],[c,d],"num/den"], ...]}.
std::string to_json(const StencilOperator& op, int indent = -1);

}  // namespace lgriffiths::operators
