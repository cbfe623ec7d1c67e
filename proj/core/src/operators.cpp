#include "lgriffiths/operators.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace lgriffiths::operators {

std::string_view to_string(OperatorKind kind) {
    switch (kind) {
        case OperatorKind::TratnikRecX: return "TratnikRecX";
        case OperatorKind::TratnikRecY: return "TratnikRecY";
        case OperatorKind::TratnikDiffJ: return "TratnikDiffJ";
        case OperatorKind::TratnikDiffI: return "TratnikDiffI";
        case OperatorKind::GriffithsRecX: return "GriffithsRecX";
        case OperatorKind::GriffithsRecY: return "GriffithsRecY";
        case OperatorKind::GriffithsDiffI: return "GriffithsDiffI";
        case OperatorKind::GriffithsDiffJ: return "GriffithsDiffJ";
    }
    return "?";
}

OperatorKind parse_operator_kind(std::string_view name) {
    for (auto kind : kAllOperatorKinds) {
        if (to_string(kind) == name) return kind;
    }
    throw std::invalid_argument("unknown operator kind '" + std::string(name) + "'");
}

bool is_tratnik(OperatorKind kind) {
    switch (kind) {
        case OperatorKind::TratnikRecX:
        case OperatorKind::TratnikRecY:
        case OperatorKind::TratnikDiffJ:
        case OperatorKind::TratnikDiffI:
            return true;
        default:
            return false;
    }
}

bool acts_on_degrees(OperatorKind kind) {
    switch (kind) {
        case OperatorKind::TratnikRecX:
        case OperatorKind::TratnikRecY:
        case OperatorKind::GriffithsRecX:
        case OperatorKind::GriffithsRecY:
            return true;
        default:
            return false;
    }
}

StencilOperator::StencilOperator(OperatorKind kind, TriangleGrid grid,
                                 std::vector<std::pair<std::string, Rational>> params)
    : kind_(kind), grid_(std::move(grid)), params_(std::move(params)), rows_(grid_.size()) {}

void StencilOperator::add(std::size_t row, std::size_t col, const Rational& value) {
    if (value.is_zero()) return;
    auto& r = rows_.at(row);
    auto it = std::lower_bound(r.begin(), r.end(), col, [](const auto& e, std::size_t c) { return e.first < c; });
    if (it != r.end() && it->first == col) {
        it->second += value;
        if (it->second.is_zero()) r.erase(it);
    } else {
        r.insert(it, {col, value});
    }
}

std::size_t StencilOperator::nonzeros() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.size();
    return n;
}

std::size_t StencilOperator::max_row_nonzeros() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n = std::max(n, r.size());
    return n;
}

std::vector<OperatorEntry> StencilOperator::entries() const {
    std::vector<OperatorEntry> out;
    out.reserve(nonzeros());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        for (const auto& [c, v] : rows_[r]) out.push_back({grid_[r], grid_[c], v});
    }
    return out;
}

RationalMatrix StencilOperator::to_dense() const {
    RationalMatrix out(grid_.size(), grid_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        for (const auto& [c, v] : rows_[r]) out(r, c) = v;
    }
    return out;
}

RationalMatrix StencilOperator::apply(const RationalMatrix& rhs) const {
    if (rhs.rows() != grid_.size()) throw std::invalid_argument("StencilOperator::apply: shape mismatch");
    RationalMatrix out(grid_.size(), rhs.cols());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        for (const auto& [c, v] : rows_[r]) {
            for (std::size_t k = 0; k < rhs.cols(); ++k) {
                const Rational& b = rhs(c, k);
                if (!b.is_zero()) out(r, k) += v * b;
            }
        }
    }
    return out;
}

namespace {

template <typename StencilAt>
void fill_rows(StencilOperator& op, bool degree_side, StencilAt&& stencil_at) {
    const TriangleGrid& grid = op.grid();
    for (std::size_t r = 0; r < grid.size(); ++r) {
        const LatticePoint center = grid[r];
        const Stencil s = stencil_at(center);
        for (std::size_t k = 0; k < kStencilShifts.size(); ++k) {
            const Rational& c = s.coefficients[k];
            if (c.is_zero()) continue;
            auto col = grid.find(center.a + kStencilShifts[k].da, center.b + kStencilShifts[k].db);
            if (col) {
                op.add(r, *col, c);
            } else if (degree_side) {
                // Degree stencils must close through vanishing coefficients.
                throw std::logic_error(std::string("nonzero coefficient leaves the degree triangle in ") +
                                       std::string(to_string(op.kind())));
            }
            // Variable-side neighbours outside the triangle meet a family value
            // of 0 (zero-extension) and are dropped.
        }
    }
}

tratnik::TRelationId tratnik_relation(OperatorKind kind) {
    switch (kind) {
        case OperatorKind::TratnikRecX: return tratnik::TRelationId::RecX;
        case OperatorKind::TratnikRecY: return tratnik::TRelationId::RecY;
        case OperatorKind::TratnikDiffJ: return tratnik::TRelationId::DiffJ;
        case OperatorKind::TratnikDiffI: return tratnik::TRelationId::DiffI;
        default: break;
    }
    throw std::invalid_argument(std::string(to_string(kind)) + " is not a Tratnik operator");
}

griffiths::GRelationId griffiths_relation(OperatorKind kind) {
    switch (kind) {
        case OperatorKind::GriffithsRecX: return griffiths::GRelationId::RecX;
        case OperatorKind::GriffithsRecY: return griffiths::GRelationId::RecY;
        case OperatorKind::GriffithsDiffI: return griffiths::GRelationId::DiffI;
        case OperatorKind::GriffithsDiffJ: return griffiths::GRelationId::DiffJ;
        default: break;
    }
    throw std::invalid_argument(std::string(to_string(kind)) + " is not a Griffiths operator");
}

}  // namespace

StencilOperator build_operator(OperatorKind kind, const tratnik::TratnikParams& params) {
    const auto rel = tratnik_relation(kind);
    StencilOperator op(kind, TriangleGrid(params.N()), {{"p1", params.p1()}, {"p2", params.p2()}});
    fill_rows(op, acts_on_degrees(kind),
              [&](const LatticePoint& center) { return tratnik::t_stencil(rel, center, params); });
    return op;
}

StencilOperator build_operator(OperatorKind kind, const griffiths::ParamSet& params) {
    const auto rel = griffiths_relation(kind);
    StencilOperator op(kind, TriangleGrid(params.N()),
                       {{"p1", params.p1()}, {"p2", params.p2()}, {"p3", params.p3()}, {"lambda", params.lambda()}});
    fill_rows(op, acts_on_degrees(kind),
              [&](const LatticePoint& center) { return griffiths::g_stencil(rel, center, params); });
    return op;
}

EigenvalueFunction matched_eigenvalue(OperatorKind kind) {
    if (is_tratnik(kind)) {
        auto rel = tratnik_relation(kind);
        return [rel](const LatticePoint& opposite) { return tratnik::t_eigenvalue(rel, opposite); };
    }
    auto rel = griffiths_relation(kind);
    return [rel](const LatticePoint& opposite) { return griffiths::g_eigenvalue(rel, opposite); };
}

Rational eigen_residual(const StencilOperator& op, const RationalMatrix& family_table,
                        const EigenvalueFunction& eigenvalue) {
    const TriangleGrid& grid = op.grid();
    const std::size_t dim = grid.size();
    if (family_table.rows() != dim || family_table.cols() != dim) {
        throw std::invalid_argument("eigen_residual: family table does not match the operator grid");
    }
    // Arrange family vectors as columns: degree-side operators use the table
    // as is, variable-side operators its transpose.
    const RationalMatrix vectors = acts_on_degrees(op.kind()) ? family_table : family_table.transpose();
    const RationalMatrix image = op.apply(vectors);
    Rational worst(0);
    for (std::size_t col = 0; col < dim; ++col) {
        const Rational nu = eigenvalue(grid[col]);
        for (std::size_t r = 0; r < dim; ++r) {
            Rational diff = (image(r, col) - nu * vectors(r, col)).abs();
            if (diff > worst) worst = std::move(diff);
        }
    }
    return worst;
}

bool commutator_is_zero(const StencilOperator& a, const StencilOperator& b) {
    if (!(a.grid() == b.grid())) throw std::invalid_argument("commutator_is_zero: grid mismatch");
    const RationalMatrix da = a.to_dense();
    const RationalMatrix db = b.to_dense();
    return a.apply(db) == b.apply(da);
}

StencilOperator identity_operator(OperatorKind kind, const TriangleGrid& grid) {
    StencilOperator op(kind, grid, {});
    for (std::size_t k = 0; k < grid.size(); ++k) op.add(k, k, Rational(1));
    return op;
}

std::string to_json(const StencilOperator& op, int indent) {
    nlohmann::ordered_json doc;
    doc["kind"] = std::string(to_string(op.kind()));
    doc["N"] = op.grid().N();
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [name, value] : op.params()) params[name] = value.to_string();
    doc["params"] = params;
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const auto& e : op.entries()) {
        entries.push_back({{e.row.a, e.row.b}, {e.col.a, e.col.b}, e.value.to_string()});
    }
    doc["entries"] = entries;
    return doc.dump(indent);
}

}  // namespace lgriffiths::operators
