#include <gtest/gtest.h>

#include <json.hpp>

#include "lgriffiths/griffiths.hpp"
#include "lgriffiths/operators.hpp"
#include "lgriffiths/tratnik.hpp"

using lgriffiths::LatticePoint;
using lgriffiths::Rational;
using lgriffiths::RationalMatrix;
using lgriffiths::TriangleGrid;
using lgriffiths::griffiths::GriffithsTable;
using lgriffiths::griffiths::ParamSet;
using lgriffiths::tratnik::TratnikParams;
using lgriffiths::tratnik::TratnikTable;
using namespace lgriffiths::operators;

namespace {

ParamSet generic(int N) { return ParamSet(Rational(1, 2), Rational(1, 3), Rational(1, 5), Rational(2), N); }

}  // namespace

TEST(Operators, KindNames) {
    for (auto kind : kAllOperatorKinds) EXPECT_EQ(parse_operator_kind(to_string(kind)), kind);
    EXPECT_THROW(parse_operator_kind("GriffithsRecZ"), std::invalid_argument);
    EXPECT_TRUE(is_tratnik(OperatorKind::TratnikDiffI));
    EXPECT_FALSE(is_tratnik(OperatorKind::GriffithsDiffI));
    EXPECT_TRUE(acts_on_degrees(OperatorKind::GriffithsRecY));
    EXPECT_FALSE(acts_on_degrees(OperatorKind::GriffithsDiffJ));
}

TEST(Operators, WrongFamilyThrows) {
    EXPECT_THROW(build_operator(OperatorKind::TratnikRecX, generic(2)), std::invalid_argument);
    EXPECT_THROW(build_operator(OperatorKind::GriffithsRecX, TratnikParams(Rational(1, 3), Rational(1, 5), 2)),
                 std::invalid_argument);
}

TEST(Operators, SevenPointSparsity) {
    for (int N = 1; N <= 6; ++N) {
        for (auto kind : kAllOperatorKinds) {
            const StencilOperator op = is_tratnik(kind)
                                           ? build_operator(kind, TratnikParams(Rational(1, 3), Rational(1, 5), N))
                                           : build_operator(kind, generic(N));
            EXPECT_LE(op.max_row_nonzeros(), 7U) << to_string(kind);
            EXPECT_EQ(op.grid().N(), N);
        }
    }
}

TEST(Operators, RecXBoundaryRowStaysInGrid) {
    const int N = 4;
    const StencilOperator op = build_operator(OperatorKind::GriffithsRecX, generic(N));
    const TriangleGrid& grid = op.grid();
    for (std::size_t r = 0; r < grid.size(); ++r) {
        const LatticePoint row = grid[r];
        if (row.a + row.b != N) continue;
        for (const auto& [c, value] : op.row(r)) {
            const LatticePoint col = grid[c];
            EXPECT_LE(col.a + col.b, N);
            EXPECT_FALSE(col.a == row.a + 1 && col.b == row.b);
            EXPECT_FALSE(col.a == row.a && col.b == row.b + 1);
            EXPECT_FALSE(value.is_zero());
        }
    }
}

TEST(Operators, MatchedEigenResidualsVanish) {
    for (int N = 1; N <= 5; ++N) {
        const TratnikParams tp(Rational(-2, 3), Rational(5, 4), N);
        const TratnikTable ttable(tp);
        const ParamSet gp(Rational(-2, 3), Rational(5, 4), Rational(3, 7), Rational(-3, 5), N);
        const GriffithsTable gtable(gp);
        for (auto kind : kAllOperatorKinds) {
            if (is_tratnik(kind)) {
                EXPECT_TRUE(eigen_residual(build_operator(kind, tp), ttable.values(), matched_eigenvalue(kind)).is_zero())
                    << to_string(kind) << " N=" << N;
            } else {
                EXPECT_TRUE(eigen_residual(build_operator(kind, gp), gtable.values(), matched_eigenvalue(kind)).is_zero())
                    << to_string(kind) << " N=" << N;
            }
        }
    }
}

TEST(Operators, MismatchedEigenvalueLeavesResidual) {
    const ParamSet gp = generic(3);
    const GriffithsTable table(gp);
    const StencilOperator recx = build_operator(OperatorKind::GriffithsRecX, gp);
    EXPECT_GT(eigen_residual(recx, table.values(), [](const LatticePoint& v) { return Rational(-v.b); }), Rational(0));
    EXPECT_GT(eigen_residual(recx, table.values(), [](const LatticePoint&) { return Rational(0); }), Rational(0));
    EXPECT_THROW(eigen_residual(recx, GriffithsTable(generic(2)).values(), matched_eigenvalue(OperatorKind::GriffithsRecX)),
                 std::invalid_argument);
}

TEST(Operators, DenseAndApplyAgree) {
    const StencilOperator op = build_operator(OperatorKind::GriffithsDiffJ, generic(3));
    const RationalMatrix dense = op.to_dense();
    const RationalMatrix table = GriffithsTable(generic(3)).values().transpose();
    EXPECT_EQ(op.apply(table), dense * table);
    std::size_t nz = 0;
    for (std::size_t r = 0; r < dense.rows(); ++r) {
        for (std::size_t c = 0; c < dense.cols(); ++c) nz += dense(r, c).is_zero() ? 0 : 1;
    }
    EXPECT_EQ(nz, op.nonzeros());
    EXPECT_EQ(op.entries().size(), op.nonzeros());
}

TEST(Operators, Commutators) {
    for (int N = 1; N <= 5; ++N) {
        const ParamSet gp = generic(N);
        const auto recx = build_operator(OperatorKind::GriffithsRecX, gp);
        const auto recy = build_operator(OperatorKind::GriffithsRecY, gp);
        const auto diffi = build_operator(OperatorKind::GriffithsDiffI, gp);
        const auto diffj = build_operator(OperatorKind::GriffithsDiffJ, gp);
        EXPECT_TRUE(commutator_is_zero(recx, recy)) << N;
        EXPECT_TRUE(commutator_is_zero(diffi, diffj)) << N;
        EXPECT_TRUE(commutator_is_zero(recx, identity_operator(OperatorKind::GriffithsRecX, recx.grid())));
    }
    const ParamSet gp = generic(3);
    EXPECT_THROW(commutator_is_zero(build_operator(OperatorKind::GriffithsRecX, gp),
                                    build_operator(OperatorKind::GriffithsRecY, generic(2))),
                 std::invalid_argument);
}

TEST(Operators, NonCommutingPairIsDetected) {
    // A recurrence in the degrees and a difference operator in the variables act
    // on different index sets; as matrices on the same grid they do not commute.
    const ParamSet gp = generic(3);
    EXPECT_FALSE(commutator_is_zero(build_operator(OperatorKind::GriffithsRecX, gp),
                                    build_operator(OperatorKind::GriffithsDiffI, gp)));
}

TEST(Operators, JsonDump) {
    const StencilOperator op = build_operator(OperatorKind::GriffithsRecY, generic(2));
    const std::string text = to_json(op);
    EXPECT_EQ(text, to_json(build_operator(OperatorKind::GriffithsRecY, generic(2))));
    const auto doc = nlohmann::json::parse(text);
    EXPECT_EQ(doc["kind"], "GriffithsRecY");
    EXPECT_EQ(doc["N"], 2);
    EXPECT_EQ(doc["params"]["p1"], "1/2");
    EXPECT_EQ(doc["params"]["lambda"], "2");
    ASSERT_EQ(doc["entries"].size(), op.nonzeros());
    const auto entries = op.entries();
    for (std::size_t k = 0; k < entries.size(); ++k) {
        const auto& e = doc["entries"][k];
        EXPECT_EQ(e[0][0], entries[k].row.a);
        EXPECT_EQ(e[0][1], entries[k].row.b);
        EXPECT_EQ(e[1][0], entries[k].col.a);
        EXPECT_EQ(e[1][1], entries[k].col.b);
        EXPECT_EQ(e[2].get<std::string>(), entries[k].value.to_string());
    }
}
