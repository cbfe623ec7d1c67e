#include <gtest/gtest.h>

#include "lgriffiths/errors.hpp"
#include "lgriffiths/griffiths.hpp"
#include "oracles.hpp"

using lgriffiths::Rational;
using lgriffiths::RationalMatrix;
using lgriffiths::TriangleGrid;
using namespace lgriffiths::griffiths;

namespace {

std::vector<ParamSet> sample_params(int N) {
    return {
        ParamSet(Rational(1, 2), Rational(1, 3), Rational(1, 5), Rational(2), N),
        ParamSet(Rational(-2, 3), Rational(5, 4), Rational(3, 7), Rational(-3, 5), N),
        ParamSet(Rational(7, 2), Rational(-1, 9), Rational(11, 6), Rational(4, 3), N),
    };
}

}  // namespace

TEST(Griffiths, RejectsDegenerateParams) {
    EXPECT_THROW(ParamSet(Rational(0), Rational(1, 3), Rational(1, 5), Rational(2), 2), lgriffiths::DegenerateParams);
    EXPECT_THROW(ParamSet(Rational(1, 2), Rational(1), Rational(1, 5), Rational(2), 2), lgriffiths::DegenerateParams);
    EXPECT_THROW(ParamSet(Rational(1, 2), Rational(1, 3), Rational(1), Rational(2), 2), lgriffiths::DegenerateParams);
    EXPECT_THROW(ParamSet(Rational(1, 2), Rational(1, 3), Rational(1, 5), Rational(0), 2), lgriffiths::DegenerateParams);
    EXPECT_THROW(ParamSet(Rational(1, 2), Rational(1, 3), Rational(1, 5), Rational(1), -1), std::invalid_argument);
}

TEST(Griffiths, AllMethodsMatchOracle) {
    for (int N = 0; N <= 5; ++N) {
        const TriangleGrid grid(N);
        for (const auto& params : sample_params(N)) {
            const GriffithsTable table(params);
            for (const auto& d : grid.points()) {
                for (const auto& v : grid.points()) {
                    const Rational expected = oracle::griffiths(d.a, d.b, v.a, v.b, params.p1(), params.p2(),
                                                                params.p3(), params.lambda(), N);
                    for (auto method : kAllEvalMethods) {
                        EXPECT_EQ(g_eval(d.a, d.b, v.a, v.b, params, method), expected) << to_string(method);
                    }
                    EXPECT_EQ(table.at(d.a, d.b, v.a, v.b), expected);
                }
            }
        }
    }
}

TEST(Griffiths, ZeroExtension) {
    const ParamSet params(Rational(1, 2), Rational(1, 3), Rational(1, 5), Rational(2), 3);
    const GriffithsTable table(params);
    const TriangleGrid grid(3);
    for (const auto& d : grid.points()) {
        for (int t = 0; t <= 3; ++t) {
            for (auto method : kAllEvalMethods) {
                EXPECT_TRUE(g_eval(d.a, d.b, t, -1, params, method).is_zero());
                EXPECT_TRUE(g_eval(d.a, d.b, -1, t, params, method).is_zero());
            }
            EXPECT_TRUE(table.at(d.a, d.b, t, 4 - t).is_zero());
        }
    }
    EXPECT_THROW(g_eval(3, 1, 0, 0, params), lgriffiths::OutOfDomain);
}

TEST(Griffiths, AllHalfParametersAtOrigin) {
    // sum_a C(2,a) = 4
    const ParamSet params(Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1), 2);
    EXPECT_EQ(g_eval(0, 0, 0, 0, params), Rational(4));
    EXPECT_EQ(oracle::griffiths(0, 0, 0, 0, Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1), 2),
              Rational(4));
}

TEST(Griffiths, LambdaZeroTerm) {
    const int N = 4;
    const Rational p1(1, 3);
    const Rational p2(2, 5);
    const Rational p3(-1, 4);
    const ParamSet params(p1, p2, p3, Rational(7), N);
    const TriangleGrid grid(N);
    for (const auto& d : grid.points()) {
        for (const auto& v : grid.points()) {
            const Rational expected = oracle::krawtchouk(d.b, v.b, p2, N) *
                                      oracle::power(p3 / (Rational(1) - p3), v.a) * oracle::binomial(N - v.b, v.a);
            EXPECT_EQ(g_lambda_zero_term(d.a, d.b, v.a, v.b, params), expected);
        }
    }
    // A tiny lambda moves G only by O(lambda).
    const Rational tiny(1, 1000000);
    const Rational diff = g_eval(1, 1, 1, 1, params.with_lambda(tiny)) - g_lambda_zero_term(1, 1, 1, 1, params);
    EXPECT_LT(diff.abs(), Rational(1, 1000));
}

TEST(Griffiths, TildeAtZeroDegree) {
    const ParamSet params(Rational(1, 2), Rational(1, 3), Rational(1, 5), Rational(2), 3);
    const ParamSet rescaled = params.with_lambda(params.lambda() * (Rational(1) - params.p1()) / params.p1());
    const TriangleGrid grid(3);
    for (const auto& v : grid.points()) {
        EXPECT_EQ(g_tilde_eval(0, 0, v.a, v.b, params), g_eval(0, 0, v.a, v.b, rescaled) / Rational(6));
    }
}

TEST(Griffiths, Duality) {
    const ParamSet example(Rational(1, 2), Rational(1, 3), Rational(1, 5), Rational(2), 3);
    EXPECT_EQ(g_duality_residual(1, 0, 0, 1, example), Rational(0));
    EXPECT_EQ(g_duality_residual(0, 0, 0, 0, example), Rational(0));
    for (int N = 0; N <= 4; ++N) {
        const TriangleGrid grid(N);
        for (const auto& params : sample_params(N)) {
            for (const auto& d : grid.points()) {
                for (const auto& v : grid.points()) {
                    EXPECT_TRUE(g_duality_residual(d.a, d.b, v.a, v.b, params).is_zero());
                }
            }
        }
    }
}

TEST(GriffithsRelations, Examples) {
    const ParamSet params(Rational(1, 2), Rational(1, 3), Rational(1, 5), Rational(3), 3);
    EXPECT_EQ(g_relation_residual(GRelationId::DiffI, 1, 0, 1, 0, params), Rational(0));
    // Boundary row of RecX: the outward coefficients vanish.
    const auto st = g_stencil(GRelationId::RecX, {1, 2}, params);
    EXPECT_TRUE(st.coefficients[1].is_zero());
    EXPECT_TRUE(st.coefficients[3].is_zero());
    const TriangleGrid grid(3);
    for (const auto& v : grid.points()) {
        EXPECT_TRUE(g_relation_residual(GRelationId::RecX, 1, 2, v.a, v.b, params).is_zero());
        EXPECT_TRUE(g_relation_residual(GRelationId::RecX, 3, 0, v.a, v.b, params).is_zero());
    }
}

TEST(GriffithsRelations, AllVanish) {
    for (int N = 1; N <= 4; ++N) {
        const TriangleGrid grid(N);
        for (const auto& params : sample_params(N)) {
            const GriffithsTable table(params);
            for (auto rel : kAllGRelations) {
                for (const auto& d : grid.points()) {
                    for (const auto& v : grid.points()) {
                        EXPECT_TRUE(g_relation_residual(rel, d.a, d.b, v.a, v.b, table).is_zero())
                            << to_string(rel) << " N=" << N << " d=" << d << " v=" << v;
                    }
                }
            }
        }
    }
}

TEST(GriffithsRelations, RecYIsLambdaFree) {
    const ParamSet params(Rational(1, 2), Rational(1, 3), Rational(1, 5), Rational(2), 3);
    const auto a = g_stencil(GRelationId::RecY, {1, 1}, params);
    const auto b = g_stencil(GRelationId::RecY, {1, 1}, params.with_lambda(Rational(-9, 4)));
    for (std::size_t k = 0; k < a.coefficients.size(); ++k) EXPECT_EQ(a.coefficients[k], b.coefficients[k]);
}

TEST(GriffithsRelations, Names) {
    for (auto rel : kAllGRelations) EXPECT_EQ(parse_grelation(to_string(rel)), rel);
    EXPECT_THROW(parse_grelation("RecZ"), std::invalid_argument);
    EXPECT_EQ(g_eigenvalue(GRelationId::DiffI, {2, 1}), Rational(-2));
    EXPECT_EQ(g_eigenvalue(GRelationId::DiffJ, {2, 1}), Rational(-1));
}

TEST(GriffithsWeights, Mu) {
    EXPECT_EQ(mu(Rational(1, 2), Rational(1, 2), Rational(1, 3)), Rational(1));
    for (long d = 3; d <= 9; ++d) {
        const Rational p2(1, d);
        EXPECT_EQ(mu(Rational(1, 2), p2, Rational(1, 2)), (Rational(1) - p2).reciprocal());
    }
    EXPECT_THROW(mu(Rational(0), Rational(1, 2), Rational(1, 3)), lgriffiths::DegenerateParams);
    EXPECT_THROW(mu(Rational(1, 2), Rational(1), Rational(1, 3)), lgriffiths::DegenerateParams);
    EXPECT_THROW(mu(Rational(1, 2), Rational(1, 2), Rational(1)), lgriffiths::DegenerateParams);
}

TEST(GriffithsWeights, Omega) {
    EXPECT_EQ(omega(0, 0, Rational(2, 7), Rational(5, 3), 4), Rational(24));
    EXPECT_EQ(omega(1, 1, Rational(1, 2), Rational(1, 3), 3), Rational(4, 3));
    EXPECT_NE(omega(1, 2, Rational(1, 2), Rational(1, 3), 3), omega(1, 2, Rational(1, 3), Rational(1, 2), 3));
}

TEST(GriffithsBiorth, GramIsDiagonalWithClosedForm) {
    for (int N = 0; N <= 4; ++N) {
        const TriangleGrid grid(N);
        for (const auto& params : sample_params(N)) {
            const RationalMatrix gram = g_biorth_gram(params);
            EXPECT_TRUE(gram.is_diagonal()) << "N=" << N;
            for (std::size_t k = 0; k < grid.size(); ++k) {
                EXPECT_EQ(gram(k, k), biorth_diagonal(grid[k].a, grid[k].b, params));
                EXPECT_FALSE(gram(k, k).is_zero());
            }
        }
    }
}

TEST(GriffithsBiorth, PartnerSwapTransposes) {
    const ParamSet params(Rational(-2, 3), Rational(5, 4), Rational(3, 7), Rational(-3, 5), 3);
    const ParamSet partner = params.partner();
    EXPECT_EQ(params.lambda() * partner.lambda(), mu(params.p1(), params.p2(), params.p3()));
    auto unit = [](int, int) { return Rational(1); };
    EXPECT_EQ(g_pairing_gram(params, unit).transpose(), g_pairing_gram(partner, unit));
    EXPECT_EQ(g_biorth_gram(params).transpose(), g_biorth_gram(partner));
}

TEST(GriffithsBiorth, DiagonalIndependentOfLambda) {
    const ParamSet a(Rational(1, 2), Rational(1, 3), Rational(1, 5), Rational(2), 3);
    EXPECT_EQ(g_biorth_gram(a), g_biorth_gram(a.with_lambda(Rational(-7, 4))));
}

TEST(GriffithsBiorth, PrintedWeightDoesNotDiagonalize) {
    const ParamSet params(Rational(1, 2), Rational(1, 3), Rational(1, 5), Rational(2), 3);
    const RationalMatrix gram =
        g_pairing_gram(params, [&](int x, int y) { return omega(x, y, params.p2(), params.p3(), params.N()); });
    EXPECT_FALSE(gram.is_diagonal());
}

TEST(GriffithsBiorth, OrthogonalLambdas) {
    const auto pair = orthogonal_lambdas(Rational(1, 2), Rational(1, 2), Rational(1, 3));
    ASSERT_TRUE(pair.has_value());
    EXPECT_EQ(pair->first, Rational(1));
    EXPECT_EQ(pair->second, Rational(-1));
    // mu = 2 at (1/2, 1/2, 1/2)
    EXPECT_EQ(mu(Rational(1, 2), Rational(1, 2), Rational(1, 2)), Rational(2));
    EXPECT_FALSE(orthogonal_lambdas(Rational(1, 2), Rational(1, 2), Rational(1, 2)).has_value());
}

TEST(GriffithsBiorth, SquareMuFixture) {
    const Rational p1(2, 5);
    const Rational p2(1, 7);
    const Rational s(3, 4);
    const Rational p3 = p3_for_square_mu(p1, p2, s);
    EXPECT_EQ(mu(p1, p2, p3), s * s);
    const auto pair = orthogonal_lambdas(p1, p2, p3);
    ASSERT_TRUE(pair.has_value());
    EXPECT_EQ(pair->first, s);
    // At lambda = sqrt(mu) the family pairs with itself.
    const ParamSet params(p1, p2, p3, s, 3);
    EXPECT_EQ(params.partner().lambda(), s);
    EXPECT_TRUE(g_biorth_gram(params).is_diagonal());
}
