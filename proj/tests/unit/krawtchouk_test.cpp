#include <gtest/gtest.h>

#include "lgriffiths/errors.hpp"
#include "lgriffiths/krawtchouk.hpp"
#include "oracles.hpp"

using lgriffiths::Rational;
using lgriffiths::RationalMatrix;
using namespace lgriffiths::krawtchouk;

namespace {

const Rational kSampleP[] = {Rational(1, 2), Rational(1, 3), Rational(-2, 7), Rational(5, 3), Rational(97, 96)};

}  // namespace

TEST(Krawtchouk, RejectsDegenerateP) {
    EXPECT_THROW(KrawtchoukParams(Rational(0), 3), lgriffiths::DegenerateParams);
    EXPECT_THROW(KrawtchoukParams(Rational(1), 3), lgriffiths::DegenerateParams);
    EXPECT_THROW(KrawtchoukParams(Rational(1, 2), -1), std::invalid_argument);
}

TEST(Krawtchouk, ValueAtZeroIsOne) {
    for (const auto& p : kSampleP) {
        for (int N = 0; N <= 6; ++N) {
            for (int j = 0; j <= N; ++j) EXPECT_EQ(k_eval(j, 0, KrawtchoukParams(p, N)), Rational(1));
        }
    }
}

TEST(Krawtchouk, DegreeZero) {
    const KrawtchoukParams params(Rational(2, 5), 4);
    for (int x = 0; x <= 4; ++x) {
        EXPECT_EQ(k_eval(0, x, params), Rational(2, 3).pow(x) * oracle::binomial(4, x));
    }
}

TEST(Krawtchouk, HalfParameterDegreeOne) {
    const KrawtchoukParams params(Rational(1, 2), 2);
    EXPECT_EQ(k_eval(1, 0, params), Rational(1));
    EXPECT_EQ(k_eval(1, 1, params), Rational(0));
    EXPECT_EQ(k_eval(1, 2, params), Rational(-1));
}

TEST(Krawtchouk, MatchesOracleAndZeroExtends) {
    for (const auto& p : kSampleP) {
        for (int N = 0; N <= 7; ++N) {
            const KrawtchoukParams params(p, N);
            for (int i = 0; i <= N; ++i) {
                for (int x = -2; x <= N + 2; ++x) EXPECT_EQ(k_eval(i, x, params), oracle::krawtchouk(i, x, p, N));
            }
        }
    }
}

TEST(Krawtchouk, RejectsDegreeOutsideRange) {
    const KrawtchoukParams params(Rational(1, 3), 3);
    EXPECT_THROW(k_eval(4, 0, params), lgriffiths::OutOfDomain);
    EXPECT_THROW(k_eval(-1, 0, params), lgriffiths::OutOfDomain);
}

TEST(Krawtchouk, Weight) {
    const KrawtchoukParams half(Rational(1, 2), 2);
    EXPECT_EQ(k_weight(0, half), Rational(2));
    EXPECT_EQ(k_weight(1, half), Rational(1));
    EXPECT_EQ(k_weight(2, half), Rational(2));
    const KrawtchoukParams p(Rational(3, 7), 5);
    EXPECT_EQ(k_weight(0, p), Rational(120));
    EXPECT_EQ(k_weight(5, p), Rational(4, 3).pow(5) * Rational(120));
    EXPECT_THROW(k_weight(6, p), lgriffiths::OutOfDomain);
}

TEST(Krawtchouk, GramHalfParameter) {
    const RationalMatrix gram = k_gram(KrawtchoukParams(Rational(1, 2), 2));
    EXPECT_TRUE(gram.is_diagonal());
    EXPECT_EQ(gram(0, 0), Rational(8));
    EXPECT_EQ(gram(1, 1), Rational(4));
    EXPECT_EQ(gram(2, 2), Rational(8));
}

TEST(Krawtchouk, GramDiagonalMatchesOrthogonality) {
    for (const auto& p : kSampleP) {
        for (int N = 0; N <= 8; ++N) {
            const KrawtchoukParams params(p, N);
            const RationalMatrix gram = k_gram(params);
            EXPECT_TRUE(gram.is_diagonal());
            for (int i = 0; i <= N; ++i) {
                EXPECT_EQ(gram(i, i), oracle::weight(i, p, N) / oracle::power(Rational(1) - p, N));
                EXPECT_EQ(gram(i, i), k_gram_diagonal(i, params));
            }
        }
    }
}

TEST(Krawtchouk, Duality) {
    const KrawtchoukParams half(Rational(1, 2), 2);
    EXPECT_EQ(k_weight(2, half) * k_eval(1, 2, half), Rational(-2));
    EXPECT_EQ(k_duality_residual(1, 2, half), Rational(0));
    for (const auto& p : kSampleP) {
        for (int N = 0; N <= 7; ++N) {
            const KrawtchoukParams params(p, N);
            for (int i = 0; i <= N; ++i) {
                for (int x = 0; x <= N; ++x) EXPECT_TRUE(k_duality_residual(i, x, params).is_zero());
            }
        }
    }
}

TEST(Krawtchouk, DegreeByFiniteDifferences) {
    // k_i(x) stripped of (p/(1-p))^x C(N,x) is a polynomial of degree exactly i.
    const Rational p(2, 7);
    const int N = 7;
    const KrawtchoukParams params(p, N);
    for (int i = 0; i < N; ++i) {
        std::vector<Rational> values;
        for (int x = 0; x <= N; ++x) {
            values.push_back(k_eval(i, x, params) * ((Rational(1) - p) / p).pow(x) / oracle::binomial(N, x));
        }
        std::vector<std::vector<Rational>> diffs{values};
        for (int order = 1; order <= i + 1; ++order) {
            const auto& prev = diffs.back();
            std::vector<Rational> next;
            for (std::size_t k = 0; k + 1 < prev.size(); ++k) next.push_back(prev[k + 1] - prev[k]);
            diffs.push_back(next);
        }
        bool ith_nonzero = false;
        for (const auto& v : diffs[static_cast<std::size_t>(i)]) ith_nonzero = ith_nonzero || !v.is_zero();
        EXPECT_TRUE(ith_nonzero) << "degree " << i;
        for (const auto& v : diffs[static_cast<std::size_t>(i) + 1]) EXPECT_TRUE(v.is_zero()) << "degree " << i;
    }
}

TEST(Krawtchouk, FamilyMatchesDirectEvaluation) {
    const Rational p(-3, 11);
    const KrawtchoukFamily family(p, 6);
    for (int size = 0; size <= 6; ++size) {
        const KrawtchoukParams params(p, size);
        for (int i = 0; i <= size; ++i) {
            for (int x = -1; x <= size + 1; ++x) EXPECT_EQ(family.value(i, x, size), k_eval(i, x, params));
        }
    }
    EXPECT_THROW((void)family.value(0, 0, 7), lgriffiths::OutOfDomain);
    EXPECT_THROW((void)family.value(3, 0, 2), lgriffiths::OutOfDomain);
}

TEST(KrawtchoukRelations, NamesAndHeadings) {
    EXPECT_EQ(kAllRelations.size(), 14U);
    for (auto rel : kAllRelations) EXPECT_EQ(parse_relation(to_string(rel)), rel);
    EXPECT_EQ(heading(RelationId::ContigDiff1), "Contiguity difference relation (I)");
    EXPECT_EQ(heading(RelationId::ShiftedRecu2), "Shifted recurrence relations (II)");
    EXPECT_EQ(heading(RelationId::DualBackward), "Dual backward relation");
    EXPECT_THROW(parse_relation("Sideways"), std::invalid_argument);
}

TEST(KrawtchoukRelations, SpotChecks) {
    const KrawtchoukParams third(Rational(1, 3), 3);
    EXPECT_EQ(k_relation_residual(RelationId::ShiftedRecu1, 1, 1, third), Rational(0));
    for (int N = 1; N <= 5; ++N) {
        const KrawtchoukParams params(Rational(3, 8), N);
        for (int i = 0; i <= N; ++i) {
            EXPECT_EQ(k_relation_residual(RelationId::Difference, i, 0, params), Rational(0));
            for (int x = 0; x <= N; ++x) EXPECT_EQ(k_relation_residual(RelationId::Recurrence, i, x, params), Rational(0));
        }
    }
}

TEST(KrawtchoukRelations, AllVanishOnAdmissibleRectangles) {
    for (const auto& p : kSampleP) {
        const KrawtchoukFamily family(p, 8);
        for (int N = 1; N <= 7; ++N) {
            const KrawtchoukParams params(p, N);
            for (auto rel : kAllRelations) {
                const auto rect = relation_domain(rel, N);
                ASSERT_FALSE(rect.empty()) << to_string(rel);
                for (int i = rect.degree_min; i <= rect.degree_max; ++i) {
                    for (int x = rect.arg_min; x <= rect.arg_max; ++x) {
                        EXPECT_TRUE(k_relation_residual(rel, i, x, params, family).is_zero())
                            << to_string(rel) << " i=" << i << " x=" << x << " N=" << N << " p=" << p;
                    }
                }
            }
        }
    }
}

TEST(KrawtchoukRelations, OutsideRectangleIsAnError) {
    const KrawtchoukParams params(Rational(1, 3), 3);
    for (auto rel : kAllRelations) {
        const auto rect = relation_domain(rel, 3);
        EXPECT_THROW(k_relation_residual(rel, rect.degree_max + 1, 0, params), lgriffiths::OutOfDomain);
        EXPECT_THROW(k_relation_residual(rel, 0, rect.arg_max + 1, params), lgriffiths::OutOfDomain);
    }
}

TEST(KrawtchoukRelations, BrokenTranscriptionIsDetected) {
    // Perturbing one term of a relation must leave a nonzero residual, so the
    // zero results above are not vacuous.
    const KrawtchoukParams params(Rational(2, 5), 4);
    auto inst = relation_terms(RelationId::Recurrence, 1, 2, params);
    ASSERT_FALSE(inst.rhs.empty());
    inst.rhs.front().coefficient += Rational(1);
    Rational lhs(0);
    Rational rhs(0);
    for (const auto& t : inst.lhs) lhs += t.coefficient * oracle::krawtchouk(t.degree, t.arg, params.p(), t.size);
    for (const auto& t : inst.rhs) rhs += t.coefficient * oracle::krawtchouk(t.degree, t.arg, params.p(), t.size);
    EXPECT_FALSE((lhs - rhs).is_zero());
}
