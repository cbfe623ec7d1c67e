#include "lgriffiths/cli/suites.hpp"

#include <stdexcept>

#include "lgriffiths/griffiths.hpp"
#include "lgriffiths/krawtchouk.hpp"
#include "lgriffiths/operators.hpp"
#include "lgriffiths/tratnik.hpp"

namespace lgriffiths::cli {

long ParamSampler::uniform(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(rng_() % span);
}

Rational ParamSampler::next() {
    for (;;) {
        const long num = uniform(-97, 97);
        const long den = uniform(1, 97);
        if (num == 0) continue;
        Rational q(num, den);
        if (q.is_one()) continue;
        return q;
    }
}

Rational ParamSampler::next_negative() {
    Rational q = next();
    return q.sign() < 0 ? q : -q;
}

namespace {

std::string indices(int i, int j, int x, int y, int N) {
    return "i=" + std::to_string(i) + " j=" + std::to_string(j) + " x=" + std::to_string(x) +
           " y=" + std::to_string(y) + " N=" + std::to_string(N);
}

std::string describe(const griffiths::ParamSet& ps) {
    return "p1=" + ps.p1().to_string() + " p2=" + ps.p2().to_string() + " p3=" + ps.p3().to_string() +
           " lambda=" + ps.lambda().to_string();
}

std::string describe(const tratnik::TratnikParams& ps) {
    return "p1=" + ps.p1().to_string() + " p2=" + ps.p2().to_string();
}

griffiths::ParamSet draw_griffiths(ParamSampler& sampler, int sample, int N) {
    Rational p1 = sampler.next();
    Rational p2 = sampler.next();
    Rational p3 = sampler.next();
    Rational lambda = (sample % 2 == 1) ? sampler.next_negative() : sampler.next();
    return {p1, p2, p3, lambda, N};
}

void krawtchouk_relations(SuiteResult& result, int N, std::uint64_t seed, int samples) {
    using namespace krawtchouk;
    ParamSampler sampler(seed);
    for (int s = 0; s < samples; ++s) {
        const Rational p = sampler.next();
        KrawtchoukFamily family(p, N + 1);
        for (int n = 1; n <= N; ++n) {
            const KrawtchoukParams params(p, n);
            for (auto rel : kAllRelations) {
                const auto rect = relation_domain(rel, n);
                for (int i = rect.degree_min; i <= rect.degree_max; ++i) {
                    for (int x = rect.arg_min; x <= rect.arg_max; ++x) {
                        ++result.checks;
                        Rational r = k_relation_residual(rel, i, x, params, family);
                        if (!r.is_zero()) {
                            result.failure = SuiteFailure{std::string(to_string(rel)),
                                                          "i=" + std::to_string(i) + " x=" + std::to_string(x) +
                                                              " N=" + std::to_string(n),
                                                          "p=" + p.to_string(), r};
                            return;
                        }
                    }
                }
            }
        }
    }
}

void tratnik_suite(SuiteResult& result, int N, std::uint64_t seed, int samples) {
    using namespace tratnik;
    ParamSampler sampler(seed);
    for (int s = 0; s < samples; ++s) {
        const Rational p1 = sampler.next();
        const Rational p2 = sampler.next();
        for (int n = 1; n <= N; ++n) {
            const TratnikParams params(p1, p2, n);
            const TratnikTable table(params);
            const TriangleGrid& grid = table.grid();
            for (auto rel : kAllTRelations) {
                for (const auto& d : grid.points()) {
                    for (const auto& v : grid.points()) {
                        ++result.checks;
                        Rational r = t_relation_residual(rel, d.a, d.b, v.a, v.b, table);
                        if (!r.is_zero()) {
                            result.failure = SuiteFailure{std::string(to_string(rel)),
                                                          indices(d.a, d.b, v.a, v.b, n), describe(params), r};
                            return;
                        }
                    }
                }
            }
        }
    }
}

void griffiths_suite(SuiteResult& result, int N, std::uint64_t seed, int samples) {
    using namespace griffiths;
    ParamSampler sampler(seed);
    for (int s = 0; s < samples; ++s) {
        const ParamSet drawn = draw_griffiths(sampler, s, N);
        for (int n = 1; n <= N; ++n) {
            const ParamSet params(drawn.p1(), drawn.p2(), drawn.p3(), drawn.lambda(), n);
            const GriffithsTable table(params);
            const TriangleGrid& grid = table.grid();
            for (auto rel : kAllGRelations) {
                for (const auto& d : grid.points()) {
                    for (const auto& v : grid.points()) {
                        ++result.checks;
                        Rational r = g_relation_residual(rel, d.a, d.b, v.a, v.b, table);
                        if (!r.is_zero()) {
                            result.failure = SuiteFailure{std::string(to_string(rel)),
                                                          indices(d.a, d.b, v.a, v.b, n), describe(params), r};
                            return;
                        }
                    }
                }
            }
            // The two Tratnik rewrites must reproduce the direct-sum table.
            for (auto method : {EvalMethod::ViaTratnikXY, EvalMethod::ViaTratnikYX}) {
                for (const auto& d : grid.points()) {
                    for (const auto& v : grid.points()) {
                        ++result.checks;
                        Rational r = g_eval(d.a, d.b, v.a, v.b, params, method) - table.at(d.a, d.b, v.a, v.b);
                        if (!r.is_zero()) {
                            result.failure = SuiteFailure{std::string(to_string(method)),
                                                          indices(d.a, d.b, v.a, v.b, n), describe(params), r};
                            return;
                        }
                    }
                }
            }
        }
    }
}

void duality_suite(SuiteResult& result, int N, std::uint64_t seed, int samples) {
    ParamSampler sampler(seed);
    for (int s = 0; s < samples; ++s) {
        const griffiths::ParamSet drawn = draw_griffiths(sampler, s, N);
        for (int n = 1; n <= N; ++n) {
            const krawtchouk::KrawtchoukParams kp(drawn.p1(), n);
            for (int i = 0; i <= n; ++i) {
                for (int x = 0; x <= n; ++x) {
                    ++result.checks;
                    Rational r = krawtchouk::k_duality_residual(i, x, kp);
                    if (!r.is_zero()) {
                        result.failure = SuiteFailure{"KrawtchoukDuality",
                                                      "i=" + std::to_string(i) + " x=" + std::to_string(x) +
                                                          " N=" + std::to_string(n),
                                                      "p=" + drawn.p1().to_string(), r};
                        return;
                    }
                }
            }
            const griffiths::ParamSet params(drawn.p1(), drawn.p2(), drawn.p3(), drawn.lambda(), n);
            const TriangleGrid grid(n);
            for (const auto& d : grid.points()) {
                for (const auto& v : grid.points()) {
                    ++result.checks;
                    Rational r = griffiths::g_duality_residual(d.a, d.b, v.a, v.b, params);
                    if (!r.is_zero()) {
                        result.failure = SuiteFailure{"GriffithsDuality", indices(d.a, d.b, v.a, v.b, n),
                                                      describe(params), r};
                        return;
                    }
                }
            }
        }
    }
}

void operators_suite(SuiteResult& result, int N, std::uint64_t seed, int samples) {
    using namespace operators;
    ParamSampler sampler(seed);
    for (int s = 0; s < samples; ++s) {
        const griffiths::ParamSet drawn = draw_griffiths(sampler, s, N);
        for (int n = 1; n <= N; ++n) {
            const std::string size = "N=" + std::to_string(n);
            const tratnik::TratnikParams tp(drawn.p1(), drawn.p2(), n);
            const griffiths::ParamSet gp(drawn.p1(), drawn.p2(), drawn.p3(), drawn.lambda(), n);
            const tratnik::TratnikTable ttable(tp);
            const griffiths::GriffithsTable gtable(gp);

            for (auto kind : kAllOperatorKinds) {
                ++result.checks;
                const bool t = is_tratnik(kind);
                const StencilOperator op = t ? build_operator(kind, tp) : build_operator(kind, gp);
                Rational r = eigen_residual(op, t ? ttable.values() : gtable.values(), matched_eigenvalue(kind));
                if (!r.is_zero()) {
                    result.failure = SuiteFailure{std::string(to_string(kind)), size, t ? describe(tp) : describe(gp), r};
                    return;
                }
            }

            // Commutation is only claimed where the joint eigenbasis is complete.
            const TriangleGrid grid(n);
            for (const auto& pt : grid.points()) {
                if (griffiths::biorth_diagonal(pt.a, pt.b, gp).is_zero()) {
                    result.failure = SuiteFailure{"BiorthDiagonal", size + " at i=" + std::to_string(pt.a) +
                                                                        " j=" + std::to_string(pt.b),
                                                  describe(gp), Rational(0)};
                    return;
                }
            }
            const std::pair<OperatorKind, OperatorKind> pairs[] = {
                {OperatorKind::GriffithsRecX, OperatorKind::GriffithsRecY},
                {OperatorKind::GriffithsDiffI, OperatorKind::GriffithsDiffJ},
            };
            for (const auto& [a, b] : pairs) {
                ++result.checks;
                const StencilOperator A = build_operator(a, gp);
                const StencilOperator B = build_operator(b, gp);
                if (!commutator_is_zero(A, B)) {
                    Rational r = (A.apply(B.to_dense()) - B.apply(A.to_dense())).max_abs();
                    result.failure = SuiteFailure{"Commutator(" + std::string(to_string(a)) + "," +
                                                      std::string(to_string(b)) + ")",
                                                  size, describe(gp), r};
                    return;
                }
            }
        }
    }
}

}  // namespace

SuiteResult run_suite(std::string_view suite, int N, std::uint64_t seed, int samples) {
    SuiteResult result;
    result.suite = std::string(suite);
    if (suite == "krawtchouk-relations") {
        krawtchouk_relations(result, N, seed, samples);
    } else if (suite == "tratnik") {
        tratnik_suite(result, N, seed, samples);
    } else if (suite == "griffiths") {
        griffiths_suite(result, N, seed, samples);
    } else if (suite == "duality") {
        duality_suite(result, N, seed, samples);
    } else if (suite == "operators") {
        operators_suite(result, N, seed, samples);
    } else {
        throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
    }
    return result;
}

}  // namespace lgriffiths::cli
