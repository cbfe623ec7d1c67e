#include <benchmark/benchmark.h>

#include "lgriffiths/griffiths.hpp"
#include "lgriffiths/krawtchouk.hpp"
#include "lgriffiths/operators.hpp"
#include "lgriffiths/oscillator.hpp"

namespace {

using lgriffiths::Rational;
namespace gr = lgriffiths::griffiths;

gr::ParamSet params(int N) { return gr::ParamSet(Rational(-2, 3), Rational(5, 4), Rational(3, 7), Rational(-3, 5), N); }

void BM_KrawtchoukGram(benchmark::State& state) {
    const lgriffiths::krawtchouk::KrawtchoukParams p(Rational(13, 29), static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(lgriffiths::krawtchouk::k_gram(p));
}
BENCHMARK(BM_KrawtchoukGram)->DenseRange(4, 12, 4);

void BM_GriffithsTable(benchmark::State& state) {
    const auto p = params(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(gr::GriffithsTable(p));
}
BENCHMARK(BM_GriffithsTable)->DenseRange(2, 8, 2);

void BM_GriffithsEvalMethod(benchmark::State& state) {
    const auto p = params(6);
    const auto method = gr::kAllEvalMethods[static_cast<std::size_t>(state.range(0))];
    for (auto _ : state) benchmark::DoNotOptimize(gr::g_eval(2, 1, 1, 3, p, method));
    state.SetLabel(std::string(gr::to_string(method)));
}
BENCHMARK(BM_GriffithsEvalMethod)->DenseRange(0, 2);

void BM_BiorthGram(benchmark::State& state) {
    const auto p = params(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(gr::g_biorth_gram(p));
}
BENCHMARK(BM_BiorthGram)->DenseRange(2, 8, 3)->Unit(benchmark::kMillisecond);

void BM_BuildOperator(benchmark::State& state) {
    const auto p = params(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(lgriffiths::operators::build_operator(lgriffiths::operators::OperatorKind::GriffithsRecX, p));
    }
}
BENCHMARK(BM_BuildOperator)->DenseRange(2, 8, 3);

void BM_OscillatorFit(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(lgriffiths::oscillator::fit_and_verify(0.4, 0.9, 1.1, {0.3, 0.0}, N));
    }
}
BENCHMARK(BM_OscillatorFit)->DenseRange(1, 5, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
