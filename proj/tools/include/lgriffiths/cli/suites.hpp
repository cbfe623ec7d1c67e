#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "lgriffiths/rational.hpp"

namespace lgriffiths::cli {

/**
 * Deterministic rational sampler: numerator in [-97, 97], denominator in
 * [1, 97], never 0 or 1. Uses mt19937_64 with plain modular reduction so the
 * stream is identical across standard libraries.
 */
class ParamSampler {
public:
    explicit ParamSampler(std::uint64_t seed) : rng_(seed) {}

    Rational next();
    /// next() restricted to negative values.
    Rational next_negative();

private:
    long uniform(long lo, long hi);
    std::mt19937_64 rng_;
};

struct SuiteFailure {
    std::string check;    // relation or operator id
    std::string indices;  // e.g. "i=1 j=0 x=2 y=1 N=3"
    std::string params;   // e.g. "p1=1/2 p2=-3/7"
    Rational residual;
};

struct SuiteResult {
    std::string suite;
    std::size_t checks = 0;
    std::optional<SuiteFailure> failure;
};

inline constexpr std::string_view kSuiteNames[] = {"krawtchouk-relations", "tratnik", "griffiths", "duality",
                                                   "operators"};

/**
 * Runs one exact residual suite on sizes 1..N with `samples` random parameter
 * draws, stopping at the first nonzero residual. Griffiths draws include a
 * negative lambda on every other sample. Throws std::invalid_argument for an
 * unknown suite name.
 */
SuiteResult run_suite(std::string_view suite, int N, std::uint64_t seed, int samples);

}  // namespace lgriffiths::cli
