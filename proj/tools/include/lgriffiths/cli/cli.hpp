#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>

namespace lgriffiths::cli {

enum class Command { Eval, Table, Gram, Check, Operators, Oscillator };
enum class Family { Krawtchouk, Tratnik, Griffiths };
enum class Format { Csv, Json };

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitConfig = 2;

/// Everything one invocation needs. Rational parameters stay as the strings
/// the user typed until run() validates them all up front.
struct RunConfig {
    Command command = Command::Eval;
    Family family = Family::Griffiths;

    std::optional<std::string> p;
    std::optional<std::string> p1;
    std::optional<std::string> p2;
    std::optional<std::string> p3;
    std::optional<std::string> lambda;
    std::optional<int> N;

    int i = 0;
    int j = 0;
    int x = 0;
    int y = 0;
    std::string method = "direct";

    std::string gram_kind = "biorth";
    std::string weight = "corrected";

    std::string suite;
    std::uint64_t seed = 1;
    int samples = 10;

    std::string operator_kind;
    bool dump = false;

    double phi = 0.4;
    double theta = 0.9;
    double psi = 1.1;
    std::string varphi = "0";
    bool verify = false;
    double tolerance = 1e-8;

    Format format = Format::Json;
    std::optional<std::string> out;
};

/// Parses argv into a RunConfig. On --help or a parse error, returns the
/// exit code to use after printing to out/err.
std::variant<RunConfig, int> parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Executes a config. Writes the artifact to config.out (or out), diagnostics to err.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// The reproducer line printed with every failure.
std::string reproducer(const RunConfig& config);

}  // namespace lgriffiths::cli
