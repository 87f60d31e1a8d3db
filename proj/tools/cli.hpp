#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace brt::cli {

enum ExitCode { kOk = 0, kVerificationFailed = 1, kInvalidInput = 2, kResourceGuard = 3 };

struct RunConfig {
    std::string command;
    std::optional<int> n;
    std::optional<int> nA, nB;
    std::string b = "1/2";
    std::optional<double> t;
    double c = 0.0;
    std::uint64_t samples = 100000;
    std::uint64_t seed = 1;
    double epsilon = 0.0;
    double tol = 1e-9;
    int p_max = 3;
    std::string lambda, mu, nu;
    std::string method = "both";
    std::string format = "csv";
    std::string output;
    unsigned threads = 0;
};

const char* version();

// Parses argv into a config. Returns an exit code when parsing ends the run
// (help, version or a usage error).
std::optional<int> parse_args(int argc, const char* const* argv, RunConfig& config, std::ostream& out,
                              std::ostream& err);

// Runs one subcommand. Writes to config.output if set, otherwise to out.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// "key=value" pairs in a fixed order; threads is left out since it never
// changes the output.
std::string echo_config(const RunConfig& config);

const std::vector<std::string>& subcommands();

}  // namespace brt::cli
