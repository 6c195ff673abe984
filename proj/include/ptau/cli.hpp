#pragma once

// Command-line front end. `run` executes a parsed configuration; `run_cli`
// parses argv (and an optional key=value config file) first.

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ptau/params.hpp"
#include "ptau/rational.hpp"

namespace ptau::cli {

enum class Command { coeffs, symbolic, zeros, shift, pole_field, verify, degenerate };
enum class OutputFormat { json, csv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
    Command command = Command::coeffs;
    Params params;
    std::optional<std::size_t> order;
    std::vector<std::size_t> orders;
    unsigned precision_bits = 256;
    /// Default: csv for zeros and pole-field, json otherwise.
    std::optional<OutputFormat> format;
    std::optional<std::string> output_path;  // standard output when absent
    std::string suite = "all";
    unsigned depth = 1;
    std::optional<Integer> modulus;
    std::optional<std::size_t> start;
    /// Evaluation point (degenerate) or zero to shift about (shift), as
    /// "re" or "re,im".
    std::optional<std::string> at;
};

/// Exit status per the kExit* constants; the artifact goes to the output
/// path or `out`, diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses flags, resolves presets and the config file, then calls run().
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

std::optional<Command> parse_command(const std::string& name);
const char* to_string(Command command);

/// Reads "p/q" or a decimal; throws ParseError.
Params parse_params(const std::optional<std::string>& eta, const std::optional<std::string>& kappa,
                    const std::optional<std::string>& lambda, const std::optional<std::string>& g2,
                    const std::optional<std::string>& g3, const std::optional<std::string>& preset);

}  // namespace ptau::cli
