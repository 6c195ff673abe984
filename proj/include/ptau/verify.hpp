#pragma once

// Self-check suites run by `ptau verify`. Each check carries a name, a
// verdict and a one-line detail; a suite passes iff all its checks do.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "ptau/params.hpp"
#include "ptau/rational.hpp"
#include "ptau/symbolic.hpp"

namespace ptau {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    bool passed() const;
};

struct SuiteOptions {
    /// Extra parameter set checked alongside the random ones.
    std::optional<Params> params;
    /// Suite-specific size: residual order, scan length J, symbolic degree
    /// or exact-expansion length. Defaults per suite when absent.
    std::optional<std::size_t> order;
    std::optional<Integer> modulus;
    std::optional<std::size_t> start;
    unsigned precision_bits = 256;
    std::size_t random_sets = 100;
    std::uint64_t seed = 20240611;
};

/// paper-table, resonance, residuals, symmetric, divisibility, integrality,
/// rational-solution.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options = {});

/// Reference P_0 .. P_9.
std::vector<WeightedPolynomial> reference_table();

/// Reference A^_0 .. A^_11 of the symmetric family (kappa = 1, g3 = 0).
std::vector<Integer> reference_symmetric_values();

/// Rational with numerator in [-max_num, max_num] and denominator in [1, max_den].
Rational random_rational(std::mt19937_64& rng, int max_num = 50, int max_den = 20);
Params random_params(std::mt19937_64& rng);

nlohmann::json to_json(const SuiteReport& report);

}  // namespace ptau
