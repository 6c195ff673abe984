#pragma once

// Exact-rational Taylor coefficients of the tau-function around a zero,
// the order-3 symmetric integer sequence and exact residual checks.

#include <cstddef>
#include <vector>

#include "json.hpp"

#include "ptau/params.hpp"
#include "ptau/rational.hpp"

namespace ptau {

/// tau(z) = sum_{n=0}^{order} coeffs[n] z^(n+1), normalised so that
/// tau(z) = z + O(z^4).
struct CoefficientSeries {
    Params params;
    std::size_t order = 0;
    std::vector<Rational> coeffs;

    /// Coefficients of z^0 .. z^(order+1) (with a leading zero).
    std::vector<Rational> polynomial() const;
};

CoefficientSeries tau_coefficients(const Params& params, std::size_t order);

/// Same recursion with C_6 forced to `c6`. The result solves the bilinear
/// equation for every c6, and the quartic one with g3 replaced by
/// g3 - 840 (c6 - kappa^2/5040 + g3/840).
CoefficientSeries tau_coefficients_with_c6(const Params& params, std::size_t order, const Rational& c6);

/// Right-hand side of the recursion at the resonance n = 6, in the C-scaling.
/// Zero for every parameter set.
Rational resonance_rhs(const Params& params);

/// Â_j = C_{3j} (3j+1)! for parameters (0, 1, 0, 0, g3).
struct SymmetricSeries {
    Rational g3;
    std::size_t order = 0;
    std::vector<Rational> a_hat;
};

/// Throws SymmetryViolation if a coefficient off the lattice n = 3j is nonzero.
SymmetricSeries symmetric_coefficients(const Rational& g3, std::size_t J);

struct DivisibilityReport {
    Integer modulus;
    std::size_t start = 0;
    std::vector<Integer> residues;  // Â_j mod modulus, j = start .. order, in [0, modulus)
    bool all_zero = true;
};

/// Throws NonIntegral if some Â_j is not an integer.
DivisibilityReport divisibility_scan(const SymmetricSeries& series, const Integer& modulus, std::size_t start);

/// Coefficients of z^0 .. z^(N-3) of
///   D^4 tau.tau - z(eta z - 2 kappa) D^2 tau.tau + 2(eta z - kappa) tau tau' - (2 lambda z + g2) tau^2.
std::vector<Rational> bilinear_residual(const CoefficientSeries& series);

/// Coefficients of z^0 .. z^(N-3) of the degree-four equation for tau,
/// including the g3 tau^4 term.
std::vector<Rational> quartic_residual(const CoefficientSeries& series);

bool is_zero_residual(const std::vector<Rational>& residual);

nlohmann::json to_json(const Params& params);
nlohmann::json to_json(const CoefficientSeries& series);
CoefficientSeries coefficient_series_from_json(const nlohmann::json& j);

}  // namespace ptau
