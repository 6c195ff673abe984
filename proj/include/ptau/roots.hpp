#pragma once

// Zeros of truncated tau polynomials: Aberth-Ehrlich simultaneous iteration,
// cross-truncation stability filtering and order-3 orbit grouping.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "ptau/analytic.hpp"
#include "ptau/mp.hpp"
#include "ptau/params.hpp"

namespace ptau {

struct RootFinderOptions {
    unsigned precision_bits = 256;
    unsigned max_iters = 500;
    /// Backward-error tolerance: a root z is accepted once
    /// |P(z)| <= residual_tol * sum_k |a_k| |z|^k. Defaults to
    /// (16 deg + 64) 2^-precision_bits.
    std::optional<Real> residual_tol;
    std::uint64_t seed = 0x5eed;
};

/// All roots of a_0 + a_1 z + ... + a_n z^n (with multiplicity). Roots at
/// the origin are split off exactly before iterating. Throws NoConvergence
/// listing unconverged indices.
std::vector<Complex> find_roots(std::span<const Complex> poly, const RootFinderOptions& options = {});

/// (|P(z)|, sum_k |a_k| |z|^k) by Horner's scheme.
std::pair<Real, Real> residual_and_scale(std::span<const Complex> poly, const Complex& z);

struct ZeroEstimate {
    Complex location;
    Real residual;   // |P(location)| for the highest-order truncation
    Real stability;  // distance to the matched root one order down; +inf if unmatched
    bool trusted = false;
    std::size_t source_order = 0;     // degree of the truncation polynomial
    std::vector<Real> match_history;  // match distance at each lower order, top-down
};

struct TrustRadiusPolicy {
    /// Automatic: the smallest modulus among unstable roots of the top
    /// truncation (beyond it the polynomial stops tracking tau).
    static TrustRadiusPolicy automatic() { return {}; }
    static TrustRadiusPolicy fixed(Real r) { return {std::move(r)}; }
    std::optional<Real> radius;
};

struct ZeroSearchOptions {
    /// Polynomial degrees D of the truncations P_D(z) = sum_{n < D} C_n z^(n+1).
    std::vector<std::size_t> orders;
    /// Relative: stable iff the match distance <= stability_tol * |z|.
    double stability_tol = 1e-10;
    TrustRadiusPolicy trust = TrustRadiusPolicy::automatic();
    RootFinderOptions root_finder;
};

struct ZeroSearchResult {
    std::vector<ZeroEstimate> zeros;  // nonzero roots of the top truncation, by modulus
    std::optional<Real> trust_radius;
};

/// Nonzero zeros of the truncations of tau for exact parameters. For the
/// order-3 symmetric family the roots are found in y = z^3 and the cube
/// roots taken.
ZeroSearchResult trusted_zeros(const Params& params, const ZeroSearchOptions& options);

/// Same for a series given by (complex) coefficients C_n of z^(n+1).
/// `order3_symmetric` selects the y = z^3 reduction.
ZeroSearchResult trusted_zeros(std::span<const Complex> coeffs, const ZeroSearchOptions& options,
                               bool order3_symmetric = false);

struct OrbitGrouping {
    std::vector<std::array<std::size_t, 3>> orbits;  // indices into the zero list: {Z, wZ, w^2 Z}
    Real max_defect;
};

/// Groups the trusted zeros into orbits {Z, wZ, w^2 Z}, w = exp(2 pi i/3).
/// Partners are accepted within tol * max(1, |Z|). Throws OrbitIncomplete
/// if a trusted zero lacks a partner.
OrbitGrouping symmetry_triples(const std::vector<ZeroEstimate>& zeros, const Real& tol);

/// Columns re, im, residual, stability, trusted, source_order.
void write_zeros_csv(std::ostream& out, const std::vector<ZeroEstimate>& zeros, unsigned digits);

}  // namespace ptau
