#pragma once

// Re-expansion of tau about one of its zeros. If tau(Omega) = 0 then
//   tau(z + Omega) = A exp(B z + mu~ z^2 / 2) tau~(z)
// where tau~ is the tau-function with the same eta and transformed
// kappa, lambda, g2, g3. Repeating the shift tiles the pole field.

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ptau/analytic.hpp"
#include "ptau/mp.hpp"
#include "ptau/params.hpp"
#include "ptau/roots.hpp"

namespace ptau {

struct ShiftData {
    Complex omega;
    Complex a_gauge;   // tau'(Omega)
    Complex b_gauge;   // tau''(Omega) / (2 tau'(Omega))
    Complex mu_tilde;  // Omega (Omega eta - 2 kappa) / 12
    ParameterSet<Complex> new_params;
};

struct ShiftOptions {
    /// NotAZero unless |tau(Omega)| <= zero_tol * sum_n |C_n| |Omega|^(n+1).
    double zero_tol = 1e-12;
    /// DegenerateZero if |tau'(Omega)| is below this fraction of the
    /// corresponding absolute sum. Default: 2^(-precision/2).
    std::optional<Real> derivative_tol;
    /// NotAZero if |Omega| exceeds it (the value of tau there is not certified).
    std::optional<Real> trust_radius;
};

ShiftData shift_parameters(const EvaluationContext& ctx, const Complex& omega, const ShiftOptions& options = {});

/// |Omega (Omega eta - 2 kappa)/12 - (tau'''/(3 tau') - tau''^2/(4 tau'^2))| at Omega.
Real mu_consistency(const EvaluationContext& ctx, const Complex& omega, const ShiftOptions& options = {});

struct ShiftVerification {
    Real max_residual;  // max over samples of |tau(z+Omega) - A exp(Bz + mu~ z^2/2) tau~(z)| / |A|
    Real bound;         // max over samples of the matching error budget
    std::size_t worst_sample = 0;
    bool within_bound() const { return max_residual <= bound; }
};

/// Builds tau~ over complex coefficients at the context's order and
/// precision, then checks the functional equation at each sample. The
/// bound adds the truncation estimates of both sides, the uncertainty of
/// Omega implied by |tau(Omega)|, and a rounding floor of 2^(-precision/2).
ShiftVerification verify_shift(const EvaluationContext& ctx, const ShiftData& shift,
                               const std::vector<Complex>& sample_points);

struct PolePoint {
    Complex location;
    unsigned depth = 0;
    std::vector<std::size_t> parent_chain;  // indices of the expansion centres, origin first
    bool trusted = true;
};

struct PoleFieldOptions {
    /// Truncation degrees for the origin series and for re-centred series.
    std::vector<std::size_t> origin_orders{200, 400, 601};
    std::vector<std::size_t> center_orders{60, 100, 150};
    unsigned precision_bits = 256;
    double stability_tol = 1e-10;
    /// Only zeros within this distance of the origin are used as new centres.
    std::optional<Real> center_radius;
    /// Keep the untrusted zeros of the origin scan, flagged trusted = false.
    bool include_untrusted = false;
    ShiftOptions shift;
};

struct PoleField {
    std::vector<PolePoint> points;    // points[0] is the origin
    std::vector<std::string> errors;  // one entry per failed branch
};

/// Breadth-first tiling to the given depth. Depth 0 is the direct scan of
/// the origin series. New points closer than 1e-8 times the local zero
/// spacing to an existing point are merged into it.
PoleField pole_field(const Params& params, unsigned depth, const PoleFieldOptions& options = {});

/// Columns re, im, depth, parent_chain, trusted.
void write_pole_field_csv(std::ostream& out, const PoleField& field, unsigned digits);

nlohmann::json to_json(const ShiftData& shift, unsigned digits);

}  // namespace ptau
