#pragma once

// Numeric evaluation of the truncated tau-function and of the functions
// derived from it: Sigma = (log tau)', v = 2(Sigma' + mu) and u for P_XXXIV /
// P_II, w = -Sigma' for P_I, plus floating residuals of the associated ODEs.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ptau/mp.hpp"
#include "ptau/params.hpp"
#include "ptau/series.hpp"

namespace ptau {

/// A truncated tau series held at a fixed working precision. Built either
/// from an exact series (coefficients correctly rounded) or from complex
/// parameters, as happens after re-centring at a zero.
class EvaluationContext {
public:
    static constexpr unsigned kDefaultPrecision = 256;

    explicit EvaluationContext(const CoefficientSeries& series, unsigned precision_bits = kDefaultPrecision);

    /// Runs the recursion over complex numbers and rounds the result to
    /// precision_bits. The convolution sums cancel heavily, so without guard
    /// bits the absolute error of C_n decays only geometrically and swamps
    /// the true coefficients at large n.
    static EvaluationContext from_complex_params(const ParameterSet<Complex>& params, std::size_t order,
                                                 unsigned precision_bits = kDefaultPrecision,
                                                 std::optional<unsigned> guard_bits = std::nullopt);
    /// 32 + 2.5 bits per retained order.
    static unsigned default_guard_bits(std::size_t order);

    unsigned precision_bits() const { return precision_bits_; }
    std::size_t order() const { return coeffs_.size() - 1; }
    /// coeffs()[n] multiplies z^(n+1).
    const std::vector<Complex>& coeffs() const { return coeffs_; }
    const ParameterSet<Complex>& params() const { return params_; }
    const std::optional<Params>& exact_params() const { return exact_; }

    bool eta_is_zero() const;
    bool kappa_is_zero() const;
    bool lambda_is_zero() const;

private:
    EvaluationContext(unsigned bits, ParameterSet<Complex> params, std::vector<Complex> coeffs,
                      std::optional<Params> exact);

    unsigned precision_bits_;
    ParameterSet<Complex> params_;
    std::vector<Complex> coeffs_;
    std::optional<Params> exact_;
};

struct JetValue {
    Complex point;
    std::vector<Complex> values;  // tau, tau', ... up to the requested order
};

/// tau and its first `jet_order` (<= 4) derivatives at z.
JetValue eval_jet(const EvaluationContext& ctx, const Complex& z, unsigned jet_order);

struct DegenerateFunctions {
    Complex point;
    Complex sigma_big, sigma_big_d1, sigma_big_d2, sigma_big_d3;
    std::optional<Complex> sigma;  // Sigma + mu_offset z
    // eta = 0, kappa != 0
    std::optional<Complex> mu;
    std::optional<Complex> ell;
    std::optional<Complex> v, v_d1, v_d2;
    std::optional<Complex> u, u_d1, u_d2;
    // eta = kappa = 0, lambda != 0
    std::optional<Complex> w, w_d2;
};

/// Sigma = tau'/tau and its first three derivatives; `sigma` is filled with
/// Sigma + mu_offset z when an offset is given. Throws NearZeroDivide when
/// |tau(z)| < 2^(-precision_bits/2).
DegenerateFunctions sigma_values(const EvaluationContext& ctx, const Complex& z,
                                 const std::optional<Complex>& mu_offset = std::nullopt);

/// mu = -lambda/kappa, ell = branch * sqrt(16 mu^3 - 4 g2 mu - 4 g3) and
/// v = 2(Sigma' + mu), u = (v' + ell)/(2v) when eta = 0, kappa != 0;
/// w = -Sigma' when eta = kappa = 0, lambda != 0. Anything else is WrongRegime.
DegenerateFunctions degenerate_functions(const EvaluationContext& ctx, const Complex& z, int ell_branch = +1);

/// Residuals keyed by equation: "bsig" and "third" always; "p34", "p2" and
/// "p34sub" when eta = 0, kappa != 0; "p1" when eta = kappa = 0, lambda != 0.
std::map<std::string, Complex> ode_residuals(const EvaluationContext& ctx, const Complex& z, int ell_branch = +1);

/// Radius suggested by the coefficients, |C_k|^(-1/(k+1)) for the last
/// nonzero C_k; infinite (nullopt) for a polynomial tau.
std::optional<Real> coefficient_radius(const EvaluationContext& ctx);

/// Geometric-tail estimate of the truncation error of tau at z: the largest
/// of the last three retained terms |C_k z^(k+1)| times 1/(1 - |z|/R). R is
/// the trust radius if given, else coefficient_radius(). Returns nullopt
/// (no bound) when |z| >= R.
std::optional<Real> truncation_estimate(const EvaluationContext& ctx, const Complex& z,
                                        const std::optional<Real>& trust_radius = std::nullopt);

/// Compares tau_coefficients((0,0,0,g2,g3), N) exactly with reference
/// Weierstrass sigma coefficients (reference[n] multiplies z^(n+1)); returns
/// the first mismatching index.
std::optional<std::size_t> weierstrass_compare(const Rational& g2, const Rational& g3, std::size_t N,
                                               std::span<const Rational> reference);

nlohmann::json to_json(const Complex& z, unsigned digits);

}  // namespace ptau
