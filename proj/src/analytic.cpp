#include "ptau/analytic.hpp"

#include <algorithm>
#include <stdexcept>

#include "ptau/errors.hpp"
#include "ptau/recursion.hpp"

namespace ptau {

namespace {

/// tau^(k)(z), k = 0 .. order, by Horner's scheme on the polynomial and its
/// formal derivatives.
std::vector<Complex> jet(const EvaluationContext& ctx, const Complex& z, unsigned order) {
    const auto& c = ctx.coeffs();
    const std::size_t degree = c.size();  // tau = sum c[n] z^(n+1)
    std::vector<Complex> pd(order + 1);
    // Coefficient of z^i is c[i-1] for i >= 1 and 0 for i = 0.
    pd[0] = c[degree - 1];
    for (std::size_t i = degree; i-- > 0;) {
        const unsigned top = static_cast<unsigned>(std::min<std::size_t>(order, degree - i));
        for (unsigned k = top; k >= 1; --k) pd[k] = pd[k] * z + pd[k - 1];
        pd[0] = pd[0] * z;
        if (i >= 1) pd[0] += c[i - 1];
    }
    Real fact(1);
    for (unsigned k = 2; k <= order; ++k) {
        fact *= k;
        pd[k] *= fact;
    }
    return pd;
}

bool complex_zero(const Complex& z) { return is_zero(z); }

void check_not_near_zero(const EvaluationContext& ctx, const Complex& value, const char* what) {
    if (abs(value) < pow2(-static_cast<long>(ctx.precision_bits() / 2)))
        throw NearZeroDivide(std::string(what) + " vanishes to working precision");
}

/// Derivatives of log tau from the ratios r_k = tau^(k)/tau (cumulant formulas).
struct LogDerivatives {
    Complex s0, s1, s2, s3, s4;  // Sigma, Sigma', ..., Sigma''''
};

LogDerivatives log_derivatives(const EvaluationContext& ctx, const Complex& z) {
    std::vector<Complex> t = jet(ctx, z, 5);
    check_not_near_zero(ctx, t[0], "tau(z)");
    std::vector<Complex> r(6);
    for (int k = 1; k <= 5; ++k) r[k] = t[k] / t[0];
    const Complex& m1 = r[1];
    const Complex& m2 = r[2];
    const Complex& m3 = r[3];
    const Complex& m4 = r[4];
    const Complex& m5 = r[5];
    Complex m1_2 = m1 * m1;
    Complex m1_3 = m1_2 * m1;
    LogDerivatives d;
    d.s0 = m1;
    d.s1 = m2 - m1_2;
    d.s2 = m3 - Real(3) * m1 * m2 + Real(2) * m1_3;
    d.s3 = m4 - Real(4) * m1 * m3 - Real(3) * m2 * m2 + Real(12) * m1_2 * m2 - Real(6) * m1_3 * m1;
    d.s4 = m5 - Real(5) * m1 * m4 - Real(10) * m2 * m3 + Real(20) * m1_2 * m3 + Real(30) * m1 * m2 * m2 -
           Real(60) * m1_3 * m2 + Real(24) * m1_3 * m1_2;
    return d;
}

bool p2_regime(const EvaluationContext& ctx) { return ctx.eta_is_zero() && !ctx.kappa_is_zero(); }
bool p1_regime(const EvaluationContext& ctx) {
    return ctx.eta_is_zero() && ctx.kappa_is_zero() && !ctx.lambda_is_zero();
}

}  // namespace

EvaluationContext::EvaluationContext(unsigned bits, ParameterSet<Complex> params, std::vector<Complex> coeffs,
                                     std::optional<Params> exact)
    : precision_bits_(bits), params_(std::move(params)), coeffs_(std::move(coeffs)), exact_(std::move(exact)) {
    if (bits < 64) throw std::invalid_argument("EvaluationContext: precision must be at least 64 bits");
    if (coeffs_.empty()) throw std::invalid_argument("EvaluationContext: empty series");
}

EvaluationContext::EvaluationContext(const CoefficientSeries& series, unsigned precision_bits)
    : precision_bits_(precision_bits), exact_(series.params) {
    if (precision_bits < 64) throw std::invalid_argument("EvaluationContext: precision must be at least 64 bits");
    if (series.coeffs.empty()) throw std::invalid_argument("EvaluationContext: empty series");
    PrecisionScope scope(precision_bits);
    params_ = lift<Complex>(series.params);
    coeffs_.reserve(series.coeffs.size());
    for (const Rational& c : series.coeffs) coeffs_.push_back(to_complex(c));
}

EvaluationContext EvaluationContext::from_complex_params(const ParameterSet<Complex>& params, std::size_t order,
                                                         unsigned precision_bits,
                                                         std::optional<unsigned> guard_bits) {
    const unsigned guard = guard_bits ? *guard_bits : default_guard_bits(order);
    std::vector<Complex> wide;
    {
        PrecisionScope scope(precision_bits + guard);
        const auto widen = [](const Complex& z) { return Complex(Real(z.re), Real(z.im)); };
        const ParameterSet<Complex> p{widen(params.eta), widen(params.kappa), widen(params.lambda), widen(params.g2),
                                      widen(params.g3)};
        wide = taylor_coefficients(p, order);
    }
    PrecisionScope scope(precision_bits);
    std::vector<Complex> c;
    c.reserve(wide.size());
    for (const Complex& z : wide) c.push_back(round_to_current(z));
    const ParameterSet<Complex> p{round_to_current(params.eta), round_to_current(params.kappa),
                                  round_to_current(params.lambda), round_to_current(params.g2),
                                  round_to_current(params.g3)};
    return EvaluationContext(precision_bits, p, std::move(c), std::nullopt);
}

unsigned EvaluationContext::default_guard_bits(std::size_t order) {
    return static_cast<unsigned>(32 + (5 * order) / 2);
}

bool EvaluationContext::eta_is_zero() const { return exact_ ? sgn(exact_->eta) == 0 : complex_zero(params_.eta); }
bool EvaluationContext::kappa_is_zero() const {
    return exact_ ? sgn(exact_->kappa) == 0 : complex_zero(params_.kappa);
}
bool EvaluationContext::lambda_is_zero() const {
    return exact_ ? sgn(exact_->lambda) == 0 : complex_zero(params_.lambda);
}

JetValue eval_jet(const EvaluationContext& ctx, const Complex& z, unsigned jet_order) {
    if (jet_order > 4) throw std::invalid_argument("eval_jet: jet order must be at most 4");
    PrecisionScope scope(ctx.precision_bits());
    return {z, jet(ctx, z, jet_order)};
}

DegenerateFunctions sigma_values(const EvaluationContext& ctx, const Complex& z,
                                 const std::optional<Complex>& mu_offset) {
    PrecisionScope scope(ctx.precision_bits());
    LogDerivatives d = log_derivatives(ctx, z);
    DegenerateFunctions out;
    out.point = z;
    out.sigma_big = d.s0;
    out.sigma_big_d1 = d.s1;
    out.sigma_big_d2 = d.s2;
    out.sigma_big_d3 = d.s3;
    if (mu_offset) out.sigma = d.s0 + *mu_offset * z;
    return out;
}

DegenerateFunctions degenerate_functions(const EvaluationContext& ctx, const Complex& z, int ell_branch) {
    if (ell_branch != 1 && ell_branch != -1) throw std::invalid_argument("ell branch must be +1 or -1");
    const bool p2 = p2_regime(ctx);
    const bool p1 = p1_regime(ctx);
    if (!p2 && !p1)
        throw WrongRegime("degenerate functions need eta = 0 and kappa != 0, or eta = kappa = 0 and lambda != 0");

    PrecisionScope scope(ctx.precision_bits());
    LogDerivatives d = log_derivatives(ctx, z);
    DegenerateFunctions out;
    out.point = z;
    out.sigma_big = d.s0;
    out.sigma_big_d1 = d.s1;
    out.sigma_big_d2 = d.s2;
    out.sigma_big_d3 = d.s3;

    const auto& prm = ctx.params();
    if (p2) {
        Complex mu = ctx.exact_params() ? to_complex(-ctx.exact_params()->lambda / ctx.exact_params()->kappa)
                                        : Complex(-prm.lambda / prm.kappa);
        Complex ell2 = Real(16) * mu * mu * mu - Real(4) * prm.g2 * mu - Real(4) * prm.g3;
        Complex ell = sqrt(ell2);
        if (ell_branch < 0) ell = -ell;
        Complex v = Real(2) * (d.s1 + mu);
        Complex v1 = Real(2) * d.s2;
        Complex v2 = Real(2) * d.s3;
        check_not_near_zero(ctx, v, "v(z)");
        // u = N / D with N = v' + ell, D = 2v.
        Complex num = v1 + ell;
        Complex den = Real(2) * v;
        Complex u = num / den;
        Complex u1 = (v2 * den - num * (Real(2) * v1)) / (den * den);
        out.mu = mu;
        out.ell = ell;
        out.v = v;
        out.v_d1 = v1;
        out.v_d2 = v2;
        out.u = u;
        out.u_d1 = u1;
        // u'' from (N''D - N D'')/D^2 - 2 D' (N'D - N D')/D^3, N'' = v''' = 2 Sigma''''.
        Complex v3 = Real(2) * d.s4;
        Complex dd1 = Real(2) * v1;
        Complex dd2 = Real(2) * v2;
        out.u_d2 = (v3 * den - num * dd2) / (den * den) - Real(2) * dd1 * (v2 * den - num * dd1) / (den * den * den);
    }
    if (p1) {
        out.w = -d.s1;
        out.w_d2 = -d.s3;
    }
    return out;
}

std::map<std::string, Complex> ode_residuals(const EvaluationContext& ctx, const Complex& z, int ell_branch) {
    PrecisionScope scope(ctx.precision_bits());
    const auto& p = ctx.params();
    LogDerivatives d = log_derivatives(ctx, z);
    std::map<std::string, Complex> out;

    Complex zs1_minus_s = z * d.s1 - d.s0;
    out["bsig"] = d.s2 * d.s2 - p.eta * zs1_minus_s * zs1_minus_s +
                  Real(2) * (p.kappa * d.s1 - p.lambda) * zs1_minus_s + Real(4) * d.s1 * d.s1 * d.s1 -
                  p.g2 * d.s1 + p.g3;
    out["third"] = d.s3 + Real(6) * d.s1 * d.s1 - z * (p.eta * z - Real(2) * p.kappa) * d.s1 +
                   (p.eta * z - p.kappa) * d.s0 - p.lambda * z - p.g2 / Complex(2);

    if (p2_regime(ctx) || p1_regime(ctx)) {
        DegenerateFunctions f = degenerate_functions(ctx, z, ell_branch);
        if (f.v) {
            const Complex& v = *f.v;
            const Complex& mu = *f.mu;
            const Complex& ell = *f.ell;
            Complex shift = p.kappa * z - Real(6) * mu;  // kappa z - 6 mu
            out["p34"] = v * *f.v_d2 - *f.v_d1 * *f.v_d1 / Complex(2) + Real(2) * v * v * v + shift * v * v +
                         ell * ell / Complex(2);
            const Complex& u = *f.u;
            out["p2"] = *f.u_d2 - Real(2) * u * u * u - shift * u - ell + p.kappa / Complex(2);
            out["p34sub"] = v + *f.u_d1 + u * u + shift / Complex(2);
        }
        if (f.w) {
            const Complex& w = *f.w;
            out["p1"] = *f.w_d2 - Real(6) * w * w + p.lambda * z + p.g2 / Complex(2);
        }
    }
    return out;
}

std::optional<Real> coefficient_radius(const EvaluationContext& ctx) {
    PrecisionScope scope(ctx.precision_bits());
    const auto& c = ctx.coeffs();
    for (std::size_t k = c.size(); k-- > 1;) {
        if (is_zero(c[k])) continue;
        Real m = abs(c[k]);
        return boost::multiprecision::pow(m, Real(-1) / Real(k + 1));
    }
    return std::nullopt;
}

std::optional<Real> truncation_estimate(const EvaluationContext& ctx, const Complex& z,
                                        const std::optional<Real>& trust_radius) {
    PrecisionScope scope(ctx.precision_bits());
    const auto& c = ctx.coeffs();
    const std::size_t N = c.size() - 1;
    const Real r = abs(z);
    Real term(0);
    for (std::size_t k = (N >= 2 ? N - 2 : 0); k <= N; ++k) {
        Real t = abs(c[k]) * boost::multiprecision::pow(r, Real(k + 1));
        if (t > term) term = t;
    }
    std::optional<Real> radius = trust_radius ? trust_radius : coefficient_radius(ctx);
    if (!radius) return term;  // polynomial tau: nothing beyond the retained terms
    if (r >= *radius) return std::nullopt;
    return term / (Real(1) - r / *radius);
}

std::optional<std::size_t> weierstrass_compare(const Rational& g2, const Rational& g3, std::size_t N,
                                               std::span<const Rational> reference) {
    const CoefficientSeries s = tau_coefficients(presets::weierstrass(g2, g3), N);
    for (std::size_t n = 0; n <= N; ++n) {
        if (n >= reference.size() || s.coeffs[n] != reference[n]) return n;
    }
    return std::nullopt;
}

nlohmann::json to_json(const Complex& z, unsigned digits) {
    return {{"re", to_decimal(z.re, digits)}, {"im", to_decimal(z.im, digits)}};
}

}  // namespace ptau
