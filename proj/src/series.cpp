#include "ptau/series.hpp"

#include <span>

#include "ptau/errors.hpp"
#include "ptau/hirota.hpp"
#include "ptau/recursion.hpp"

namespace ptau {

namespace {

using Poly = std::vector<Rational>;

Poly truncated(Poly p, std::size_t degree) {
    p.resize(degree + 1);
    return p;
}

Poly multiply(const Poly& a, const Poly& b, std::size_t degree) {
    Poly r(degree + 1);
    for (std::size_t i = 0; i < a.size() && i <= degree; ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size() && i + j <= degree; ++j) {
            if (sgn(b[j]) == 0) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

Poly multiply(std::initializer_list<const Poly*> factors, std::size_t degree) {
    auto it = factors.begin();
    Poly r = truncated(**it, degree);
    for (++it; it != factors.end(); ++it) r = multiply(r, **it, degree);
    return r;
}

Poly derivative(const Poly& p) {
    Poly d(p.size());
    for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * static_cast<unsigned long>(i);
    return d;
}

void add_scaled(Poly& acc, const Rational& s, const Poly& p) {
    for (std::size_t i = 0; i < acc.size() && i < p.size(); ++i) {
        if (sgn(p[i]) != 0) acc[i] += s * p[i];
    }
}

CoefficientSeries from_scaled(const Params& params, std::size_t order, std::vector<Rational> p) {
    Integer fact = 1;
    for (std::size_t n = 0; n < p.size(); ++n) {
        fact *= static_cast<unsigned long>(n + 1);
        if (sgn(p[n]) != 0) p[n] /= fact;
    }
    return {params, order, std::move(p)};
}

}  // namespace

std::vector<Rational> CoefficientSeries::polynomial() const {
    std::vector<Rational> t(coeffs.size() + 1);
    for (std::size_t n = 0; n < coeffs.size(); ++n) t[n + 1] = coeffs[n];
    return t;
}

CoefficientSeries tau_coefficients(const Params& params, std::size_t order) {
    return from_scaled(params, order, scaled_taylor_recursion(params, order).p);
}

CoefficientSeries tau_coefficients_with_c6(const Params& params, std::size_t order, const Rational& c6) {
    RecursionOptions<Rational> options;
    options.p6_override = c6 * 5040;
    return from_scaled(params, order, scaled_taylor_recursion(params, order, options).p);
}

Rational resonance_rhs(const Params& params) {
    RecursionOptions<Rational> options;
    options.enforce_resonance = false;
    Rational rhs = scaled_taylor_recursion(params, 6, options).rhs6;
    return rhs / factorial(7);
}

SymmetricSeries symmetric_coefficients(const Rational& g3, std::size_t J) {
    const Params params{0, 1, 0, 0, g3};
    const std::vector<Rational> p = scaled_taylor_recursion(params, 3 * J).p;
    SymmetricSeries out{g3, J, {}};
    out.a_hat.reserve(J + 1);
    for (std::size_t n = 0; n < p.size(); ++n) {
        if (n % 3 == 0) {
            out.a_hat.push_back(p[n]);
        } else if (sgn(p[n]) != 0) {
            throw SymmetryViolation("coefficient C_" + std::to_string(n) + " = " + to_string(p[n]) +
                                    " off the lattice 3j");
        }
    }
    return out;
}

DivisibilityReport divisibility_scan(const SymmetricSeries& series, const Integer& modulus, std::size_t start) {
    if (modulus <= 0) throw std::invalid_argument("divisibility_scan: modulus must be positive");
    DivisibilityReport report{modulus, start, {}, true};
    for (std::size_t j = 0; j < series.a_hat.size(); ++j) {
        const Rational& a = series.a_hat[j];
        if (!is_integral(a)) throw NonIntegral("A_" + std::to_string(j) + " = " + to_string(a));
        if (j < start) continue;
        Integer r;
        mpz_mod(r.get_mpz_t(), a.get_num_mpz_t(), modulus.get_mpz_t());
        if (r != 0) report.all_zero = false;
        report.residues.push_back(r);
    }
    return report;
}

std::vector<Rational> bilinear_residual(const CoefficientSeries& series) {
    const std::size_t N = series.order;
    if (N < 4) throw std::invalid_argument("bilinear_residual: order must be at least 4");
    const std::size_t degree = N - 3;
    const Params& p = series.params;
    const Poly tau = series.polynomial();
    const Poly d1 = derivative(tau);

    Poly res = truncated(hirota_apply<Rational>(4, tau, tau), degree);
    // -z(eta z - 2 kappa) D^2 tau.tau = (2 kappa z - eta z^2) D^2 tau.tau
    const Poly d2tt = hirota_apply<Rational>(2, tau, tau);
    add_scaled(res, 1, multiply(Poly{0, 2 * p.kappa, -p.eta}, d2tt, degree));
    // 2(eta z - kappa) tau tau'
    add_scaled(res, 1, multiply(Poly{-2 * p.kappa, 2 * p.eta}, multiply(tau, d1, degree), degree));
    // -(2 lambda z + g2) tau^2
    add_scaled(res, -1, multiply(Poly{p.g2, 2 * p.lambda}, multiply(tau, tau, degree), degree));
    return res;
}

std::vector<Rational> quartic_residual(const CoefficientSeries& series) {
    const std::size_t N = series.order;
    if (N < 4) throw std::invalid_argument("quartic_residual: order must be at least 4");
    const std::size_t D = N - 3;
    const Params& p = series.params;
    const Poly t0 = series.polynomial();
    const Poly t1 = derivative(t0);
    const Poly t2 = derivative(t1);
    const Poly t3 = derivative(t2);

    // tau^2 tau'''^2 - 6 tau tau' tau'' tau''' + 4 tau'^3 tau''' + 4 tau tau''^3 - 3 (tau' tau'')^2
    Poly res = multiply({&t0, &t0, &t3, &t3}, D);
    add_scaled(res, -6, multiply({&t0, &t1, &t2, &t3}, D));
    add_scaled(res, 4, multiply({&t1, &t1, &t1, &t3}, D));
    add_scaled(res, 4, multiply({&t0, &t2, &t2, &t2}, D));
    add_scaled(res, -3, multiply({&t1, &t1, &t2, &t2}, D));

    // -z(eta z - 2 kappa)(tau tau'' - tau'^2)^2
    Poly w = multiply(t0, t2, D);
    add_scaled(w, -1, multiply(t1, t1, D));
    add_scaled(res, 1, multiply(Poly{0, 2 * p.kappa, -p.eta}, multiply(w, w, D), D));

    // 2(eta z - kappa)(tau^2 tau' tau'' - tau tau'^3)
    Poly v = multiply({&t0, &t0, &t1, &t2}, D);
    add_scaled(v, -1, multiply({&t0, &t1, &t1, &t1}, D));
    add_scaled(res, 1, multiply(Poly{-2 * p.kappa, 2 * p.eta}, v, D));

    // (2 lambda z - eta + g2) tau^2 tau'^2 - (2 lambda z + g2) tau^3 tau''
    add_scaled(res, 1, multiply(Poly{p.g2 - p.eta, 2 * p.lambda}, multiply({&t0, &t0, &t1, &t1}, D), D));
    add_scaled(res, -1, multiply(Poly{p.g2, 2 * p.lambda}, multiply({&t0, &t0, &t0, &t2}, D), D));

    // 2 lambda tau^3 tau' + g3 tau^4
    add_scaled(res, 2 * p.lambda, multiply({&t0, &t0, &t0, &t1}, D));
    add_scaled(res, p.g3, multiply({&t0, &t0, &t0, &t0}, D));
    return res;
}

bool is_zero_residual(const std::vector<Rational>& residual) {
    for (const Rational& r : residual) {
        if (sgn(r) != 0) return false;
    }
    return true;
}

nlohmann::json to_json(const Params& params) {
    return {{"eta", to_string(params.eta)},
            {"kappa", to_string(params.kappa)},
            {"lambda", to_string(params.lambda)},
            {"g2", to_string(params.g2)},
            {"g3", to_string(params.g3)}};
}

nlohmann::json to_json(const CoefficientSeries& series) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const Rational& c : series.coeffs) coeffs.push_back(to_string(c));
    return {{"params", to_json(series.params)}, {"order", series.order}, {"coeffs", coeffs}};
}

CoefficientSeries coefficient_series_from_json(const nlohmann::json& j) {
    CoefficientSeries s;
    const auto& p = j.at("params");
    s.params = {parse_rational(p.at("eta").get<std::string>()), parse_rational(p.at("kappa").get<std::string>()),
                parse_rational(p.at("lambda").get<std::string>()), parse_rational(p.at("g2").get<std::string>()),
                parse_rational(p.at("g3").get<std::string>())};
    s.order = j.at("order").get<std::size_t>();
    for (const auto& c : j.at("coeffs")) s.coeffs.push_back(parse_rational(c.get<std::string>()));
    return s;
}

}  // namespace ptau
