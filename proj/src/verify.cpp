#include "ptau/verify.hpp"

#include <sstream>
#include <stdexcept>

#include "ptau/analytic.hpp"
#include "ptau/errors.hpp"
#include "ptau/series.hpp"

namespace ptau {

namespace {

using Suite = SuiteReport (*)(const SuiteOptions&);

CheckResult check(std::string name, bool passed, std::string detail = {}) {
    return {std::move(name), passed, std::move(detail)};
}

std::string describe(const Params& p) { return to_json(p).dump(); }

std::vector<Params> parameter_sets(const SuiteOptions& o) {
    std::mt19937_64 rng(o.seed);
    std::vector<Params> out;
    if (o.params) out.push_back(*o.params);
    for (std::size_t i = 0; i < o.random_sets; ++i) out.push_back(random_params(rng));
    return out;
}

SuiteReport paper_table(const SuiteOptions&) {
    SuiteReport r{"paper-table", {}};
    const auto computed = symbolic_tau(9);
    const auto expected = reference_table();
    for (std::size_t n = 0; n < expected.size(); ++n) {
        bool ok = computed[n] == expected[n];
        r.checks.push_back(check("P" + std::to_string(n), ok, ok ? "matches" : to_json(computed[n]).dump()));
    }
    return r;
}

SuiteReport resonance(const SuiteOptions& o) {
    SuiteReport r{"resonance", {}};
    std::size_t failures = 0;
    std::string first;
    const auto sets = parameter_sets(o);
    for (const Params& p : sets) {
        const CoefficientSeries s = tau_coefficients(p, 6);
        const Rational c6 = make_rational(1, 5040) * p.kappa * p.kappa - make_rational(1, 840) * p.g3;
        const bool ok = s.coeffs[0] == 1 && s.coeffs[1] == 0 && s.coeffs[2] == 0 && resonance_rhs(p) == 0 &&
                        s.coeffs[6] == c6;
        if (!ok && failures++ == 0) first = describe(p);
    }
    r.checks.push_back(check("gauge and resonance over " + std::to_string(sets.size()) + " parameter sets",
                             failures == 0, failures ? "first failure at " + first : "C0=1, C1=C2=0, RHS(6)=0"));
    return r;
}

SuiteReport residuals(const SuiteOptions& o) {
    SuiteReport r{"residuals", {}};
    const std::size_t N = o.order.value_or(40);
    std::size_t bilinear_fail = 0, quartic_fail = 0;
    const auto sets = parameter_sets(o);
    for (const Params& p : sets) {
        const CoefficientSeries s = tau_coefficients(p, N);
        if (!is_zero_residual(bilinear_residual(s))) ++bilinear_fail;
        if (!is_zero_residual(quartic_residual(s))) ++quartic_fail;
    }
    const std::string scope = " at N=" + std::to_string(N) + " over " + std::to_string(sets.size()) + " sets";
    r.checks.push_back(check("bilinear residual" + scope, bilinear_fail == 0,
                             std::to_string(bilinear_fail) + " nonzero"));
    r.checks.push_back(check("quartic residual" + scope, quartic_fail == 0, std::to_string(quartic_fail) + " nonzero"));
    return r;
}

SuiteReport symmetric(const SuiteOptions&) {
    SuiteReport r{"symmetric", {}};
    const auto expected = reference_symmetric_values();
    const SymmetricSeries s = symmetric_coefficients(0, expected.size() - 1);
    for (std::size_t j = 0; j < expected.size(); ++j) {
        bool ok = s.a_hat[j] == Rational(expected[j]);
        r.checks.push_back(check("A^" + std::to_string(j), ok, to_string(s.a_hat[j])));
    }
    return r;
}

SuiteReport divisibility(const SuiteOptions& o) {
    SuiteReport r{"divisibility", {}};
    const std::size_t J = o.order.value_or(200);
    const SymmetricSeries s = symmetric_coefficients(0, J);
    std::vector<std::pair<Integer, std::size_t>> scans;
    if (o.modulus || o.start) {
        scans.emplace_back(o.modulus.value_or(5), o.start.value_or(0));
    } else {
        scans = {{5, 7}, {7, 14}};
    }
    for (const auto& [m, start] : scans) {
        const DivisibilityReport d = divisibility_scan(s, m, start);
        std::string detail = "all zero";
        if (!d.all_zero) {
            for (std::size_t i = 0; i < d.residues.size(); ++i) {
                if (d.residues[i] != 0) {
                    detail = "first nonzero residue at j=" + std::to_string(start + i);
                    break;
                }
            }
        }
        r.checks.push_back(check("A^_j = 0 mod " + m.get_str() + " for " + std::to_string(start) +
                                     " <= j <= " + std::to_string(J),
                                 d.all_zero, detail));
    }
    return r;
}

SuiteReport integrality(const SuiteOptions& o) {
    SuiteReport r{"integrality", {}};
    const std::size_t N = o.order.value_or(50);
    const auto polys = symbolic_tau(N);
    bool homogeneous = true;
    for (std::size_t n = 0; n < polys.size(); ++n) homogeneous = homogeneous && check_homogeneity(polys[n], n);
    r.checks.push_back(check("weighted homogeneity of P_0..P_" + std::to_string(N), homogeneous));
    const auto A = extract_A(polys);
    const auto bad = integrality_report(A);
    std::string detail = std::to_string(A.size()) + " coefficients, " + std::to_string(bad.size()) + " non-integral";
    r.checks.push_back(check("integer A for n <= " + std::to_string(N), bad.empty(), detail));
    return r;
}

SuiteReport rational_solution(const SuiteOptions& o) {
    SuiteReport r{"rational-solution", {}};
    const std::size_t N = o.order.value_or(60);
    const CoefficientSeries s = tau_coefficients(presets::rational_example(), N);

    // z exp(-z^3/24): coefficient of z^(3j+1) is (-1/24)^j / j!.
    bool exact = true;
    std::size_t mismatch = 0;
    Rational term = 1;
    for (std::size_t m = 0; m <= N; ++m) {
        Rational expected = 0;
        if (m % 3 == 0) {
            const std::size_t j = m / 3;
            if (j > 0) term *= make_rational(-1, 24 * static_cast<long>(j));
            expected = term;
        }
        if (s.coeffs[m] != expected) {
            exact = false;
            mismatch = m;
            break;
        }
    }
    r.checks.push_back(check("C_m = coefficients of z exp(-z^3/24), m <= " + std::to_string(N), exact,
                             exact ? "exact" : "first mismatch at m=" + std::to_string(mismatch)));

    PrecisionScope scope(o.precision_bits);
    const EvaluationContext ctx(s, o.precision_bits);
    const Real floor = pow2(-static_cast<long>(o.precision_bits / 2));
    const Real kN(N + 2);
    Real worst_v(0), worst_u(0);
    bool ok = true;
    std::ostringstream why;
    for (int k = 0; k < 8; ++k) {
        const Real radius = Real(0.6) + Real(k) / 12;
        const Complex z = polar(radius, Real(0.7) + Real(k) * Real(0.785));
        const DegenerateFunctions f = degenerate_functions(ctx, z, +1);
        const auto tail = truncation_estimate(ctx, z);
        if (!tail || !f.v || !f.u || !f.ell) {
            ok = false;
            why << "no estimate at sample " << k << "; ";
            continue;
        }
        const Complex z2 = z * z;
        const Complex v_exact = Complex(Real(-2)) / z2 - z * Real(0.5);
        const Complex u_exact = Complex(Real(-1)) / z;
        const Real tau_abs = abs(eval_jet(ctx, z, 0).values[0]);
        const Real grow = kN / radius;
        const Real sig = 1 + abs(f.sigma_big);
        const Real dv = abs(*f.v - v_exact);
        const Real du = abs(*f.u - u_exact);
        const Real bound_v = 16 * *tail * grow * grow * sig * sig / tau_abs + floor * (1 + abs(v_exact));
        const Real bound_u = 16 * *tail * grow * grow * grow * sig * sig * sig / (tau_abs * abs(v_exact)) +
                             floor * (1 + abs(u_exact)) * (1 + abs(v_exact));
        if (dv > worst_v) worst_v = dv;
        if (du > worst_u) worst_u = du;
        if (dv > bound_v || du > bound_u) {
            ok = false;
            why << "sample " << k << " outside bound; ";
        }
        if (abs(*f.ell - Complex(Real(1.5))) > floor) {
            ok = false;
            why << "ell != 3/2 at sample " << k << "; ";
        }
    }
    std::string detail = why.str();
    if (detail.empty()) detail = "max |dv| " + to_decimal(worst_v, 3) + ", max |du| " + to_decimal(worst_u, 3);
    r.checks.push_back(check("v = -2/z^2 - z/2 and u = -1/z with ell = 3/2", ok, detail));
    return r;
}

const std::vector<std::pair<std::string, Suite>>& suites() {
    static const std::vector<std::pair<std::string, Suite>> table{
        {"paper-table", paper_table}, {"resonance", resonance},     {"residuals", residuals},
        {"symmetric", symmetric},     {"divisibility", divisibility}, {"integrality", integrality},
        {"rational-solution", rational_solution},
    };
    return table;
}

WeightedPolynomial poly(std::initializer_list<std::pair<Exponent, Rational>> terms) {
    WeightedPolynomial p;
    for (const auto& [e, c] : terms) p.add_term(e, c);
    return p;
}

}  // namespace

bool SuiteReport::passed() const {
    for (const CheckResult& c : checks) {
        if (!c.passed) return false;
    }
    return !checks.empty();
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : suites()) out.push_back(name);
        return out;
    }();
    return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
    for (const auto& [n, fn] : suites()) {
        if (n == name) return fn(options);
    }
    throw std::invalid_argument("unknown suite '" + name + "'");
}

// Exponents are over (kappa, eta, g2, lambda, g3).
std::vector<WeightedPolynomial> reference_table() {
    return {
        poly({{{0, 0, 0, 0, 0}, 1}}),
        WeightedPolynomial(),
        WeightedPolynomial(),
        poly({{{1, 0, 0, 0, 0}, -1}}),
        poly({{{0, 1, 0, 0, 0}, 2}, {{0, 0, 1, 0, 0}, make_rational(-1, 2)}}),
        poly({{{0, 0, 0, 1, 0}, -6}}),
        poly({{{2, 0, 0, 0, 0}, 1}, {{0, 0, 0, 0, 1}, -6}}),
        poly({{{1, 1, 0, 0, 0}, -11}, {{1, 0, 1, 0, 0}, -1}}),
        poly({{{0, 2, 0, 0, 0}, 12}, {{0, 1, 1, 0, 0}, 6}, {{1, 0, 0, 1, 0}, 51}, {{0, 0, 2, 0, 0}, make_rational(-9, 4)}}),
        poly({{{3, 0, 0, 0, 0}, 17}, {{0, 1, 0, 1, 0}, -42}, {{0, 0, 1, 1, 0}, -42}, {{1, 0, 0, 0, 1}, 108}}),
    };
}

std::vector<Integer> reference_symmetric_values() {
    const auto product = [](std::initializer_list<long> factors) {
        Integer p = 1;
        for (long f : factors) p *= f;
        return p;
    };
    return {
        1,
        -1,
        1,
        17,
        -557,
        product({59, 349}),
        -1017719,
        product({5, 7, 7, 59, 4391}),
        -product({5, 13, 131, 550439}),
        product({5, 5, 7}) * Integer("2224640081"),
        -product({5, 5, 570919, 2406689}),
        product({5, 5, 41, 61}) * Integer("46043405509"),
    };
}

Rational random_rational(std::mt19937_64& rng, int max_num, int max_den) {
    std::uniform_int_distribution<int> num(-max_num, max_num);
    std::uniform_int_distribution<int> den(1, max_den);
    const int n = num(rng);
    const int d = den(rng);
    return make_rational(n, d);
}

Params random_params(std::mt19937_64& rng) {
    Params p;
    p.eta = random_rational(rng);
    p.kappa = random_rational(rng);
    p.lambda = random_rational(rng);
    p.g2 = random_rational(rng);
    p.g3 = random_rational(rng);
    return p;
}

nlohmann::json to_json(const SuiteReport& report) {
    nlohmann::json checks = nlohmann::json::array();
    for (const CheckResult& c : report.checks) {
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    return {{"suite", report.suite}, {"passed", report.passed()}, {"checks", std::move(checks)}};
}

}  // namespace ptau
