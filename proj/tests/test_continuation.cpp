#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <sstream>

#include "oracles.hpp"
#include "ptau/analytic.hpp"
#include "ptau/continuation.hpp"
#include "ptau/errors.hpp"
#include "ptau/roots.hpp"
#include "ptau/series.hpp"

using namespace ptau;

namespace {

bool close(const Complex& a, const Complex& b, const char* tol) {
    return abs(a - b) <= Real(tol) * (Real(1) + abs(b));
}

Complex nearest_trusted(const ZeroSearchResult& r, const Complex& target) {
    const ZeroEstimate* best = nullptr;
    for (const auto& z : r.zeros)
        if (z.trusted && (!best || abs(z.location - target) < abs(best->location - target))) best = &z;
    REQUIRE(best != nullptr);
    return best->location;
}

std::vector<Complex> samples(const Real& radius, int count) {
    std::vector<Complex> out;
    for (int k = 0; k < count; ++k) {
        const Real t = Real(2 * k + 1) / Real(count);
        out.push_back(polar(radius * Real(k + 1) / Real(count), t * Real(3)));
    }
    return out;
}

struct SymmetricFixture {
    SymmetricFixture() : ctx(tau_coefficients(presets::p34_symmetric(), 201)) {
        ZeroSearchOptions opt;
        opt.orders = {100, 150, 201};
        scan = trusted_zeros(presets::p34_symmetric(), opt);
        omega1 = nearest_trusted(scan, Complex(parse_real("3.1")));
    }
    PrecisionScope scope{256};
    EvaluationContext ctx;
    ZeroSearchResult scan;
    Complex omega1;
};

}  // namespace

TEST_CASE("shifting the Weierstrass sigma function leaves the invariants unchanged") {
    PrecisionScope scope(256);
    const Params p = presets::weierstrass(1, 0);
    const EvaluationContext ctx(tau_coefficients(p, 161));
    ZeroSearchOptions opt;
    opt.orders = {80, 120, 161};
    const auto scan = trusted_zeros(p, opt);
    const Complex omega = nearest_trusted(scan, Complex(Real(2)));
    const auto s = shift_parameters(ctx, omega);
    CHECK(is_zero(s.mu_tilde));
    CHECK(is_zero(s.new_params.kappa));
    CHECK(is_zero(s.new_params.eta));
    CHECK(abs(s.new_params.lambda) < Real("1e-60"));
    CHECK(close(s.new_params.g2, Complex(1), "1e-40"));
    CHECK(abs(s.new_params.g3) < Real("1e-40"));
}

TEST_CASE("shift data at the first positive zero of the symmetric example") {
    SymmetricFixture f;
    CHECK(close(f.omega1, Complex(parse_real("3.10938452954168950042")), "1e-19"));
    const auto s = shift_parameters(f.ctx, f.omega1);
    CHECK(close(s.b_gauge, Complex(parse_real("0.24645144988329904450")), "1e-19"));
    CHECK(close(s.a_gauge, Complex(parse_real("-2.13969282724362711")), "1e-16"));
    CHECK(close(s.mu_tilde, -f.omega1 * Complex(Real(1) / 6), "1e-70"));
    CHECK(close(s.new_params.kappa, Complex(1), "1e-70"));
    CHECK(is_zero(s.new_params.eta));
    // lambda~ = -kappa~ mu~ when eta = lambda = 0.
    CHECK(close(s.new_params.lambda, f.omega1 * Complex(Real(1) / 6), "1e-60"));
    CHECK(close(s.new_params.g2, Complex(parse_real("3.71566028395099600418")), "1e-19"));
    // g2~ = 12 mu~^2 + 2 B kappa~ here.
    CHECK(close(s.new_params.g2, Complex(12) * s.mu_tilde * s.mu_tilde + Complex(2) * s.b_gauge, "1e-60"));
    CHECK(s.omega.re == f.omega1.re);
    CHECK(to_json(s, 20).contains("new_params"));
}

TEST_CASE("non-zeros are rejected") {
    PrecisionScope scope(256);
    const EvaluationContext ctx(tau_coefficients(presets::p34_symmetric(), 120));
    CHECK_THROWS_AS(shift_parameters(ctx, Complex(1)), NotAZero);
    CHECK_THROWS_AS(mu_consistency(ctx, Complex(2)), NotAZero);
    ShiftOptions far;
    far.trust_radius = Real(2);
    CHECK_THROWS_AS(shift_parameters(ctx, Complex(parse_real("3.10938452954168950042")), far), NotAZero);

    const EvaluationContext linear(tau_coefficients(Params{}, 20));
    CHECK_THROWS_AS(shift_parameters(linear, Complex(1)), NotAZero);
}

TEST_CASE("a derivative threshold above |tau'| reports a degenerate zero") {
    SymmetricFixture f;
    ShiftOptions opt;
    opt.derivative_tol = Real(10);
    CHECK_THROWS_AS(shift_parameters(f.ctx, f.omega1, opt), DegenerateZero);
}

TEST_CASE("the prescribed mu~ matches the Laurent data of tau") {
    SymmetricFixture f;
    CHECK(mu_consistency(f.ctx, f.omega1) < Real("1e-60"));
    const Complex rough(parse_real("3.10938452954168950042"));
    CHECK(mu_consistency(f.ctx, rough) < Real("1e-18"));
}

TEST_CASE("the functional equation holds and catches a corrupted parameter") {
    SymmetricFixture f;
    const auto s = shift_parameters(f.ctx, f.omega1);
    const auto pts = samples(Real("0.3"), 20);
    const auto v = verify_shift(f.ctx, s, pts);
    CHECK(v.within_bound());
    CHECK(v.max_residual < Real("1e-60"));

    auto bad = s;
    bad.new_params.g3 += Complex(1);
    const auto w = verify_shift(f.ctx, bad, pts);
    CHECK_FALSE(w.within_bound());
    CHECK(w.max_residual > Real("1e-10"));
}

TEST_CASE("shifting back returns the original parameters") {
    SymmetricFixture f;
    const auto s = shift_parameters(f.ctx, f.omega1);
    const auto tilde = EvaluationContext::from_complex_params(s.new_params, 201);
    const auto back = shift_parameters(tilde, -f.omega1);
    CHECK(abs(back.new_params.eta) < Real("1e-60"));
    CHECK(close(back.new_params.kappa, Complex(1), "1e-60"));
    CHECK(abs(back.new_params.lambda) < Real("1e-60"));
    CHECK(abs(back.new_params.g2) < Real("1e-60"));
    CHECK(abs(back.new_params.g3) < Real("1e-60"));
}

TEST_CASE("zeros of the shifted series are translates of the original zeros") {
    SymmetricFixture f;
    const auto s = shift_parameters(f.ctx, f.omega1);
    const auto tilde = EvaluationContext::from_complex_params(s.new_params, 150);
    ZeroSearchOptions opt;
    opt.orders = {60, 100, 150};
    const auto local = trusted_zeros(tilde.coeffs(), opt);
    REQUIRE(local.trust_radius.has_value());
    std::size_t checked = 0;
    for (const auto& z : f.scan.zeros) {
        if (!z.trusted) continue;
        const Complex d = z.location - f.omega1;
        if (is_zero(d) || abs(d) < Real("1e-30") || abs(d) > *local.trust_radius * Real("0.8")) continue;
        const bool found = std::any_of(local.zeros.begin(), local.zeros.end(), [&](const ZeroEstimate& e) {
            return e.trusted && abs(e.location - d) < Real("1e-12");
        });
        CAPTURE(to_decimal(d.re, 12));
        CAPTURE(to_decimal(d.im, 12));
        CHECK(found);
        ++checked;
    }
    CHECK(checked >= 2);
}

TEST_CASE("pole field of tau = z is just the origin") {
    PoleFieldOptions opt;
    opt.origin_orders = {20, 30};
    opt.center_orders = {20, 30};
    const auto field = pole_field(Params{}, 2, opt);
    REQUIRE(field.points.size() == 1);
    CHECK(is_zero(field.points[0].location));
    CHECK(field.points[0].depth == 0u);
}

TEST_CASE("pole field depth 0 is the direct scan and depth 1 extends it") {
    PrecisionScope scope(256);
    PoleFieldOptions opt;
    opt.origin_orders = {60, 90, 121};
    opt.center_orders = {60, 90, 121};
    opt.center_radius = Real(6);

    ZeroSearchOptions zopt;
    zopt.orders = opt.origin_orders;
    const auto scan = trusted_zeros(presets::p34_symmetric(), zopt);
    const auto trusted_count =
        std::count_if(scan.zeros.begin(), scan.zeros.end(), [](const ZeroEstimate& z) { return z.trusted; });

    const auto f0 = pole_field(presets::p34_symmetric(), 0, opt);
    CHECK(f0.errors.empty());
    CHECK(static_cast<long>(f0.points.size()) == trusted_count + 1);

    const auto f1 = pole_field(presets::p34_symmetric(), 1, opt);
    CHECK(f1.points.size() > f0.points.size());
    for (const auto& p : f0.points) {
        const bool kept = std::any_of(f1.points.begin(), f1.points.end(),
                                      [&](const PolePoint& q) { return abs(q.location - p.location) < Real("1e-20"); });
        CHECK(kept);
    }
    const Complex w = omega3();
    CHECK(f1.points[0].parent_chain.empty());
    for (std::size_t i = 1; i < f1.points.size(); ++i) {
        const auto& p = f1.points[i];
        CHECK(p.depth <= 1u);
        REQUIRE_FALSE(p.parent_chain.empty());
        CHECK(p.parent_chain.front() == 0u);
        CHECK(p.parent_chain.size() == p.depth + 1);
        const Complex r = w * p.location;
        const bool closed = std::any_of(f1.points.begin(), f1.points.end(), [&](const PolePoint& q) {
            return abs(q.location - r) < Real("1e-8") * (Real(1) + abs(r));
        });
        CHECK(closed);
    }

    std::ostringstream out;
    write_pole_field_csv(out, f1, 20);
    std::istringstream in(out.str());
    std::string header;
    std::getline(in, header);
    CHECK(header == "re,im,depth,parent_chain,trusted");
}
