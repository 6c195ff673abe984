#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "ptau/series.hpp"
#include "ptau/symbolic.hpp"

using namespace ptau;

namespace {

// Exponents over (kappa, eta, g2, lambda, g3).
WeightedPolynomial poly(std::initializer_list<std::pair<Exponent, Rational>> terms) {
    WeightedPolynomial p;
    for (const auto& [e, c] : terms) p.add_term(e, c);
    return p;
}

}  // namespace

TEST_CASE("P_0 .. P_9 reference table") {
    const auto P = symbolic_tau(9);
    REQUIRE(P.size() == 10);
    CHECK(P[0] == poly({{{0, 0, 0, 0, 0}, 1}}));
    CHECK(P[1].is_zero());
    CHECK(P[2].is_zero());
    CHECK(P[3] == poly({{{1, 0, 0, 0, 0}, -1}}));
    CHECK(P[4] == poly({{{0, 1, 0, 0, 0}, 2}, {{0, 0, 1, 0, 0}, oracle::frac(-1, 2)}}));
    CHECK(P[5] == poly({{{0, 0, 0, 1, 0}, -6}}));
    CHECK(P[6] == poly({{{2, 0, 0, 0, 0}, 1}, {{0, 0, 0, 0, 1}, -6}}));
    CHECK(P[7] == poly({{{1, 1, 0, 0, 0}, -11}, {{1, 0, 1, 0, 0}, -1}}));
    CHECK(P[8] == poly({{{0, 2, 0, 0, 0}, 12}, {{0, 1, 1, 0, 0}, 6}, {{1, 0, 0, 1, 0}, 51}, {{0, 0, 2, 0, 0}, oracle::frac(-9, 4)}}));
    CHECK(P[9] == poly({{{3, 0, 0, 0, 0}, 17}, {{0, 1, 0, 1, 0}, -42}, {{0, 0, 1, 1, 0}, -42}, {{1, 0, 0, 0, 1}, 108}}));
}

TEST_CASE("P_n is weighted homogeneous of degree n") {
    const auto P = symbolic_tau(30);
    for (unsigned n = 0; n < P.size(); ++n) {
        CAPTURE(n);
        CHECK(check_homogeneity(P[n], n));
        if (!P[n].is_zero()) CHECK(P[n].weight() == n);
    }
}

TEST_CASE("evaluating P_n reproduces the numeric coefficients") {
    const auto P = symbolic_tau(20);
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 10; ++trial) {
        const Params p = oracle::random_params(rng);
        const auto C = tau_coefficients(p, 20).coeffs;
        for (unsigned n = 0; n <= 20; ++n) CHECK(evaluate_polynomial(P[n], p) == C[n] * Rational(factorial(n + 1)));
    }
}

TEST_CASE("integrality of the scaled coefficients") {
    const auto A = extract_A(symbolic_tau(30));
    CHECK_FALSE(A.empty());
    CHECK(integrality_report(A).empty());
    std::vector<MultiIndexCoefficient> fake{{{0, 0, 0, 0, 0}, Rational(1, 3)}, {{1, 0, 0, 0, 0}, Rational(4)}};
    const auto bad = integrality_report(fake);
    REQUIRE(bad.size() == 1);
    CHECK(bad[0].value == Rational(1, 3));
}

TEST_CASE("the pure (g2, g3) part reproduces the Weierstrass sigma coefficients") {
    // A_{0,0,l,0,n} = a_{l,n} / 3^n for the classical sigma coefficients a_{l,n}.
    oracle::WeierstrassSigma sigma;
    const auto A = extract_A(symbolic_tau(36));
    std::size_t seen = 0;
    for (const auto& m : A) {
        const Exponent& e = m.index;
        if (e[0] || e[1] || e[3]) continue;
        Rational three_n = 1;
        for (unsigned i = 0; i < e[4]; ++i) three_n *= 3;
        CHECK(m.value == sigma.a(e[2], e[4]) / three_n);
        ++seen;
    }
    CHECK(seen > 10);
}

TEST_CASE("WeightedPolynomial arithmetic") {
    const auto kappa = WeightedPolynomial::variable(0);
    const auto g3 = WeightedPolynomial::variable(4);
    CHECK(kappa.weight() == 3u);
    CHECK(g3.weight() == 6u);
    const auto k2 = kappa * kappa;
    CHECK(k2.weight() == 6u);
    auto sum = k2;
    sum += g3;
    CHECK(sum.coefficient({2, 0, 0, 0, 0}) == 1);
    CHECK(sum.coefficient({0, 0, 0, 0, 1}) == 1);
    auto diff = sum;
    diff -= g3;
    CHECK(diff == k2);
    diff -= k2;
    CHECK(diff.is_zero());
    CHECK_FALSE(diff.weight().has_value());
    auto bad = kappa;
    CHECK_THROWS_AS(bad += g3, std::logic_error);
    auto scaled = sum;
    scaled *= oracle::frac(3, 2);
    CHECK(scaled.coefficient({0, 0, 0, 0, 1}) == oracle::frac(3, 2));
    scaled *= 0;
    CHECK(scaled.is_zero());
}

TEST_CASE("terms are ordered by total degree, then lexicographically") {
    const auto P = symbolic_tau(9);
    const auto t = P[9].terms();
    REQUIRE(t.size() == 4);
    CHECK(t[0].first == Exponent{3, 0, 0, 0, 0});
    unsigned prev = 99;
    for (const auto& [e, c] : t) {
        unsigned d = e[0] + e[1] + e[2] + e[3] + e[4];
        CHECK(d <= prev);
        prev = d;
    }
}

TEST_CASE("JSON round trip") {
    const auto P = symbolic_tau(14);
    for (const auto& p : P) {
        const auto back = weighted_polynomial_from_json(nlohmann::json::parse(to_json(p).dump()));
        CHECK(back == p);
    }
    nlohmann::json wrong = to_json(P[9]);
    wrong["weight"] = 8;
    CHECK_THROWS(weighted_polynomial_from_json(wrong));
}
