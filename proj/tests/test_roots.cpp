#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <sstream>

#include "oracles.hpp"
#include "ptau/analytic.hpp"
#include "ptau/errors.hpp"
#include "ptau/roots.hpp"
#include "ptau/series.hpp"

using namespace ptau;

namespace {

std::vector<Complex> expand(const std::vector<Complex>& roots) {
    std::vector<Complex> p{Complex(1)};
    for (const auto& r : roots) {
        std::vector<Complex> q(p.size() + 1);
        for (std::size_t k = 0; k < p.size(); ++k) {
            q[k + 1] += p[k];
            q[k] -= r * p[k];
        }
        p = std::move(q);
    }
    return p;
}

bool contains(const std::vector<Complex>& set, const Complex& z, const char* tol) {
    return std::any_of(set.begin(), set.end(), [&](const Complex& w) { return abs(w - z) < Real(tol); });
}

std::vector<Complex> trusted_locations(const ZeroSearchResult& r) {
    std::vector<Complex> out;
    for (const auto& z : r.zeros)
        if (z.trusted) out.push_back(z.location);
    return out;
}

}  // namespace

TEST_CASE("roots of a polynomial with known factors") {
    PrecisionScope scope(256);
    const std::vector<Complex> roots{Complex(1), Complex(-2), Complex(Real(0), Real(3)),
                                     Complex(Real("0.5"), Real("-0.25")), Complex(Real(7), Real(1))};
    const auto found = find_roots(expand(roots));
    REQUIRE(found.size() == roots.size());
    for (const auto& r : roots) CHECK(contains(found, r, "1e-60"));
    for (const auto& z : found) {
        const auto [res, scale] = residual_and_scale(expand(roots), z);
        CHECK(res <= Real("1e-70") * scale);
    }
}

TEST_CASE("zero roots are split off exactly") {
    PrecisionScope scope(256);
    const auto found = find_roots(expand({Complex(0), Complex(0), Complex(Real(2), Real(1))}));
    REQUIRE(found.size() == 3);
    CHECK(std::count_if(found.begin(), found.end(), [](const Complex& z) { return is_zero(z); }) == 2);
    CHECK(contains(found, Complex(Real(2), Real(1)), "1e-60"));
}

TEST_CASE("degenerate input") {
    PrecisionScope scope(256);
    const std::vector<Complex> constant{Complex(3)};
    CHECK_THROWS_AS(find_roots(constant), std::invalid_argument);
    ZeroSearchOptions opt;
    opt.orders = {20};
    CHECK_THROWS_AS(trusted_zeros(presets::p34_symmetric(), opt), std::invalid_argument);
    opt.orders = {30, 20};
    CHECK_THROWS_AS(trusted_zeros(presets::p34_symmetric(), opt), std::invalid_argument);
}

TEST_CASE("an entire tau without zeros yields no trusted zeros") {
    ZeroSearchOptions opt;
    opt.orders = {60, 90, 121};
    const auto r = trusted_zeros(presets::rational_example(), opt);
    CHECK_FALSE(r.zeros.empty());
    CHECK(trusted_locations(r).empty());
}

TEST_CASE("first real zeros of the symmetric example") {
    PrecisionScope scope(256);
    ZeroSearchOptions opt;
    opt.orders = {100, 150, 201};
    const auto r = trusted_zeros(presets::p34_symmetric(), opt);
    REQUIRE(r.trust_radius.has_value());
    const auto trusted = trusted_locations(r);
    CHECK(contains(trusted, Complex(parse_real("3.10938452954168950042")), "1e-18"));
    CHECK(contains(trusted, Complex(parse_real("-3.97992802289816587870")), "1e-18"));
    for (const auto& z : r.zeros) {
        if (!z.trusted) continue;
        CHECK(abs(z.location) <= *r.trust_radius);
        CHECK(z.source_order == 201u);
        CHECK(z.match_history.size() == 2);
    }
    for (std::size_t i = 1; i < r.zeros.size(); ++i) CHECK(abs(r.zeros[i - 1].location) <= abs(r.zeros[i].location));

    const auto orbits = symmetry_triples(r.zeros, Real("1e-20"));
    CHECK(orbits.orbits.size() * 3 == trusted.size());
    CHECK(orbits.max_defect < Real("1e-20"));
}

TEST_CASE("the lemniscatic lattice is invariant under rotation by i") {
    PrecisionScope scope(256);
    ZeroSearchOptions opt;
    opt.orders = {80, 120, 161};
    const auto r = trusted_zeros(presets::weierstrass(1, 0), opt);
    const auto trusted = trusted_locations(r);
    REQUIRE(trusted.size() >= 4);
    const Complex i(Real(0), Real(1));
    for (const auto& z : trusted) {
        // The partner may sit just outside the trust radius.
        if (abs(z) > *r.trust_radius * Real("0.9")) continue;
        CHECK(contains(trusted, i * z, "1e-15"));
        CHECK(contains(trusted, -z, "1e-15"));
        CHECK(contains(trusted, conj(z), "1e-15"));
    }
}

TEST_CASE("orbit grouping rejects a broken orbit") {
    PrecisionScope scope(256);
    std::vector<ZeroEstimate> zeros(2);
    zeros[0].location = Complex(2);
    zeros[0].trusted = true;
    zeros[1].location = omega3() * Complex(2);
    zeros[1].trusted = true;
    CHECK_THROWS_AS(symmetry_triples(zeros, Real("1e-20")), OrbitIncomplete);
    zeros.push_back(zeros[1]);
    zeros[2].location = omega3() * omega3() * Complex(2);
    CHECK(symmetry_triples(zeros, Real("1e-20")).orbits.size() == 1);
}

TEST_CASE("CSV output") {
    PrecisionScope scope(256);
    ZeroSearchOptions opt;
    opt.orders = {40, 61};
    const auto r = trusted_zeros(presets::p34_symmetric(), opt);
    std::ostringstream out;
    write_zeros_csv(out, r.zeros, 20);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "re,im,residual,stability,trusted,source_order");
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        CHECK(std::count(line.begin(), line.end(), ',') == 5);
        ++rows;
    }
    CHECK(rows == r.zeros.size());
}
