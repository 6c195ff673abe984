#pragma once

// The recursion run over Q[kappa, eta, g2, lambda, g3]: weighted-homogeneous
// polynomials P_n with C_n = P_n / (n+1)!, and the rescaled coefficients
// A_{j,k,l,m,n} of kappa^j eta^k (g2/2)^l lambda^m (6 g3)^n.

#include <array>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"

#include "ptau/params.hpp"
#include "ptau/rational.hpp"
#include "ptau/ring.hpp"

namespace ptau {

/// Exponents of (kappa, eta, g2, lambda, g3).
using Exponent = std::array<unsigned, 5>;

/// Weights of (kappa, eta, g2, lambda, g3).
inline constexpr std::array<unsigned, 5> kVariableWeights = {3, 4, 4, 5, 6};

unsigned weighted_degree(const Exponent& e);

/// Sparse polynomial whose monomials all share one weighted degree. Adding
/// a monomial of another weight throws std::logic_error, so homogeneity is
/// a structural property; the zero polynomial has no weight.
class WeightedPolynomial {
public:
    WeightedPolynomial() = default;

    static WeightedPolynomial constant(const Rational& c);
    static WeightedPolynomial monomial(const Exponent& e, const Rational& c = 1);
    /// Variable i of (kappa, eta, g2, lambda, g3).
    static WeightedPolynomial variable(std::size_t i);

    bool is_zero() const { return terms_.empty(); }
    std::optional<unsigned> weight() const { return weight_; }
    std::size_t size() const { return terms_.size(); }

    /// Coefficient of a monomial (zero if absent).
    Rational coefficient(const Exponent& e) const;

    /// Terms in graded lexicographic order: higher total degree first, then
    /// lexicographically larger exponent vectors first.
    std::vector<std::pair<Exponent, Rational>> terms() const;

    void add_term(const Exponent& e, const Rational& c);

    WeightedPolynomial& operator+=(const WeightedPolynomial& o);
    WeightedPolynomial& operator-=(const WeightedPolynomial& o);
    WeightedPolynomial& operator*=(const Rational& s);

    friend WeightedPolynomial operator+(WeightedPolynomial a, const WeightedPolynomial& b) { return a += b; }
    friend WeightedPolynomial operator-(WeightedPolynomial a, const WeightedPolynomial& b) { return a -= b; }
    friend WeightedPolynomial operator*(const WeightedPolynomial& a, const WeightedPolynomial& b);
    friend bool operator==(const WeightedPolynomial& a, const WeightedPolynomial& b);

    /// this += w * a * b, accumulated monomial by monomial.
    void add_product(const Integer& w, const WeightedPolynomial& a, const WeightedPolynomial& b);

private:
    using Key = std::uint64_t;
    static Key pack(const Exponent& e);
    static Exponent unpack(Key k);
    void check_weight(unsigned w);
    void accumulate(Key k, const Rational& c);

    std::unordered_map<Key, Rational> terms_;
    std::optional<unsigned> weight_;
};

template <>
struct RingTraits<WeightedPolynomial> {
    static constexpr bool exact = true;
    static WeightedPolynomial zero() { return {}; }
    static bool is_zero(const WeightedPolynomial& p) { return p.is_zero(); }
    static WeightedPolynomial scaled(WeightedPolynomial p, const Rational& s) { return p *= s; }
    static WeightedPolynomial from_rational(const Rational& q) { return WeightedPolynomial::constant(q); }
    static void add_product(WeightedPolynomial& acc, const Integer& w, const WeightedPolynomial& a,
                            const WeightedPolynomial& b) {
        acc.add_product(w, a, b);
    }
};

/// P_0 .. P_N. Throws ResonanceViolation if the recursion is inconsistent at n = 6.
std::vector<WeightedPolynomial> symbolic_tau(std::size_t N);

/// True iff every monomial of p has weighted degree n.
bool check_homogeneity(const WeightedPolynomial& p, unsigned n);

struct MultiIndexCoefficient {
    Exponent index;  // (j, k, l, m, n)
    Rational value;
};

/// Every nonzero A_{j,k,l,m,n} = [coefficient in P_w] * 2^l / 6^n, in order of w.
std::vector<MultiIndexCoefficient> extract_A(const std::vector<WeightedPolynomial>& polys);

/// Entries whose value is not an integer.
std::vector<MultiIndexCoefficient> integrality_report(const std::vector<MultiIndexCoefficient>& coeffs);

Rational evaluate_polynomial(const WeightedPolynomial& p, const Params& params);

/// {"weight": n, "terms": [{"exp": [j,k,l,m,n], "coeff": "p/q"}, ...]}
nlohmann::json to_json(const WeightedPolynomial& p);
WeightedPolynomial weighted_polynomial_from_json(const nlohmann::json& j);

}  // namespace ptau
