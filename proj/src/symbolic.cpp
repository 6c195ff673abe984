#include "ptau/symbolic.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "ptau/recursion.hpp"

namespace ptau {

namespace {

constexpr unsigned kFieldBits = 12;
constexpr std::uint64_t kFieldMask = (1u << kFieldBits) - 1;

unsigned total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0u); }

}  // namespace

unsigned weighted_degree(const Exponent& e) {
    unsigned w = 0;
    for (std::size_t i = 0; i < e.size(); ++i) w += kVariableWeights[i] * e[i];
    return w;
}

WeightedPolynomial::Key WeightedPolynomial::pack(const Exponent& e) {
    Key k = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] > kFieldMask) throw std::overflow_error("exponent too large for packed monomial");
        k |= static_cast<Key>(e[i]) << (kFieldBits * i);
    }
    return k;
}

Exponent WeightedPolynomial::unpack(Key k) {
    Exponent e{};
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<unsigned>((k >> (kFieldBits * i)) & kFieldMask);
    return e;
}

WeightedPolynomial WeightedPolynomial::constant(const Rational& c) { return monomial({0, 0, 0, 0, 0}, c); }

WeightedPolynomial WeightedPolynomial::monomial(const Exponent& e, const Rational& c) {
    WeightedPolynomial p;
    p.add_term(e, c);
    return p;
}

WeightedPolynomial WeightedPolynomial::variable(std::size_t i) {
    Exponent e{};
    e.at(i) = 1;
    return monomial(e);
}

Rational WeightedPolynomial::coefficient(const Exponent& e) const {
    auto it = terms_.find(pack(e));
    return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<std::pair<Exponent, Rational>> WeightedPolynomial::terms() const {
    std::vector<std::pair<Exponent, Rational>> out;
    out.reserve(terms_.size());
    for (const auto& [k, c] : terms_) out.emplace_back(unpack(k), c);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        unsigned da = total_degree(a.first), db = total_degree(b.first);
        if (da != db) return da > db;
        return a.first > b.first;
    });
    return out;
}

void WeightedPolynomial::check_weight(unsigned w) {
    if (!weight_) {
        weight_ = w;
    } else if (*weight_ != w) {
        throw std::logic_error("monomial of weight " + std::to_string(w) + " added to polynomial of weight " +
                               std::to_string(*weight_));
    }
}

void WeightedPolynomial::accumulate(Key k, const Rational& c) {
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

void WeightedPolynomial::add_term(const Exponent& e, const Rational& c) {
    if (sgn(c) == 0) return;
    check_weight(weighted_degree(e));
    accumulate(pack(e), c);
    if (terms_.empty()) weight_.reset();
}

WeightedPolynomial& WeightedPolynomial::operator+=(const WeightedPolynomial& o) {
    if (o.is_zero()) return *this;
    check_weight(*o.weight_);
    for (const auto& [k, c] : o.terms_) accumulate(k, c);
    if (terms_.empty()) weight_.reset();
    return *this;
}

WeightedPolynomial& WeightedPolynomial::operator-=(const WeightedPolynomial& o) {
    if (o.is_zero()) return *this;
    check_weight(*o.weight_);
    for (const auto& [k, c] : o.terms_) accumulate(k, Rational(-c));
    if (terms_.empty()) weight_.reset();
    return *this;
}

WeightedPolynomial& WeightedPolynomial::operator*=(const Rational& s) {
    if (sgn(s) == 0) {
        terms_.clear();
        weight_.reset();
        return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
}

WeightedPolynomial operator*(const WeightedPolynomial& a, const WeightedPolynomial& b) {
    WeightedPolynomial r;
    r.add_product(1, a, b);
    return r;
}

bool operator==(const WeightedPolynomial& a, const WeightedPolynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (const auto& [k, c] : a.terms_) {
        auto it = b.terms_.find(k);
        if (it == b.terms_.end() || it->second != c) return false;
    }
    return true;
}

void WeightedPolynomial::add_product(const Integer& w, const WeightedPolynomial& a, const WeightedPolynomial& b) {
    if (a.is_zero() || b.is_zero() || w == 0) return;
    check_weight(*a.weight_ + *b.weight_);
    terms_.reserve(terms_.size() + a.terms_.size() * b.terms_.size() / 4 + 1);
    Rational t;
    for (const auto& [ka, ca] : a.terms_) {
        Rational wa = ca * w;
        for (const auto& [kb, cb] : b.terms_) {
            t = wa * cb;
            accumulate(ka + kb, t);
        }
    }
    if (terms_.empty()) weight_.reset();
}

std::vector<WeightedPolynomial> symbolic_tau(std::size_t N) {
    const ParameterSet<WeightedPolynomial> vars{
        WeightedPolynomial::variable(1),  // eta
        WeightedPolynomial::variable(0),  // kappa
        WeightedPolynomial::variable(3),  // lambda
        WeightedPolynomial::variable(2),  // g2
        WeightedPolynomial::variable(4),  // g3
    };
    return scaled_taylor_recursion(vars, N).p;
}

bool check_homogeneity(const WeightedPolynomial& p, unsigned n) {
    for (const auto& [e, c] : p.terms()) {
        if (weighted_degree(e) != n) return false;
    }
    return true;
}

std::vector<MultiIndexCoefficient> extract_A(const std::vector<WeightedPolynomial>& polys) {
    std::vector<MultiIndexCoefficient> out;
    for (const WeightedPolynomial& p : polys) {
        for (const auto& [e, c] : p.terms()) {
            Integer two_l, six_n;
            mpz_ui_pow_ui(two_l.get_mpz_t(), 2, e[2]);
            mpz_ui_pow_ui(six_n.get_mpz_t(), 6, e[4]);
            out.push_back({e, c * make_rational(two_l, six_n)});
        }
    }
    return out;
}

std::vector<MultiIndexCoefficient> integrality_report(const std::vector<MultiIndexCoefficient>& coeffs) {
    std::vector<MultiIndexCoefficient> bad;
    for (const auto& c : coeffs) {
        if (!is_integral(c.value)) bad.push_back(c);
    }
    return bad;
}

Rational evaluate_polynomial(const WeightedPolynomial& p, const Params& params) {
    const std::array<const Rational*, 5> values = {&params.kappa, &params.eta, &params.g2, &params.lambda,
                                                   &params.g3};
    Rational sum = 0;
    for (const auto& [e, c] : p.terms()) {
        Rational term = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            Rational power;
            mpz_pow_ui(power.get_num_mpz_t(), values[i]->get_num_mpz_t(), e[i]);
            mpz_pow_ui(power.get_den_mpz_t(), values[i]->get_den_mpz_t(), e[i]);
            term *= power;
        }
        sum += term;
    }
    return sum;
}

nlohmann::json to_json(const WeightedPolynomial& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back({{"exp", e}, {"coeff", to_string(c)}});
    nlohmann::json out;
    out["weight"] = p.weight() ? nlohmann::json(*p.weight()) : nlohmann::json(nullptr);
    out["terms"] = std::move(terms);
    return out;
}

WeightedPolynomial weighted_polynomial_from_json(const nlohmann::json& j) {
    WeightedPolynomial p;
    for (const auto& t : j.at("terms")) p.add_term(t.at("exp").get<Exponent>(), parse_rational(t.at("coeff").get<std::string>()));
    if (!j.at("weight").is_null() && p.weight() != j.at("weight").get<unsigned>())
        throw std::invalid_argument("polynomial weight does not match its terms");
    return p;
}

}  // namespace ptau
