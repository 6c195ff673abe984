#pragma once

#include <string>

#include "ptau/rational.hpp"
#include "ptau/ring.hpp"

namespace ptau {

/// The five coefficients of the shifted sigma equation
///   (S'')^2 - eta (z S' - S)^2 + 2 (kappa S' - lambda)(z S' - S) + 4 (S')^3 - g2 S' + g3 = 0.
template <class T>
struct ParameterSet {
    T eta{};
    T kappa{};
    T lambda{};
    T g2{};
    T g3{};

    friend bool operator==(const ParameterSet&, const ParameterSet&) = default;
};

using Params = ParameterSet<Rational>;

/// Which equation the parameters reduce to: P_IV when eta != 0, then P_II
/// (P_XXXIV), P_I and finally the Weierstrass case as eta, kappa, lambda vanish.
enum class Level { PainleveIV, PainleveII, PainleveI, Weierstrass };

inline Level level(const Params& p) {
    if (sgn(p.eta) != 0) return Level::PainleveIV;
    if (sgn(p.kappa) != 0) return Level::PainleveII;
    if (sgn(p.lambda) != 0) return Level::PainleveI;
    return Level::Weierstrass;
}

const char* to_string(Level level);

/// Image of exact parameters in another coefficient ring.
template <CoefficientRing T>
ParameterSet<T> lift(const Params& p) {
    return {RingTraits<T>::from_rational(p.eta), RingTraits<T>::from_rational(p.kappa),
            RingTraits<T>::from_rational(p.lambda), RingTraits<T>::from_rational(p.g2),
            RingTraits<T>::from_rational(p.g3)};
}

/// The parameter family invariant under z -> w z, tau -> tau / w with w^3 = 1.
inline bool has_order3_symmetry(const Params& p) {
    return sgn(p.eta) == 0 && sgn(p.lambda) == 0 && sgn(p.g2) == 0;
}

namespace presets {
/// (eta, kappa, lambda, g2, g3) = (0, 1, 0, 0, 0): the P_XXXIV example.
inline Params p34_symmetric() { return {0, 1, 0, 0, 0}; }
/// (0, 1, 0, 0, -9/16): tau = z exp(-z^3 / 24).
inline Params rational_example() { return {0, 1, 0, 0, Rational(-9, 16)}; }
inline Params weierstrass(const Rational& g2, const Rational& g3) { return {0, 0, 0, g2, g3}; }
}  // namespace presets

}  // namespace ptau
