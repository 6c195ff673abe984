#pragma once

// Coefficient rings used by the series recursion and the Hirota operators.
// A ring type T provides +, -, * and a RingTraits<T> specialization with
// zero(), is_zero(), scaled() and add_product().

#include <concepts>

#include "ptau/mp.hpp"
#include "ptau/rational.hpp"

namespace ptau {

template <class T>
struct RingTraits;

template <class T>
concept CoefficientRing = requires(T a, const T& b, const Integer& w, const Rational& q) {
    { a + b } -> std::convertible_to<T>;
    { a - b } -> std::convertible_to<T>;
    { a * b } -> std::convertible_to<T>;
    { RingTraits<T>::zero() } -> std::convertible_to<T>;
    { RingTraits<T>::is_zero(b) } -> std::convertible_to<bool>;
    { RingTraits<T>::scaled(b, q) } -> std::convertible_to<T>;
    { RingTraits<T>::from_rational(q) } -> std::convertible_to<T>;
    RingTraits<T>::add_product(a, w, b, b);
    { RingTraits<T>::exact } -> std::convertible_to<bool>;
};

template <>
struct RingTraits<Rational> {
    static constexpr bool exact = true;
    static Rational zero() { return 0; }
    static bool is_zero(const Rational& x) { return sgn(x) == 0; }
    static Rational scaled(const Rational& x, const Rational& s) { return x * s; }
    static Rational from_rational(const Rational& q) { return q; }
    /// acc += w * a * b
    static void add_product(Rational& acc, const Integer& w, const Rational& a, const Rational& b) {
        Rational t = a * b;
        t *= w;
        acc += t;
    }
};

template <>
struct RingTraits<Complex> {
    static constexpr bool exact = false;
    static Complex zero() { return {}; }
    static bool is_zero(const Complex& x) { return ptau::is_zero(x); }
    static Complex scaled(const Complex& x, const Rational& s) { return x * to_real(s); }
    static Complex from_rational(const Rational& q) { return to_complex(q); }
    static void add_product(Complex& acc, const Integer& w, const Complex& a, const Complex& b) {
        acc += (a * b) * to_real(w);
    }
};

}  // namespace ptau
