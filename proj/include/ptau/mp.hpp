#pragma once

// Configurable-precision binary floating point (MPFR through Boost) and a
// small complex type on top of it.

#include <boost/multiprecision/mpfr.hpp>

#include <string>

#include "ptau/rational.hpp"

namespace ptau {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

/// Decimal digits needed so that Boost allocates at least `bits` of mantissa.
unsigned digits10_for_bits(unsigned bits);

/// Sets the default precision for newly created Real values and restores the
/// previous default on destruction. Values created inside the scope keep
/// their precision after it ends.
class PrecisionScope {
public:
    explicit PrecisionScope(unsigned bits);
    ~PrecisionScope();
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    unsigned saved_digits10_;
};

/// Correctly rounded image of an exact rational at the current default precision.
Real to_real(const Rational& q);
Real to_real(const Integer& z);

/// 2^e at the current default precision.
Real pow2(long e);

struct Complex {
    Real re;
    Real im;

    Complex() : re(0), im(0) {}
    Complex(Real r) : re(std::move(r)), im(0) {}  // NOLINT(google-explicit-constructor)
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    Complex(int r) : re(r), im(0) {}  // NOLINT(google-explicit-constructor)

    Complex& operator+=(const Complex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Complex& operator-=(const Complex& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Complex& operator*=(const Complex& o) {
        Real r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    Complex& operator*=(const Real& s) {
        re *= s;
        im *= s;
        return *this;
    }
    Complex& operator/=(const Complex& o);
};

inline Complex operator+(Complex a, const Complex& b) { return a += b; }
inline Complex operator-(Complex a, const Complex& b) { return a -= b; }
inline Complex operator*(Complex a, const Complex& b) { return a *= b; }
inline Complex operator*(Complex a, const Real& s) { return a *= s; }
inline Complex operator*(const Real& s, Complex a) { return a *= s; }
inline Complex operator/(Complex a, const Complex& b) { return a /= b; }
inline Complex operator-(const Complex& a) { return {-a.re, -a.im}; }

Complex to_complex(const Rational& q);
Real abs(const Complex& z);
Real norm(const Complex& z);
Complex conj(const Complex& z);
Complex sqrt(const Complex& z);  // principal branch
Complex exp(const Complex& z);
Complex polar(const Real& r, const Real& theta);
bool is_zero(const Complex& z);

/// Copy rounded to the current default precision (copies otherwise keep
/// the source precision).
Real round_to_current(const Real& x);
Complex round_to_current(const Complex& z);

/// exp(2 pi i / 3).
Complex omega3();

/// Scientific decimal string with `digits` significant digits.
std::string to_decimal(const Real& x, unsigned digits);

/// Significant digits that do not exceed a working precision of `bits`:
/// ceil(bits * log10 2) - 2.
unsigned output_digits(unsigned bits);

Real parse_real(const std::string& text);

}  // namespace ptau
