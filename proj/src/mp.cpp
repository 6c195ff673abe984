#include "ptau/mp.hpp"

#include <cmath>
#include <sstream>

namespace ptau {

unsigned digits10_for_bits(unsigned bits) {
    // Boost maps digits10 -> bits as ceil(d * 1000 / 301) roughly; round up
    // so the mantissa never falls short.
    return static_cast<unsigned>(std::ceil(bits * 0.30103)) + 1;
}

PrecisionScope::PrecisionScope(unsigned bits) : saved_digits10_(Real::default_precision()) {
    Real::default_precision(digits10_for_bits(bits));
}

PrecisionScope::~PrecisionScope() { Real::default_precision(saved_digits10_); }

Real to_real(const Rational& q) {
    Real r;
    mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
    return r;
}

Real to_real(const Integer& z) {
    Real r;
    mpfr_set_z(r.backend().data(), z.get_mpz_t(), MPFR_RNDN);
    return r;
}

Real pow2(long e) {
    Real r(1);
    mpfr_mul_2si(r.backend().data(), r.backend().data(), e, MPFR_RNDN);
    return r;
}

Complex& Complex::operator/=(const Complex& o) {
    // Smith's algorithm keeps intermediate magnitudes bounded.
    if (boost::multiprecision::abs(o.re) >= boost::multiprecision::abs(o.im)) {
        Real t = o.im / o.re;
        Real d = o.re + o.im * t;
        Real r = (re + im * t) / d;
        im = (im - re * t) / d;
        re = std::move(r);
    } else {
        Real t = o.re / o.im;
        Real d = o.re * t + o.im;
        Real r = (re * t + im) / d;
        im = (im * t - re) / d;
        re = std::move(r);
    }
    return *this;
}

Complex to_complex(const Rational& q) { return Complex(to_real(q)); }

Real abs(const Complex& z) { return boost::multiprecision::hypot(z.re, z.im); }

Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }

Complex conj(const Complex& z) { return {z.re, -z.im}; }

Complex sqrt(const Complex& z) {
    if (is_zero(z)) return {};
    Real m = abs(z);
    Real a = boost::multiprecision::sqrt((m + boost::multiprecision::abs(z.re)) / 2);
    if (z.re >= 0) return {a, z.im / (2 * a)};
    Real b = z.im >= 0 ? a : Real(-a);
    return {boost::multiprecision::abs(z.im) / (2 * a), b};
}

Complex exp(const Complex& z) {
    Real m = boost::multiprecision::exp(z.re);
    return {m * boost::multiprecision::cos(z.im), m * boost::multiprecision::sin(z.im)};
}

Complex polar(const Real& r, const Real& theta) {
    return {r * boost::multiprecision::cos(theta), r * boost::multiprecision::sin(theta)};
}

bool is_zero(const Complex& z) { return z.re == 0 && z.im == 0; }

Real round_to_current(const Real& x) {
    Real r;
    mpfr_set(r.backend().data(), x.backend().data(), MPFR_RNDN);
    return r;
}

Complex round_to_current(const Complex& z) { return {round_to_current(z.re), round_to_current(z.im)}; }

Complex omega3() {
    Real half(-1);
    half /= 2;
    Real s = boost::multiprecision::sqrt(Real(3)) / 2;
    return {half, s};
}

std::string to_decimal(const Real& x, unsigned digits) {
    if (digits == 0) digits = 1;
    return x.str(static_cast<std::streamsize>(digits), std::ios_base::scientific);
}

unsigned output_digits(unsigned bits) {
    auto d = static_cast<long>(std::ceil(bits * std::log10(2.0))) - 2;
    return static_cast<unsigned>(d < 1 ? 1 : d);
}

Real parse_real(const std::string& text) { return to_real(parse_rational(text)); }

}  // namespace ptau
