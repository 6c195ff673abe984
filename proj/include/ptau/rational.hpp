#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ptau {

using Integer = mpz_class;
using Rational = mpq_class;

/// Thrown when a textual rational cannot be parsed.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Parses "p/q", an integer, or a decimal literal such as "-0.125" or
/// "3.5e-2". Decimals are converted exactly; the result is canonical.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p/q" with q > 0 and gcd(p, q) = 1, or "p" when q = 1.
std::string to_string(const Rational& value);

Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);

/// Row n of Pascal's triangle, C(n, 0) .. C(n, n).
std::vector<Integer> binomial_row(unsigned long n);

/// num/den in lowest terms.
inline Rational make_rational(const Integer& num, const Integer& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

}  // namespace ptau
