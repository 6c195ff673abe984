#include "ptau/rational.hpp"

#include <cctype>

namespace ptau {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) throw ParseError("malformed rational: '" + std::string(whole) + "'");
    Integer value(std::string(s), 10);
    return negative ? Integer(-value) : value;
}

Integer pow10(unsigned long e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw ParseError("empty rational");

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Integer num = parse_integer(text.substr(0, slash), text);
        std::string_view den_text = text.substr(slash + 1);
        if (!all_digits(den_text)) throw ParseError("malformed rational: '" + std::string(text) + "'");
        Integer den(std::string(den_text), 10);
        if (den == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
        Rational q(num, den);
        q.canonicalize();
        return q;
    }

    // Decimal: [sign] digits [. digits] [e|E [sign] digits]
    std::string_view mantissa = text;
    long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
        mantissa = text.substr(0, e);
        Integer ex = parse_integer(text.substr(e + 1), text);
        if (!ex.fits_slong_p() || abs(ex) > 100000) throw ParseError("exponent out of range: '" + std::string(text) + "'");
        exponent = ex.get_si();
    }
    bool negative = false;
    if (!mantissa.empty() && (mantissa.front() == '+' || mantissa.front() == '-')) {
        negative = mantissa.front() == '-';
        mantissa.remove_prefix(1);
    }
    std::string digits;
    long frac_digits = 0;
    if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
        std::string_view ip = mantissa.substr(0, dot);
        std::string_view fp = mantissa.substr(dot + 1);
        if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
            throw ParseError("malformed rational: '" + std::string(text) + "'");
        digits = std::string(ip) + std::string(fp);
        frac_digits = static_cast<long>(fp.size());
    } else {
        if (!all_digits(mantissa)) throw ParseError("malformed rational: '" + std::string(text) + "'");
        digits = std::string(mantissa);
    }
    Integer num(digits, 10);
    if (negative) num = -num;
    long scale = exponent - frac_digits;
    Rational q = scale >= 0 ? Rational(num * pow10(static_cast<unsigned long>(scale)))
                            : Rational(num, pow10(static_cast<unsigned long>(-scale)));
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

std::vector<Integer> binomial_row(unsigned long n) {
    std::vector<Integer> row(n + 1);
    row[0] = 1;
    for (unsigned long k = 1; k <= n; ++k) {
        row[k] = row[k - 1] * (n - k + 1);
        mpz_divexact_ui(row[k].get_mpz_t(), row[k].get_mpz_t(), k);
    }
    return row;
}

}  // namespace ptau
