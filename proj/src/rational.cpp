#include "codecert/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace codecert {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Integer parse_signed_integer(std::string_view s) {
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
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
    const std::string_view s = trim(text);
    if (s.empty()) throw std::invalid_argument("empty rational");

    if (const auto slash = s.find('/'); slash != std::string_view::npos) {
        const Integer num = parse_signed_integer(trim(s.substr(0, slash)));
        const Integer den = parse_signed_integer(trim(s.substr(slash + 1)));
        if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(s) + "'");
        Rational r(num, den);
        r.canonicalize();
        return r;
    }

    std::string_view mantissa = s;
    long exponent = 0;
    if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        mantissa = s.substr(0, e);
        const Integer exp_value = parse_signed_integer(s.substr(e + 1));
        if (!exp_value.fits_slong_p() || abs(exp_value) > 100000)
            throw std::invalid_argument("exponent out of range in '" + std::string(s) + "'");
        exponent = exp_value.get_si();
    }

    bool negative = false;
    if (!mantissa.empty() && (mantissa.front() == '+' || mantissa.front() == '-')) {
        negative = mantissa.front() == '-';
        mantissa.remove_prefix(1);
    }
    std::string digits;
    long fractional = 0;
    if (const auto dot = mantissa.find('.'); dot != std::string_view::npos) {
        const auto int_part = mantissa.substr(0, dot);
        const auto frac_part = mantissa.substr(dot + 1);
        if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
            (!frac_part.empty() && !all_digits(frac_part)))
            throw std::invalid_argument("malformed decimal '" + std::string(s) + "'");
        digits = std::string(int_part) + std::string(frac_part);
        fractional = static_cast<long>(frac_part.size());
    } else {
        if (!all_digits(mantissa)) throw std::invalid_argument("malformed number '" + std::string(s) + "'");
        digits = std::string(mantissa);
    }

    Integer num(digits, 10);
    if (negative) num = -num;
    const long scale = exponent - fractional;
    Rational r;
    if (scale >= 0) {
        r = Rational(num * pow10(static_cast<unsigned long>(scale)));
    } else {
        r = Rational(num, pow10(static_cast<unsigned long>(-scale)));
        r.canonicalize();
    }
    return r;
}

std::string to_string(const Rational& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_decimal(const Rational& value, int digits) {
    const bool negative = sgn(value) < 0;
    const Rational magnitude = abs(value);
    Integer whole = magnitude.get_num() / magnitude.get_den();
    Integer rem = magnitude.get_num() - whole * magnitude.get_den();
    std::string out = (negative ? "-" : "") + whole.get_str();
    if (digits > 0) {
        out += '.';
        for (int i = 0; i < digits; ++i) {
            rem *= 10;
            const Integer d = rem / magnitude.get_den();
            rem -= d * magnitude.get_den();
            out += static_cast<char>('0' + d.get_si());
        }
    }
    return out;
}

Integer factorial(unsigned n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(unsigned n, unsigned k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Integer parse_group_order(std::string_view text) {
    std::string_view s = trim(text);
    if (!s.empty() && s.back() == '!') {
        s.remove_suffix(1);
        if (!all_digits(s) || s.size() > 6) throw std::invalid_argument("malformed factorial '" + std::string(text) + "'");
        return factorial(static_cast<unsigned>(std::stoul(std::string(s))));
    }
    if (!all_digits(s)) throw std::invalid_argument("malformed group order '" + std::string(text) + "'");
    Integer g(std::string(s), 10);
    if (g == 0) throw std::invalid_argument("group order must be positive");
    return g;
}

}  // namespace codecert
