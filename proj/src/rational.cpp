#include "afmlab/rational.hpp"

#include <cctype>
#include <cstdlib>

#include "afmlab/errors.hpp"

namespace afmlab {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Rational rational_from_decimal(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) throw ParseError("empty number");

    bool neg = false;
    if (s.front() == '+' || s.front() == '-') {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) throw ParseError("bare sign in number: '" + std::string(text) + "'");

    // explicit ratio form p/q
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view p = s.substr(0, slash), q = s.substr(slash + 1);
        if (!all_digits(p) || !all_digits(q))
            throw ParseError("malformed ratio: '" + std::string(text) + "'");
        BigInt num{std::string(p)};
        BigInt den{std::string(q)};
        if (den == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
        Rational r(num, den);
        return neg ? Rational(-r) : r;
    }

    // decimal with optional exponent
    std::string_view mant = s;
    long exp10 = 0;
    if (auto epos = s.find_first_of("eE"); epos != std::string_view::npos) {
        mant = s.substr(0, epos);
        std::string etail(s.substr(epos + 1));
        if (etail.empty()) throw ParseError("malformed exponent: '" + std::string(text) + "'");
        char* end = nullptr;
        exp10 = std::strtol(etail.c_str(), &end, 10);
        if (end == nullptr || *end != '\0')
            throw ParseError("malformed exponent: '" + std::string(text) + "'");
    }

    std::string digits;
    long frac_digits = 0;
    bool seen_dot = false, seen_digit = false;
    for (char c : mant) {
        if (c == '.') {
            if (seen_dot) throw ParseError("malformed number: '" + std::string(text) + "'");
            seen_dot = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c);
            seen_digit = true;
            if (seen_dot) ++frac_digits;
        } else {
            throw ParseError("malformed number: '" + std::string(text) + "'");
        }
    }
    if (!seen_digit) throw ParseError("malformed number: '" + std::string(text) + "'");

    BigInt num(digits.empty() ? "0" : digits);
    BigInt den = 1;
    long shift = exp10 - frac_digits;
    BigInt ten = 10;
    for (long i = 0; i < (shift >= 0 ? shift : -shift); ++i) {
        if (shift >= 0)
            num *= ten;
        else
            den *= ten;
    }
    Rational r(num, den);
    return neg ? Rational(-r) : r;
}

std::string rational_to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

Rational rational_pow(const Rational& base, int exp) {
    if (exp < 0) throw InvalidParameter("rational_pow: negative exponent");
    Rational acc = 1, b = base;
    int e = exp;
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

} // namespace afmlab
