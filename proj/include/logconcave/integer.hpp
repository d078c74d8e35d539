#pragma once

// Exact arithmetic base types. All sequence values, recurrence
// coefficients and closed-form components in this library are
// arbitrary-precision; nothing here ever rounds or overflows.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace logconcave {

using Integer = mpz_class;
using Rational = mpq_class;

// Builds num/den in lowest terms with positive denominator.
inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) {
        throw std::invalid_argument("rational with zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integral(const Rational& r) {
    return r.get_den() == 1;
}

// n-th power with the 0^0 = 1 convention used throughout.
inline Integer int_pow(const Integer& base, unsigned long n) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), n);
    return out;
}

// Strict decimal integer parse (optional leading '-'); rejects
// anything strtol-style parses would let slide.
inline Integer parse_integer(const std::string& text) {
    if (text.empty()) {
        throw std::invalid_argument("empty integer literal");
    }
    const std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (start == text.size()) {
        throw std::invalid_argument("sign without digits: '" + text + "'");
    }
    for (std::size_t i = start; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') {
            throw std::invalid_argument("not an integer: '" + text + "'");
        }
    }
    const Integer magnitude(text.substr(start));
    return text[0] == '-' ? Integer(-magnitude) : magnitude;
}

}  // namespace logconcave
