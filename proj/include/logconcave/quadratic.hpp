#pragma once

// Arithmetic in the quadratic ring Q[sqrt(d)], d > 0. Elements are kept
// in the formal shape x + y*sqrt(d) with exact rational x, y; no
// floating point anywhere. When d happens to be a perfect square the
// formal shape is not unique (sqrt(d) is itself rational), so equality
// compares the represented real number, not the components.

#include <stdexcept>
#include <string>
#include <utility>

#include "logconcave/integer.hpp"

namespace logconcave {

struct QuadElem {
    Rational x;
    Rational y;
    Integer d;

    QuadElem(Rational x_, Rational y_, Integer d_)
        : x(std::move(x_)), y(std::move(y_)), d(std::move(d_)) {
        if (d <= 0) {
            throw std::invalid_argument("quadratic ring needs d > 0");
        }
    }

    static QuadElem one(const Integer& d) {
        return QuadElem(Rational(1), Rational(0), d);
    }
};

inline void require_same_ring(const QuadElem& a, const QuadElem& b) {
    if (a.d != b.d) {
        throw std::invalid_argument("mixed quadratic rings: sqrt(" + a.d.get_str() +
                                    ") vs sqrt(" + b.d.get_str() + ")");
    }
}

inline QuadElem conj(const QuadElem& e) {
    return QuadElem(e.x, -e.y, e.d);
}

inline QuadElem quad_add(const QuadElem& a, const QuadElem& b) {
    require_same_ring(a, b);
    return QuadElem(a.x + b.x, a.y + b.y, a.d);
}

inline QuadElem quad_sub(const QuadElem& a, const QuadElem& b) {
    require_same_ring(a, b);
    return QuadElem(a.x - b.x, a.y - b.y, a.d);
}

// (x1 + y1*s)(x2 + y2*s) = (x1*x2 + y1*y2*d) + (x1*y2 + x2*y1)*s,  s = sqrt(d)
inline QuadElem quad_mul(const QuadElem& a, const QuadElem& b) {
    require_same_ring(a, b);
    return QuadElem(a.x * b.x + a.y * b.y * Rational(b.d),
                    a.x * b.y + b.x * a.y, a.d);
}

// Square-and-multiply: O(log n) ring multiplications.
inline QuadElem quad_pow(QuadElem base, unsigned long n) {
    QuadElem acc = QuadElem::one(base.d);
    while (n > 0) {
        if (n & 1) {
            acc = quad_mul(acc, base);
        }
        n >>= 1;
        if (n > 0) {
            base = quad_mul(base, base);
        }
    }
    return acc;
}

// Equality of the represented real numbers. For non-square d the
// components are unique; for square d = r^2, x + y*sqrt(d) = x + y*r.
inline bool operator==(const QuadElem& a, const QuadElem& b) {
    if (a.d != b.d) {
        return false;
    }
    if (mpz_perfect_square_p(a.d.get_mpz_t())) {
        Integer root;
        mpz_sqrt(root.get_mpz_t(), a.d.get_mpz_t());
        return a.x + a.y * Rational(root) == b.x + b.y * Rational(root);
    }
    return a.x == b.x && a.y == b.y;
}

inline bool operator!=(const QuadElem& a, const QuadElem& b) { return !(a == b); }

inline std::string to_string(const QuadElem& e) {
    return e.x.get_str() + " + " + e.y.get_str() + "*sqrt(" + e.d.get_str() + ")";
}

}  // namespace logconcave
