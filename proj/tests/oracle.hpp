#pragma once

// Brute-force reference values for the tests, kept deliberately
// independent of the library's closed forms and window machinery:
// nothing here but bare recurrence iteration and the raw operator
// definition.

#include <functional>
#include <vector>

#include "logconcave/integer.hpp"

namespace oracle {

using logconcave::Integer;

// U_0..U_{count-1} of U_n = p*U_{n-1} - q*U_{n-2}, U_0 = 0, U_1 = 1.
inline std::vector<Integer> lucas_values(const Integer& p, const Integer& q, std::size_t count) {
    std::vector<Integer> out;
    out.reserve(count);
    if (count > 0) {
        out.push_back(Integer(0));
    }
    if (count > 1) {
        out.push_back(Integer(1));
    }
    while (out.size() < count) {
        out.push_back(p * out[out.size() - 1] - q * out[out.size() - 2]);
    }
    return out;
}

// a_0..a_{count-1} of a_n = sum_j coeffs[j] * a_{n-1-j}.
inline std::vector<Integer> rec_values(const std::vector<Integer>& coeffs,
                                       const std::vector<Integer>& init, std::size_t count) {
    std::vector<Integer> out = init;
    while (out.size() < count) {
        Integer next(0);
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            next += coeffs[j] * out[out.size() - 1 - j];
        }
        out.push_back(next);
    }
    out.resize(count);
    return out;
}

// b_n = a_n^2 - a_{n-1} a_{n+1} over a materialized window, zero left
// extension, top index dropped (it would need an absent right neighbor).
inline std::vector<Integer> log_once(const std::vector<Integer>& a) {
    std::vector<Integer> out;
    for (std::size_t n = 0; n + 1 < a.size(); ++n) {
        Integer b = a[n] * a[n];
        if (n > 0) {
            b -= a[n - 1] * a[n + 1];
        }
        out.push_back(b);
    }
    return out;
}

// L^depth at a single index straight from the definition; `a` must
// return 0 for negative indices. Exponential in depth, which is fine
// for witness re-verification.
inline Integer log_at(const std::function<Integer(long long)>& a, int depth, long long n) {
    if (depth == 0) {
        return n < 0 ? Integer(0) : a(n);
    }
    const Integer center = log_at(a, depth - 1, n);
    return center * center - log_at(a, depth - 1, n - 1) * log_at(a, depth - 1, n + 1);
}

}  // namespace oracle
