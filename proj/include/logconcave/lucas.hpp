#pragma once

// Lucas sequences of the first kind, U_0 = 0, U_1 = 1,
// U_n = P*U_{n-1} - Q*U_{n-2}, and the exact classification of their
// log-concavity behaviour.
//
// Everything here is driven by the closed form of the first operator
// image: for discriminant D = P^2 - 4Q > 0,
//
//     L(U)_n = U_n^2 - U_{n-1} U_{n+1} = Q^(n-1)   for n >= 1,
//
// so the sign of the whole image is the sign of Q. For D = 0 the
// sequence degenerates to U_n = n*S^(n-1) with S = P/2 and the image is
// (S^(n-1))^2, nonnegative regardless of sign. Negative discriminants
// are outside the scope of this classification.

#include <stdexcept>
#include <string>

#include "logconcave/integer.hpp"
#include "logconcave/quadratic.hpp"

namespace logconcave {

struct LucasParams {
    Integer p;
    Integer q;

    Integer discriminant() const { return p * p - 4 * q; }

    friend bool operator==(const LucasParams& a, const LucasParams& b) {
        return a.p == b.p && a.q == b.q;
    }
};

// U_n through the Binet form. With a = (P + sqrt(D))/2 and b its
// conjugate, U_n = (a^n - b^n) / (a - b), and since b^n is the
// conjugate of a^n this is just twice the sqrt(D)-component of a^n.
// Exact for every D > 0, perfect squares included: the ring arithmetic
// in QuadElem is formal and never rounds.
inline Integer binet_u(const LucasParams& params, unsigned long n) {
    const Integer d = params.discriminant();
    if (d < 0) {
        throw std::domain_error("Binet evaluation needs D > 0, got D = " + d.get_str());
    }
    if (d == 0) {
        throw std::domain_error("D = 0 collapses the Binet form; use degenerate_u");
    }
    const QuadElem a(make_rational(params.p, Integer(2)), make_rational(Integer(1), Integer(2)),
                     d);
    const Rational u = 2 * quad_pow(a, n).y;
    if (!is_integral(u)) {
        throw std::logic_error("Binet value U_" + std::to_string(n) +
                               " is not an integer: " + u.get_str());
    }
    return u.get_num();
}

// The D = 0 family: P = 2S, Q = S^2 gives U_n = n * S^(n-1).
inline Integer degenerate_u(const Integer& s, unsigned long n) {
    if (n == 0) {
        return Integer(0);
    }
    return Integer(n) * int_pow(s, n - 1);
}

// Closed form of the first operator image for D > 0.
struct LogImageClosedForm {
    Integer value;     // Q^(n-1); equals U_n^2 - U_{n-1} * U_{n+1}
    Rational variant;  // value * P^2 / D, a published variant of the same
                       // identity; same sign (P^2/D > 0), magnitude differs
                       // unless D = P^2, kept so the two can be compared.
};

inline LogImageClosedForm closed_form_log_u(const LucasParams& params, unsigned long n) {
    const Integer d = params.discriminant();
    if (d == 0) {
        throw std::domain_error("for D = 0 the image is (S^(n-1))^2; see degenerate_u");
    }
    if (d < 0) {
        throw std::domain_error("closed form needs D > 0, got D = " + d.get_str());
    }
    if (n < 1) {
        throw std::invalid_argument("operator image starts at n = 1");
    }
    LogImageClosedForm form;
    form.value = int_pow(params.q, n - 1);
    form.variant = make_rational(form.value * params.p * params.p, d);
    return form;
}

struct ConcavityVerdict {
    enum class Kind { InfinitelyLogConcave, NotOneFold, OutsideScope };
    enum class Certificate { None, RepeatedRoot, NonnegativeQ };

    LucasParams params{Integer(0), Integer(0)};
    Kind kind = Kind::OutsideScope;

    // InfinitelyLogConcave
    Certificate certificate = Certificate::None;
    Integer s{0};               // RepeatedRoot: P = 2S, Q = S^2
    bool p_above_bound = false;  // NonnegativeQ: P > 2*sqrt(Q) if true, P < -2*sqrt(Q) if false

    // NotOneFold: first strictly negative image entry, recomputed from
    // raw recurrence values rather than the closed form.
    long long witness_index = -1;
    Integer witness_value{0};

    // OutsideScope
    std::string reason;

    // P or Q is zero; admitted only when classify() runs in extended mode.
    bool hypothesis_relaxed = false;

    std::string describe() const {
        const std::string head = "U(" + params.p.get_str() + "," + params.q.get_str() +
                                 "), D = " + params.discriminant().get_str() + ": ";
        std::string body;
        switch (kind) {
            case Kind::InfinitelyLogConcave:
                body = head + "infinitely log-concave\n";
                if (certificate == Certificate::RepeatedRoot) {
                    body += "certificate: repeated root, P = 2S and Q = S^2 with S = " +
                            s.get_str() + "; U_n = n*S^(n-1) and L(U)_n = (S^(n-1))^2 >= 0\n";
                } else {
                    body += std::string("certificate: Q >= 0 and ") +
                            (p_above_bound ? "P > 2*sqrt(Q)" : "P < -2*sqrt(Q)") +
                            "; L(U)_n = Q^(n-1) >= 0\n";
                }
                break;
            case Kind::NotOneFold:
                body = head + "not 1-fold log-concave\n";
                body += "witness: L(U)_" + std::to_string(witness_index) + " = " +
                        witness_value.get_str() + " < 0\n";
                break;
            case Kind::OutsideScope:
                body = head + "outside scope (" + reason + ")\n";
                break;
        }
        if (hypothesis_relaxed) {
            body += "note: P or Q is zero, outside the standard Lucas-sequence hypothesis\n";
        }
        return body;
    }

    friend bool operator==(const ConcavityVerdict& a, const ConcavityVerdict& b) {
        if (!(a.params == b.params) || a.kind != b.kind ||
            a.hypothesis_relaxed != b.hypothesis_relaxed) {
            return false;
        }
        switch (a.kind) {
            case Kind::InfinitelyLogConcave:
                return a.certificate == b.certificate && a.s == b.s &&
                       a.p_above_bound == b.p_above_bound;
            case Kind::NotOneFold:
                return a.witness_index == b.witness_index && a.witness_value == b.witness_value;
            case Kind::OutsideScope:
                return a.reason == b.reason;
        }
        return false;
    }
};

// Classification by discriminant and sign of Q:
//   D < 0            -> outside scope
//   D = 0            -> infinitely log-concave (repeated root)
//   D > 0 and Q >= 0 -> infinitely log-concave (image Q^(n-1) >= 0, and
//                       every later iterate is 0,1,0,... or a square)
//   D > 0 and Q < 0  -> not 1-fold; the first image entry U_n^2 -
//                       U_{n-1} U_{n+1} = Q^(n-1) alternates in sign.
// P = 0 or Q = 0 is rejected unless `extended`, in which case the
// verdict is flagged as outside the standard hypothesis.
inline ConcavityVerdict classify(const LucasParams& params, bool extended = false) {
    ConcavityVerdict verdict;
    verdict.params = params;
    const Integer d = params.discriminant();
    if (d < 0) {
        verdict.kind = ConcavityVerdict::Kind::OutsideScope;
        verdict.reason = "negative discriminant";
        return verdict;
    }
    const bool zero_pq = params.p == 0 || params.q == 0;
    if (zero_pq && !extended) {
        verdict.kind = ConcavityVerdict::Kind::OutsideScope;
        verdict.reason = "P and Q must be nonzero (extended mode admits them)";
        return verdict;
    }
    verdict.hypothesis_relaxed = zero_pq;
    if (d == 0) {
        verdict.kind = ConcavityVerdict::Kind::InfinitelyLogConcave;
        verdict.certificate = ConcavityVerdict::Certificate::RepeatedRoot;
        verdict.s = params.p / 2;
        return verdict;
    }
    if (params.q >= 0) {
        verdict.kind = ConcavityVerdict::Kind::InfinitelyLogConcave;
        verdict.certificate = ConcavityVerdict::Certificate::NonnegativeQ;
        // D > 0 forces P^2 > 4Q, so only the sign of P separates the
        // two square-root-free branches of the bound.
        verdict.p_above_bound = params.p > 0;
        return verdict;
    }
    // Q < 0: the image's sign alternates, so a negative entry exists.
    // Rescan raw recurrence values for the first one (it is n = 2,
    // where the image equals Q, but the witness is recomputed, not
    // assumed).
    Integer prev(0);  // U_{n-1}
    Integer cur(1);   // U_n
    for (long long n = 1;; ++n) {
        const Integer next = params.p * cur - params.q * prev;  // U_{n+1}
        const Integer image = cur * cur - prev * next;
        if (image < 0) {
            verdict.kind = ConcavityVerdict::Kind::NotOneFold;
            verdict.witness_index = n;
            verdict.witness_value = image;
            return verdict;
        }
        prev = cur;
        cur = next;
    }
}

// Cassini's identity, F_{n-1} F_{n+1} - F_n^2 = (-1)^n, checked exactly
// against iterated Fibonacci values for n = 1..horizon.
inline bool cassini_check(long long horizon) {
    if (horizon < 1) {
        throw std::invalid_argument("horizon must be >= 1");
    }
    Integer prev(0);   // F_{n-1}
    Integer cur(1);    // F_n
    Integer sign(-1);  // (-1)^n at n = 1
    for (long long n = 1; n <= horizon; ++n) {
        const Integer next = prev + cur;
        if (prev * next - cur * cur != sign) {
            return false;
        }
        sign = -sign;
        prev = cur;
        cur = next;
    }
    return true;
}

}  // namespace logconcave
