#pragma once

// The log-operator L(a)_n = a_n^2 - a_{n-1} * a_{n+1}, its iterates,
// finite-horizon k-fold nonnegativity verdicts, and recognition of
// window shapes that provably stay nonnegative under further
// applications of L.
//
// A NonnegativeUpTo verdict is empirical evidence up to (depth, horizon),
// never a proof; a Failure verdict is a disproof and carries a witness.

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "logconcave/integer.hpp"
#include "logconcave/sequence.hpp"

namespace logconcave {

// One application of L to a window. Index 0 sees the zero left
// extension, so the image starts with a_0^2. A truncated window loses
// its top index (the image there would need an unavailable neighbor);
// an extendable window keeps its full range and stays extendable.
inline SeqWindow apply_log(const SeqWindow& w) {
    if (w.empty()) {
        throw std::invalid_argument("log-operator needs a nonempty window");
    }
    const bool truncate = w.right_policy() == RightPolicy::Truncate;
    const long long out_top = truncate ? w.top_index() - 1 : w.top_index();
    std::vector<Integer> out;
    out.reserve(static_cast<std::size_t>(out_top + 1));
    for (long long n = 0; n <= out_top; ++n) {
        out.push_back(w.at(n) * w.at(n) - w.at(n - 1) * w.at(n + 1));
    }
    if (truncate) {
        return SeqWindow(std::move(out), w.base_description(), RightPolicy::Truncate, {},
                         w.log_depth() + 1);
    }
    auto parent = std::make_shared<const SeqWindow>(w);
    return SeqWindow(
        std::move(out), w.base_description(), RightPolicy::Extendable,
        // The explicit return type matters: it forces the gmpxx
        // expression template to collapse while the at() temporaries
        // are still alive.
        [parent](long long n) -> Integer {
            return parent->at(n) * parent->at(n) - parent->at(n - 1) * parent->at(n + 1);
        },
        w.log_depth() + 1);
}

// i-fold composition of apply_log.
inline SeqWindow apply_log_k(const SeqWindow& w, int iterations) {
    if (iterations < 1) {
        throw std::invalid_argument("iteration count must be >= 1");
    }
    SeqWindow cur = w;
    for (int i = 0; i < iterations; ++i) {
        cur = apply_log(cur);  // throws once a truncated window is exhausted
    }
    return cur;
}

// L on materialized values a_0..a_T with the zero left extension.
// The image covers 0..T-1: each entry needs its right neighbor.
inline std::vector<Integer> log_image(const std::vector<Integer>& a) {
    if (a.empty()) {
        throw std::invalid_argument("log-operator needs a nonempty window");
    }
    std::vector<Integer> out;
    out.reserve(a.size() - 1);
    for (std::size_t n = 0; n + 1 < a.size(); ++n) {
        Integer b = a[n] * a[n];
        if (n > 0) {
            b -= a[n - 1] * a[n + 1];
        }
        out.push_back(std::move(b));
    }
    return out;
}

struct FoldVerdict {
    enum class Kind { NonnegativeUpTo, Failure };

    Kind kind = Kind::NonnegativeUpTo;
    int depth = 0;           // success: deepest depth verified; failure: the failing depth
    long long horizon = 0;   // requested horizon
    std::vector<long long> depth_horizons;  // effective scan horizon per depth 1..depth
    long long failure_index = -1;
    Integer failure_value{0};  // strictly negative when kind == Failure

    bool nonnegative() const { return kind == Kind::NonnegativeUpTo; }

    std::string describe() const {
        if (kind == Kind::NonnegativeUpTo) {
            return "L^1..L^" + std::to_string(depth) + " nonnegative over 0.." +
                   std::to_string(horizon) + " (not a proof)";
        }
        return "L^" + std::to_string(depth) + " is negative at n = " +
               std::to_string(failure_index) + ": value " + failure_value.get_str();
    }
};

// Scans L^i over 0..horizon for i = 1..depth, depth-major then
// index-major, and reports the first strictly negative entry. With the
// default Extendable policy the source supplies `depth` extra base
// values so no right-edge artifact is possible; with Truncate the
// evaluable range shrinks per application and the verdict records the
// effective horizon per depth.
inline FoldVerdict check_k_fold(const SeqSource& src, int depth, long long horizon,
                                RightPolicy policy = RightPolicy::Extendable) {
    if (depth < 1) {
        throw std::invalid_argument("depth must be >= 1");
    }
    if (horizon < 1) {
        throw std::invalid_argument("horizon must be >= 1");
    }
    long long base_top = horizon + depth;
    if (policy == RightPolicy::Truncate) {
        base_top = horizon;
        if (const auto* e = std::get_if<Explicit>(&src)) {
            base_top = std::min(horizon, static_cast<long long>(e->values.size()) - 1);
        }
    }
    std::vector<Integer> cur;
    cur.reserve(static_cast<std::size_t>(base_top) + 1);
    for (long long n = 0; n <= base_top; ++n) {
        cur.push_back(value_at(src, n));
    }

    FoldVerdict verdict;
    verdict.horizon = horizon;
    for (int i = 1; i <= depth; ++i) {
        if (cur.size() < 2) {
            throw std::invalid_argument("window of " + describe(src) +
                                        " exhausted before depth " + std::to_string(i));
        }
        cur = log_image(cur);
        const long long scan_top = std::min(horizon, static_cast<long long>(cur.size()) - 1);
        verdict.depth_horizons.push_back(scan_top);
        for (long long n = 0; n <= scan_top; ++n) {
            if (cur[static_cast<std::size_t>(n)] < 0) {
                verdict.kind = FoldVerdict::Kind::Failure;
                verdict.depth = i;
                verdict.failure_index = n;
                verdict.failure_value = cur[static_cast<std::size_t>(n)];
                return verdict;
            }
        }
    }
    verdict.kind = FoldVerdict::Kind::NonnegativeUpTo;
    verdict.depth = depth;
    return verdict;
}

// A window shape that provably keeps producing nonnegative windows
// under L:
//   AllZero       -- L-invariant fixed point.
//   FiniteSupport -- nonzero only at one or two adjacent indices, all
//                    positive; L maps it to squares at the same support.
//   GeometricTail -- zeros, then k*r^(n-t) with k > 0, r > 0; one more
//                    application collapses it to a single support point.
struct StationaryCertificate {
    enum class Shape { AllZero, FiniteSupport, GeometricTail };

    Shape shape = Shape::AllZero;
    long long support_start = 0;
    std::vector<Integer> support_values;  // FiniteSupport: one or two entries
    Integer scale{0};                     // GeometricTail: value at support_start
    Integer ratio{0};                     // GeometricTail
    long long horizon = 0;                // shape verified over 0..horizon
    bool fixed_point = false;             // window literally maps to itself

    std::string shape_name() const {
        switch (shape) {
            case Shape::AllZero: return "all-zero";
            case Shape::FiniteSupport: return "finite-support";
            case Shape::GeometricTail: return "geometric-tail";
        }
        return "";
    }

    std::string describe() const {
        switch (shape) {
            case Shape::AllZero:
                return "all-zero window, an L-invariant fixed point";
            case Shape::FiniteSupport: {
                std::string vals;
                for (const Integer& v : support_values) {
                    vals += (vals.empty() ? "" : ",") + v.get_str();
                }
                return "support [" + vals + "] at n = " + std::to_string(support_start) +
                       ", zero elsewhere; L squares the support in place" +
                       (fixed_point ? " (literal fixed point)" : "");
            }
            case Shape::GeometricTail:
                return "zeros before n = " + std::to_string(support_start) + ", then " +
                       scale.get_str() + " * " + ratio.get_str() + "^(n-" +
                       std::to_string(support_start) +
                       "); one application of L collapses it to a single support point";
        }
        return "";
    }
};

// Recognizes the certificate shapes on materialized values. Any
// negative entry disqualifies the window outright.
inline std::optional<StationaryCertificate> classify_shape(const std::vector<Integer>& v) {
    long long first = -1;
    long long last = -1;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0) {
            return std::nullopt;
        }
        if (v[i] != 0) {
            if (first < 0) {
                first = static_cast<long long>(i);
            }
            last = static_cast<long long>(i);
        }
    }
    StationaryCertificate cert;
    cert.horizon = static_cast<long long>(v.size()) - 1;
    if (first < 0) {
        cert.shape = StationaryCertificate::Shape::AllZero;
        cert.fixed_point = true;
        return cert;
    }
    if (last - first <= 1) {
        cert.shape = StationaryCertificate::Shape::FiniteSupport;
        cert.support_start = first;
        cert.fixed_point = true;
        for (long long i = first; i <= last; ++i) {
            cert.support_values.push_back(v[static_cast<std::size_t>(i)]);
            cert.fixed_point = cert.fixed_point && v[static_cast<std::size_t>(i)] == 1;
        }
        return cert;
    }
    // Geometric tail: constant exact ratio from the first nonzero entry
    // through the end of the window.
    const Integer& scale = v[static_cast<std::size_t>(first)];
    const Integer& second = v[static_cast<std::size_t>(first) + 1];
    if (second == 0 || !mpz_divisible_p(second.get_mpz_t(), scale.get_mpz_t())) {
        return std::nullopt;
    }
    Integer ratio = second / scale;
    for (std::size_t n = static_cast<std::size_t>(first); n + 1 < v.size(); ++n) {
        if (v[n + 1] != v[n] * ratio) {
            return std::nullopt;
        }
    }
    cert.shape = StationaryCertificate::Shape::GeometricTail;
    cert.support_start = first;
    cert.scale = scale;
    cert.ratio = ratio;
    cert.fixed_point = false;
    return cert;
}

// Applies L once over 0..horizon and reports a certificate if the image
// is one of the self-resolving shapes above.
inline std::optional<StationaryCertificate> detect_stationary(const SeqSource& src,
                                                              long long horizon) {
    if (horizon < 2) {
        throw std::invalid_argument("stationary detection needs horizon >= 2");
    }
    std::vector<Integer> base;
    base.reserve(static_cast<std::size_t>(horizon) + 2);
    for (long long n = 0; n <= horizon + 1; ++n) {
        base.push_back(value_at(src, n));
    }
    auto cert = classify_shape(log_image(base));
    if (cert) {
        cert->horizon = horizon;
    }
    return cert;
}

}  // namespace logconcave
