#pragma once

// Sequence sources and finite windows. Sources describe infinite (or
// zero-padded finite) integer sequences; value_at is the ground-truth
// evaluator every closed form in this library is checked against.
// Index convention: a_n = 0 for n < 0, and a finite explicit sequence
// is 0 beyond its last given index.

#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "logconcave/integer.hpp"

namespace logconcave {

struct Constant {
    Integer k;

    explicit Constant(Integer k_) : k(std::move(k_)) {}
};

// a_n = k * b^n, k and b nonzero.
struct Geometric {
    Integer k;
    Integer b;

    Geometric(Integer k_, Integer b_) : k(std::move(k_)), b(std::move(b_)) {
        if (k == 0 || b == 0) {
            throw std::domain_error("geometric sequence needs nonzero k and b");
        }
    }
};

// Lucas sequence of the first kind: U_0 = 0, U_1 = 1,
// U_n = P*U_{n-1} - Q*U_{n-2}, with P^2 - 4Q >= 0. The standard
// definition also requires P and Q nonzero; `extended` relaxes that for
// boundary probing, and verdicts derived from such sources are labeled
// as outside the standard hypothesis.
struct Lucas {
    Integer p;
    Integer q;
    bool extended;

    Lucas(Integer p_, Integer q_, bool extended_ = false)
        : p(std::move(p_)), q(std::move(q_)), extended(extended_) {
        if (p * p - 4 * q < 0) {
            throw std::domain_error("Lucas sequence needs P^2 - 4Q >= 0");
        }
        if (!extended && (p == 0 || q == 0)) {
            throw std::domain_error(
                "Lucas sequence needs nonzero P and Q (use extended mode to relax)");
        }
    }
};

// a_n = n * S^{n-1}: the D = 0 Lucas family written out, P = 2S, Q = S^2.
struct PolyGeo {
    Integer s;
    bool extended;

    explicit PolyGeo(Integer s_, bool extended_ = false)
        : s(std::move(s_)), extended(extended_) {
        if (!extended && s == 0) {
            throw std::domain_error("polygeo sequence needs nonzero S");
        }
    }
};

struct Explicit {
    std::vector<Integer> values;

    explicit Explicit(std::vector<Integer> values_) : values(std::move(values_)) {}
};

using SeqSource = std::variant<Constant, Geometric, Lucas, PolyGeo, Explicit>;

inline std::string describe(const SeqSource& src) {
    struct Visitor {
        std::string operator()(const Constant& c) const {
            return "constant(" + c.k.get_str() + ")";
        }
        std::string operator()(const Geometric& g) const {
            return "geometric(" + g.k.get_str() + "," + g.b.get_str() + ")";
        }
        std::string operator()(const Lucas& l) const {
            return "lucas(" + l.p.get_str() + "," + l.q.get_str() + ")";
        }
        std::string operator()(const PolyGeo& p) const {
            return "polygeo(" + p.s.get_str() + ")";
        }
        std::string operator()(const Explicit& e) const {
            return "explicit(n=" + std::to_string(e.values.size()) + ")";
        }
    };
    return std::visit(Visitor{}, src);
}

// Exact value of the source at any index; negative indices are 0.
// Lucas values come from forward iteration of the recurrence, which is
// the oracle the Binet closed form is verified against.
inline Integer value_at(const SeqSource& src, long long n) {
    if (n < 0) {
        return Integer(0);
    }
    struct Visitor {
        long long n;
        Integer operator()(const Constant& c) const { return c.k; }
        Integer operator()(const Geometric& g) const {
            return g.k * int_pow(g.b, static_cast<unsigned long>(n));
        }
        Integer operator()(const Lucas& l) const {
            Integer prev(0);  // U_0
            Integer cur(1);   // U_1
            if (n == 0) {
                return prev;
            }
            for (long long i = 1; i < n; ++i) {
                Integer next = l.p * cur - l.q * prev;
                prev = std::move(cur);
                cur = std::move(next);
            }
            return cur;
        }
        Integer operator()(const PolyGeo& p) const {
            if (n == 0) {
                return Integer(0);
            }
            return Integer(static_cast<long>(n)) *
                   int_pow(p.s, static_cast<unsigned long>(n - 1));
        }
        Integer operator()(const Explicit& e) const {
            if (static_cast<std::size_t>(n) >= e.values.size()) {
                return Integer(0);
            }
            return e.values[static_cast<std::size_t>(n)];
        }
    };
    return std::visit(Visitor{n}, src);
}

// Behavior past the last stored index. Truncate windows are simply not
// evaluable there; Extendable windows ask their backing generator.
enum class RightPolicy { Truncate, Extendable };

// A finite exact slice a_0..a_N. Reads at negative indices return 0.
// Windows are immutable once built; copies share the backing extension.
class SeqWindow {
  public:
    using Extension = std::function<Integer(long long)>;

    SeqWindow(std::vector<Integer> values, std::string base_desc, RightPolicy policy,
              Extension extend = {}, int log_depth = 0)
        : values_(std::move(values)),
          base_desc_(std::move(base_desc)),
          policy_(policy),
          extend_(std::move(extend)),
          log_depth_(log_depth) {
        if (policy_ == RightPolicy::Extendable && !extend_) {
            throw std::invalid_argument("extendable window needs a backing generator");
        }
    }

    long long top_index() const { return static_cast<long long>(values_.size()) - 1; }
    std::size_t size() const { return values_.size(); }
    bool empty() const { return values_.empty(); }
    RightPolicy right_policy() const { return policy_; }
    const std::vector<Integer>& values() const { return values_; }
    int log_depth() const { return log_depth_; }
    const std::string& base_description() const { return base_desc_; }

    std::string provenance() const {
        if (log_depth_ == 0) {
            return base_desc_;
        }
        return "derived by L^" + std::to_string(log_depth_) + " from " + base_desc_;
    }

    Integer at(long long n) const {
        if (n < 0) {
            return Integer(0);
        }
        if (n <= top_index()) {
            return values_[static_cast<std::size_t>(n)];
        }
        if (policy_ == RightPolicy::Extendable) {
            return extend_(n);
        }
        throw std::out_of_range("index " + std::to_string(n) +
                                " beyond truncated window of " + provenance());
    }

  private:
    std::vector<Integer> values_;
    std::string base_desc_;
    RightPolicy policy_;
    Extension extend_;
    int log_depth_;
};

// Window of values at indices 0..N. Generator-backed sources stay
// extendable past N; explicit sources truncate (their zero tail is
// still reachable through value_at when a caller wants zero-fill).
inline SeqWindow generate(const SeqSource& src, long long n_top) {
    if (n_top < 0) {
        throw std::invalid_argument("window horizon must be >= 0");
    }
    std::vector<Integer> values;
    values.reserve(static_cast<std::size_t>(n_top) + 1);
    for (long long n = 0; n <= n_top; ++n) {
        values.push_back(value_at(src, n));
    }
    const bool is_explicit = std::holds_alternative<Explicit>(src);
    if (is_explicit) {
        return SeqWindow(std::move(values), describe(src), RightPolicy::Truncate);
    }
    return SeqWindow(std::move(values), describe(src), RightPolicy::Extendable,
                     [src](long long n) { return value_at(src, n); });
}

// Same slice, but an explicit source keeps extending by its zero tail
// instead of truncating, matching the all-indices zero-fill convention
// value_at already uses.
inline SeqWindow generate_zero_fill(const SeqSource& src, long long n_top) {
    if (n_top < 0) {
        throw std::invalid_argument("window horizon must be >= 0");
    }
    std::vector<Integer> values;
    values.reserve(static_cast<std::size_t>(n_top) + 1);
    for (long long n = 0; n <= n_top; ++n) {
        values.push_back(value_at(src, n));
    }
    return SeqWindow(std::move(values), describe(src), RightPolicy::Extendable,
                     [src](long long n) { return value_at(src, n); });
}

}  // namespace logconcave
