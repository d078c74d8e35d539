#pragma once

// Empirical log-concavity survey for linear recurrences of order m,
//
//     a_n = k_1 a_{n-1} + ... + k_m a_{n-m},
//
// with explicit initial values a_0..a_{m-1}. The order-2 case with
// init [0,1] is exactly the Lucas family (P, Q) = (k_1, -k_2), and
// grid reports for those cells carry the exact verdict alongside the
// empirical one so disagreements surface as anomalies.

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "logconcave/integer.hpp"
#include "logconcave/logop.hpp"
#include "logconcave/lucas.hpp"
#include "logconcave/sequence.hpp"

namespace logconcave {

class limit_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct RecurrenceSpec {
    std::vector<Integer> coeffs;  // k_1..k_m, applied to a_{n-1}..a_{n-m}
    std::vector<Integer> init;    // a_0..a_{m-1}

    RecurrenceSpec(std::vector<Integer> coefficients, std::vector<Integer> initial)
        : coeffs(std::move(coefficients)), init(std::move(initial)) {
        if (coeffs.empty()) {
            throw std::invalid_argument("recurrence needs at least one coefficient");
        }
        if (init.size() != coeffs.size()) {
            throw std::invalid_argument("recurrence of order " + std::to_string(coeffs.size()) +
                                        " needs exactly that many initial values, got " +
                                        std::to_string(init.size()));
        }
    }

    int order() const { return static_cast<int>(coeffs.size()); }

    friend bool operator==(const RecurrenceSpec& a, const RecurrenceSpec& b) {
        return a.coeffs == b.coeffs && a.init == b.init;
    }
};

inline std::string describe(const RecurrenceSpec& spec) {
    std::ostringstream out;
    out << "recurrence(k=[";
    for (std::size_t i = 0; i < spec.coeffs.size(); ++i) {
        out << (i ? "," : "") << spec.coeffs[i].get_str();
    }
    out << "], init=[";
    for (std::size_t i = 0; i < spec.init.size(); ++i) {
        out << (i ? "," : "") << spec.init[i].get_str();
    }
    out << "])";
    return out.str();
}

// a_n for a single index; zero left extension below 0, initial block,
// then forward iteration.
inline Integer rec_value_at(const RecurrenceSpec& spec, long long n) {
    if (n < 0) {
        return Integer(0);
    }
    const int m = spec.order();
    if (n < m) {
        return spec.init[static_cast<std::size_t>(n)];
    }
    std::vector<Integer> window = spec.init;  // a_{i-m}..a_{i-1}
    for (long long i = m; i <= n; ++i) {
        Integer next(0);
        for (int j = 0; j < m; ++j) {
            next += spec.coeffs[static_cast<std::size_t>(j)] *
                    window[static_cast<std::size_t>(m - 1 - j)];
        }
        window.erase(window.begin());
        window.push_back(std::move(next));
    }
    return window.back();
}

// Materializes a_0..a_top into an extendable window.
inline SeqWindow evaluate_rec(const RecurrenceSpec& spec, long long top) {
    const int m = spec.order();
    if (top < m) {
        throw std::invalid_argument("window must cover at least one recurrence step (top >= " +
                                    std::to_string(m) + ")");
    }
    std::vector<Integer> values = spec.init;
    values.reserve(static_cast<std::size_t>(top) + 1);
    for (long long n = m; n <= top; ++n) {
        Integer next(0);
        for (int j = 0; j < m; ++j) {
            next += spec.coeffs[static_cast<std::size_t>(j)] *
                    values[static_cast<std::size_t>(n - 1 - j)];
        }
        values.push_back(std::move(next));
    }
    return SeqWindow(std::move(values), describe(spec), RightPolicy::Extendable,
                     [spec](long long n) { return rec_value_at(spec, n); });
}

struct DepthStatus {
    int depth = 0;
    bool nonnegative = true;
    long long horizon = 0;  // scanned 0..horizon
    long long failure_index = -1;
    Integer failure_value{0};

    friend bool operator==(const DepthStatus& a, const DepthStatus& b) {
        return a.depth == b.depth && a.nonnegative == b.nonnegative && a.horizon == b.horizon &&
               a.failure_index == b.failure_index && a.failure_value == b.failure_value;
    }
};

struct EmpiricalReport {
    // Summary tags, mutually exclusive:
    //   FailsAtDepth    -- some iterate has a negative entry; disproof.
    //   Degenerate      -- the base window ends in m zeros, so the
    //                      sequence is eventually zero and every deeper
    //                      iterate is eventually zero too.
    //   LooksInfConcave -- every scanned iterate is nonnegative AND the
    //                      evidence is strong: a stationary shape was
    //                      certified, or at least 8 iterates were checked.
    //   Inconclusive    -- nonnegative so far, but too few iterates and
    //                      no certificate; evidence, not a claim.
    enum class Tag { LooksInfConcave, FailsAtDepth, Degenerate, Inconclusive };

    RecurrenceSpec spec{{Integer(1)}, {Integer(1)}};
    long long horizon = 0;
    int max_depth = 0;
    std::vector<DepthStatus> statuses;  // depth 1..max_depth, all scanned
    Tag tag = Tag::Inconclusive;
    int fail_depth = -1;               // first failing depth, or -1
    int certificate_depth = -1;        // first iterate with a stationary shape, or -1
    std::string certificate_shape;     // "", "all-zero", "finite-support", "geometric-tail"
    std::optional<ConcavityVerdict> lucas_verdict;  // order 2, init [0,1] only
    bool anomaly = false;              // exact verdict contradicts the empirical scan

    static std::string tag_name(Tag t) {
        switch (t) {
            case Tag::LooksInfConcave: return "looks-inf-concave";
            case Tag::FailsAtDepth: return "fails-at-depth";
            case Tag::Degenerate: return "degenerate";
            case Tag::Inconclusive: return "inconclusive";
        }
        return "";
    }

    friend bool operator==(const EmpiricalReport& a, const EmpiricalReport& b) {
        return a.spec == b.spec && a.horizon == b.horizon && a.max_depth == b.max_depth &&
               a.statuses == b.statuses && a.tag == b.tag && a.fail_depth == b.fail_depth &&
               a.certificate_depth == b.certificate_depth &&
               a.certificate_shape == b.certificate_shape &&
               a.lucas_verdict == b.lucas_verdict && a.anomaly == b.anomaly;
    }
};

// Scans L^1..L^imax of the recurrence over 0..horizon. The base window
// is materialized out to horizon + imax so every scanned entry is exact.
inline EmpiricalReport empirical_classify(const RecurrenceSpec& spec, long long horizon,
                                          int imax) {
    const int m = spec.order();
    if (imax < 1) {
        throw std::invalid_argument("need at least one iterate");
    }
    if (horizon < m + imax) {
        throw std::invalid_argument("horizon must be >= order + iterates = " +
                                    std::to_string(m + imax));
    }

    EmpiricalReport report;
    report.spec = spec;
    report.horizon = horizon;
    report.max_depth = imax;

    std::vector<Integer> cur;
    cur.reserve(static_cast<std::size_t>(horizon + imax) + 1);
    for (long long n = 0; n <= horizon + imax; ++n) {
        cur.push_back(rec_value_at(spec, n));
    }
    // m consecutive zeros force everything after them to zero, so an
    // eventually-zero base always shows m trailing zeros here.
    bool eventually_zero = true;
    for (std::size_t i = cur.size() - static_cast<std::size_t>(m); i < cur.size(); ++i) {
        eventually_zero = eventually_zero && cur[i] == 0;
    }

    for (int depth = 1; depth <= imax; ++depth) {
        cur = log_image(cur);
        DepthStatus status;
        status.depth = depth;
        status.horizon = horizon;
        for (long long n = 0; n <= horizon; ++n) {
            if (cur[static_cast<std::size_t>(n)] < 0) {
                status.nonnegative = false;
                status.failure_index = n;
                status.failure_value = cur[static_cast<std::size_t>(n)];
                break;
            }
        }
        if (!status.nonnegative && report.fail_depth < 0) {
            report.fail_depth = depth;
        }
        if (status.nonnegative && report.certificate_depth < 0) {
            const std::vector<Integer> scanned(cur.begin(),
                                               cur.begin() + static_cast<long long>(horizon) + 1);
            if (auto cert = classify_shape(scanned)) {
                report.certificate_depth = depth;
                report.certificate_shape = cert->shape_name();
            }
        }
        report.statuses.push_back(std::move(status));
    }

    if (report.fail_depth >= 0) {
        report.tag = EmpiricalReport::Tag::FailsAtDepth;
    } else if (eventually_zero) {
        report.tag = EmpiricalReport::Tag::Degenerate;
    } else if (report.certificate_depth >= 0 || imax >= 8) {
        report.tag = EmpiricalReport::Tag::LooksInfConcave;
    } else {
        report.tag = EmpiricalReport::Tag::Inconclusive;
    }

    // Order-2 Lucas cells get the exact verdict alongside the scan.
    if (m == 2 && spec.init[0] == 0 && spec.init[1] == 1) {
        const ConcavityVerdict verdict =
            classify(LucasParams{spec.coeffs[0], -spec.coeffs[1]}, /*extended=*/true);
        report.lucas_verdict = verdict;
        if (verdict.kind == ConcavityVerdict::Kind::InfinitelyLogConcave) {
            report.anomaly = report.fail_depth >= 0;
        } else if (verdict.kind == ConcavityVerdict::Kind::NotOneFold) {
            const DepthStatus& first = report.statuses.front();
            report.anomaly = first.nonnegative ||
                             first.failure_index != verdict.witness_index ||
                             first.failure_value != verdict.witness_value;
        }
    }
    return report;
}

// Exhaustive scan over all coefficient tuples (k_1..k_m) with each
// k_i in [lo, hi], in lexicographic order with k_1 slowest. An empty
// `init` means the canonical start [0,...,0,1]. Desk-scale guardrails:
// order at most 4 and at most 21 values per coefficient.
inline std::vector<EmpiricalReport> grid_search(int order, const Integer& lo, const Integer& hi,
                                                std::vector<Integer> init, long long horizon,
                                                int imax) {
    if (order < 1) {
        throw std::invalid_argument("order must be >= 1");
    }
    if (lo > hi) {
        throw std::invalid_argument("empty coefficient range");
    }
    if (order > 4) {
        throw limit_error("order " + std::to_string(order) + " exceeds the grid limit of 4");
    }
    const Integer span = hi - lo + 1;
    if (span > 21) {
        throw limit_error("coefficient range [" + lo.get_str() + ".." + hi.get_str() +
                          "] exceeds the grid limit of 21 values");
    }
    if (init.empty()) {
        init.assign(static_cast<std::size_t>(order), Integer(0));
        init.back() = 1;
    }
    if (static_cast<int>(init.size()) != order) {
        throw std::invalid_argument("initial values must match the order");
    }

    std::vector<EmpiricalReport> reports;
    std::vector<Integer> coeffs(static_cast<std::size_t>(order), lo);
    for (;;) {
        reports.push_back(empirical_classify(RecurrenceSpec(coeffs, init), horizon, imax));
        int pos = order - 1;
        while (pos >= 0) {
            coeffs[static_cast<std::size_t>(pos)] += 1;
            if (coeffs[static_cast<std::size_t>(pos)] <= hi) {
                break;
            }
            coeffs[static_cast<std::size_t>(pos)] = lo;
            --pos;
        }
        if (pos < 0) {
            break;
        }
    }
    return reports;
}

}  // namespace logconcave
