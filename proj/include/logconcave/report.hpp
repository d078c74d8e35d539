#pragma once

// Report serialization and rendering: JSON Lines for machines (one
// report object per line, integers as decimal strings so nothing is
// clipped to doubles), fixed-width text for humans, and the verdict
// table for the named order-2 sequences.

#include <iomanip>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "logconcave/explorer.hpp"
#include "logconcave/integer.hpp"
#include "logconcave/lucas.hpp"

namespace logconcave {

namespace detail {

inline nlohmann::json integers_to_json(const std::vector<Integer>& values) {
    nlohmann::json out = nlohmann::json::array();
    for (const Integer& v : values) {
        out.push_back(v.get_str());
    }
    return out;
}

inline std::vector<Integer> integers_from_json(const nlohmann::json& array) {
    std::vector<Integer> out;
    for (const auto& v : array) {
        out.push_back(parse_integer(v.get<std::string>()));
    }
    return out;
}

}  // namespace detail

inline std::string kind_name(ConcavityVerdict::Kind kind) {
    switch (kind) {
        case ConcavityVerdict::Kind::InfinitelyLogConcave: return "infinitely-log-concave";
        case ConcavityVerdict::Kind::NotOneFold: return "not-1-fold";
        case ConcavityVerdict::Kind::OutsideScope: return "outside-scope";
    }
    return "";
}

inline ConcavityVerdict::Kind kind_from_name(const std::string& name) {
    if (name == "infinitely-log-concave") return ConcavityVerdict::Kind::InfinitelyLogConcave;
    if (name == "not-1-fold") return ConcavityVerdict::Kind::NotOneFold;
    if (name == "outside-scope") return ConcavityVerdict::Kind::OutsideScope;
    throw std::invalid_argument("unknown verdict kind '" + name + "'");
}

inline nlohmann::json verdict_to_json(const ConcavityVerdict& verdict) {
    nlohmann::json out;
    out["p"] = verdict.params.p.get_str();
    out["q"] = verdict.params.q.get_str();
    out["kind"] = kind_name(verdict.kind);
    out["hypothesis_relaxed"] = verdict.hypothesis_relaxed;
    switch (verdict.kind) {
        case ConcavityVerdict::Kind::InfinitelyLogConcave:
            if (verdict.certificate == ConcavityVerdict::Certificate::RepeatedRoot) {
                out["certificate"] = "repeated-root";
                out["s"] = verdict.s.get_str();
            } else {
                out["certificate"] = "nonnegative-q";
                out["p_above_bound"] = verdict.p_above_bound;
            }
            break;
        case ConcavityVerdict::Kind::NotOneFold:
            out["witness_index"] = verdict.witness_index;
            out["witness_value"] = verdict.witness_value.get_str();
            break;
        case ConcavityVerdict::Kind::OutsideScope:
            out["reason"] = verdict.reason;
            break;
    }
    return out;
}

inline ConcavityVerdict verdict_from_json(const nlohmann::json& in) {
    ConcavityVerdict verdict;
    verdict.params.p = parse_integer(in.at("p").get<std::string>());
    verdict.params.q = parse_integer(in.at("q").get<std::string>());
    verdict.kind = kind_from_name(in.at("kind").get<std::string>());
    verdict.hypothesis_relaxed = in.at("hypothesis_relaxed").get<bool>();
    switch (verdict.kind) {
        case ConcavityVerdict::Kind::InfinitelyLogConcave: {
            const std::string cert = in.at("certificate").get<std::string>();
            if (cert == "repeated-root") {
                verdict.certificate = ConcavityVerdict::Certificate::RepeatedRoot;
                verdict.s = parse_integer(in.at("s").get<std::string>());
            } else if (cert == "nonnegative-q") {
                verdict.certificate = ConcavityVerdict::Certificate::NonnegativeQ;
                verdict.p_above_bound = in.at("p_above_bound").get<bool>();
            } else {
                throw std::invalid_argument("unknown certificate '" + cert + "'");
            }
            break;
        }
        case ConcavityVerdict::Kind::NotOneFold:
            verdict.witness_index = in.at("witness_index").get<long long>();
            verdict.witness_value = parse_integer(in.at("witness_value").get<std::string>());
            break;
        case ConcavityVerdict::Kind::OutsideScope:
            verdict.reason = in.at("reason").get<std::string>();
            break;
    }
    return verdict;
}

inline EmpiricalReport::Tag tag_from_name(const std::string& name) {
    if (name == "looks-inf-concave") return EmpiricalReport::Tag::LooksInfConcave;
    if (name == "fails-at-depth") return EmpiricalReport::Tag::FailsAtDepth;
    if (name == "degenerate") return EmpiricalReport::Tag::Degenerate;
    if (name == "inconclusive") return EmpiricalReport::Tag::Inconclusive;
    throw std::invalid_argument("unknown report tag '" + name + "'");
}

inline nlohmann::json report_to_json(const EmpiricalReport& report) {
    nlohmann::json out;
    out["coeffs"] = detail::integers_to_json(report.spec.coeffs);
    out["init"] = detail::integers_to_json(report.spec.init);
    out["horizon"] = report.horizon;
    out["max_depth"] = report.max_depth;
    nlohmann::json statuses = nlohmann::json::array();
    for (const DepthStatus& s : report.statuses) {
        nlohmann::json row;
        row["depth"] = s.depth;
        row["nonnegative"] = s.nonnegative;
        row["horizon"] = s.horizon;
        if (!s.nonnegative) {
            row["index"] = s.failure_index;
            row["value"] = s.failure_value.get_str();
        }
        statuses.push_back(std::move(row));
    }
    out["statuses"] = std::move(statuses);
    out["tag"] = EmpiricalReport::tag_name(report.tag);
    if (report.fail_depth >= 0) {
        out["fail_depth"] = report.fail_depth;
    }
    if (report.certificate_depth >= 0) {
        out["certificate_depth"] = report.certificate_depth;
        out["certificate_shape"] = report.certificate_shape;
    }
    if (report.lucas_verdict) {
        out["verdict"] = verdict_to_json(*report.lucas_verdict);
    }
    out["anomaly"] = report.anomaly;
    return out;
}

inline EmpiricalReport report_from_json(const nlohmann::json& in) {
    EmpiricalReport report;
    report.spec = RecurrenceSpec(detail::integers_from_json(in.at("coeffs")),
                                 detail::integers_from_json(in.at("init")));
    report.horizon = in.at("horizon").get<long long>();
    report.max_depth = in.at("max_depth").get<int>();
    for (const auto& row : in.at("statuses")) {
        DepthStatus s;
        s.depth = row.at("depth").get<int>();
        s.nonnegative = row.at("nonnegative").get<bool>();
        s.horizon = row.at("horizon").get<long long>();
        if (!s.nonnegative) {
            s.failure_index = row.at("index").get<long long>();
            s.failure_value = parse_integer(row.at("value").get<std::string>());
        }
        report.statuses.push_back(std::move(s));
    }
    report.tag = tag_from_name(in.at("tag").get<std::string>());
    report.fail_depth = in.value("fail_depth", -1);
    report.certificate_depth = in.value("certificate_depth", -1);
    report.certificate_shape = in.value("certificate_shape", std::string());
    if (in.contains("verdict")) {
        report.lucas_verdict = verdict_from_json(in.at("verdict"));
    }
    report.anomaly = in.at("anomaly").get<bool>();
    return report;
}

// One compact JSON object per line; no pretty-printing, so the stream
// stays greppable and splittable.
inline void write_reports(std::ostream& out, const std::vector<EmpiricalReport>& reports) {
    for (const EmpiricalReport& r : reports) {
        out << report_to_json(r).dump() << "\n";
    }
}

inline std::vector<EmpiricalReport> read_reports(std::istream& in) {
    std::vector<EmpiricalReport> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t") == std::string::npos) {
            continue;
        }
        out.push_back(report_from_json(nlohmann::json::parse(line)));
    }
    return out;
}

inline std::string coeff_list(const std::vector<Integer>& values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        out += (i ? "," : "") + values[i].get_str();
    }
    return out + "]";
}

// One line per report: coefficients, tag with detail, exact verdict
// when present, trailing ANOMALY marker when the two disagree.
inline std::string render_report_line(const EmpiricalReport& report) {
    std::string line = "k=" + coeff_list(report.spec.coeffs) +
                       " init=" + coeff_list(report.spec.init) + "  " +
                       EmpiricalReport::tag_name(report.tag);
    if (report.tag == EmpiricalReport::Tag::FailsAtDepth) {
        const DepthStatus& s = report.statuses[static_cast<std::size_t>(report.fail_depth) - 1];
        line += " " + std::to_string(report.fail_depth) + " (n=" +
                std::to_string(s.failure_index) + ", value " + s.failure_value.get_str() + ")";
    } else if (report.certificate_depth >= 0) {
        line += " (certificate: " + report.certificate_shape + " at depth " +
                std::to_string(report.certificate_depth) + ")";
    }
    if (report.lucas_verdict) {
        const ConcavityVerdict& v = *report.lucas_verdict;
        line += "  exact U(" + v.params.p.get_str() + "," + v.params.q.get_str() + "): ";
        switch (v.kind) {
            case ConcavityVerdict::Kind::InfinitelyLogConcave:
                line += "infinitely log-concave";
                break;
            case ConcavityVerdict::Kind::NotOneFold:
                line += "not 1-fold (witness n=" + std::to_string(v.witness_index) + ", " +
                        v.witness_value.get_str() + ")";
                break;
            case ConcavityVerdict::Kind::OutsideScope:
                line += "outside scope (" + v.reason + ")";
                break;
        }
    }
    if (report.anomaly) {
        line += "  ANOMALY";
    }
    return line;
}

inline std::string render_report_table(const std::vector<EmpiricalReport>& reports) {
    std::string out;
    for (const EmpiricalReport& r : reports) {
        out += render_report_line(r) + "\n";
    }
    return out;
}

struct SearchSummary {
    std::size_t total = 0;
    std::size_t looks_inf = 0;
    std::size_t degenerate = 0;
    std::size_t inconclusive = 0;
    std::size_t anomalies = 0;
    std::map<int, std::size_t> fails_by_depth;
};

inline SearchSummary summarize(const std::vector<EmpiricalReport>& reports) {
    SearchSummary summary;
    summary.total = reports.size();
    for (const EmpiricalReport& r : reports) {
        switch (r.tag) {
            case EmpiricalReport::Tag::LooksInfConcave: ++summary.looks_inf; break;
            case EmpiricalReport::Tag::FailsAtDepth: ++summary.fails_by_depth[r.fail_depth]; break;
            case EmpiricalReport::Tag::Degenerate: ++summary.degenerate; break;
            case EmpiricalReport::Tag::Inconclusive: ++summary.inconclusive; break;
        }
        if (r.anomaly) {
            ++summary.anomalies;
        }
    }
    return summary;
}

inline std::string render_summary(const SearchSummary& summary) {
    std::string out = "reports: " + std::to_string(summary.total) + "\n";
    out += "looks-inf-concave: " + std::to_string(summary.looks_inf) + "\n";
    for (const auto& [depth, count] : summary.fails_by_depth) {
        out += "fails-at-depth " + std::to_string(depth) + ": " + std::to_string(count) + "\n";
    }
    out += "degenerate: " + std::to_string(summary.degenerate) + "\n";
    out += "inconclusive: " + std::to_string(summary.inconclusive) + "\n";
    out += "anomalies: " + std::to_string(summary.anomalies) + "\n";
    return out;
}

inline std::string verdict_phrase(ConcavityVerdict::Kind kind) {
    switch (kind) {
        case ConcavityVerdict::Kind::InfinitelyLogConcave: return "infinitely log-concave";
        case ConcavityVerdict::Kind::NotOneFold: return "not 1-fold log-concave";
        case ConcavityVerdict::Kind::OutsideScope: return "outside scope";
    }
    return "";
}

// Verdict table for the classical named order-2 families.
inline std::string named_sequence_table() {
    struct Row {
        const char* name;
        int p;
        int q;
    };
    static constexpr Row rows[] = {
        {"Fibonacci", 1, -1},
        {"Pell", 2, -1},
        {"Jacobsthal", 1, -2},
        {"Mersenne", 3, 2},
    };
    std::ostringstream out;
    out << std::left << std::setw(11) << "sequence" << std::right << std::setw(2) << "P"
        << std::setw(4) << "Q"
        << "  verdict\n";
    for (const Row& row : rows) {
        const ConcavityVerdict verdict = classify(LucasParams{Integer(row.p), Integer(row.q)});
        out << std::left << std::setw(11) << row.name << std::right << std::setw(2) << row.p
            << std::setw(4) << row.q << "  " << verdict_phrase(verdict.kind) << "\n";
    }
    return out.str();
}

}  // namespace logconcave
