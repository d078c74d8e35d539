// Command-line front end: classify Lucas parameters, print the named
// verdict table, generate and transform b-files, run finite k-fold
// checks, and sweep recurrence grids.
//
// Exit codes
//   0/1/2  verdict commands: infinitely log-concave (or check passed) /
//          not 1-fold (or negative entry found) / outside scope
//   64     usage errors: bad flags, bad values, impossible combinations
//   65     input data errors: unreadable or malformed b-files
//   66     grid limits exceeded
//   70     internal error
//
// stdout carries data (verdict text, b-files, reports); stderr carries
// diagnostics. No color, no progress chatter.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "logconcave/bfile.hpp"
#include "logconcave/explorer.hpp"
#include "logconcave/integer.hpp"
#include "logconcave/logop.hpp"
#include "logconcave/lucas.hpp"
#include "logconcave/report.hpp"
#include "logconcave/sequence.hpp"

namespace {

using namespace logconcave;

class input_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct SourceOptions {
    std::string p;
    std::string q;
    std::string constant;
    std::vector<std::string> geometric;
    std::string polygeo;
    std::string input;
    bool extended = false;
};

void add_source_flags(CLI::App* cmd, SourceOptions& opt) {
    cmd->add_option("-P", opt.p, "Lucas parameter P (needs -Q)");
    cmd->add_option("-Q", opt.q, "Lucas parameter Q (needs -P)");
    cmd->add_option("--constant", opt.constant, "constant sequence k,k,k,...");
    cmd->add_option("--geometric", opt.geometric, "geometric sequence k*b^n, two values: K B")
        ->expected(2);
    cmd->add_option("--polygeo", opt.polygeo, "sequence n*S^(n-1), value: S");
    cmd->add_option("--input", opt.input, "read a b-file ('-' for stdin)");
    cmd->add_flag("--extended", opt.extended, "admit zero P, Q, or S");
}

BFile read_bfile(const std::string& path) {
    if (path == "-") {
        return parse_bfile(std::cin);
    }
    std::ifstream in(path);
    if (!in) {
        throw input_error("cannot open input file: " + path);
    }
    return parse_bfile(in);
}

// Exactly one source must be selected; --input also reports the
// original b-file so callers can surface a re-basing note.
SeqSource build_source(const SourceOptions& opt, std::optional<BFile>* bfile_out = nullptr) {
    const bool lucas = !opt.p.empty() || !opt.q.empty();
    int picked = 0;
    picked += lucas ? 1 : 0;
    picked += opt.constant.empty() ? 0 : 1;
    picked += opt.geometric.empty() ? 0 : 1;
    picked += opt.polygeo.empty() ? 0 : 1;
    picked += opt.input.empty() ? 0 : 1;
    if (picked != 1) {
        throw std::invalid_argument(
            "choose exactly one source: -P/-Q, --constant, --geometric, --polygeo, or --input");
    }
    if (lucas) {
        if (opt.p.empty() || opt.q.empty()) {
            throw std::invalid_argument("Lucas sources need both -P and -Q");
        }
        return Lucas(parse_integer(opt.p), parse_integer(opt.q), opt.extended);
    }
    if (!opt.constant.empty()) {
        return Constant(parse_integer(opt.constant));
    }
    if (!opt.geometric.empty()) {
        return Geometric(parse_integer(opt.geometric[0]), parse_integer(opt.geometric[1]));
    }
    if (!opt.polygeo.empty()) {
        return PolyGeo(parse_integer(opt.polygeo), opt.extended);
    }
    BFile bfile = read_bfile(opt.input);
    if (bfile_out) {
        *bfile_out = bfile;
    }
    return to_explicit(bfile);
}

void write_bfile_to(const std::string& output, const BFile& bfile,
                    const std::vector<std::string>& comments) {
    if (output.empty()) {
        emit_bfile(std::cout, bfile, comments);
        return;
    }
    std::ofstream out(output);
    if (!out) {
        throw std::invalid_argument("cannot open output file: " + output);
    }
    emit_bfile(out, bfile, comments);
}

long long parse_count(const std::string& text, long long min_value, const std::string& flag) {
    Integer value;
    try {
        value = parse_integer(text);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument(flag + " must be an integer, got '" + text + "'");
    }
    if (!value.fits_slong_p() || value < Integer(static_cast<long>(min_value))) {
        throw std::invalid_argument(flag + " must be >= " + std::to_string(min_value));
    }
    return value.get_si();
}

std::pair<Integer, Integer> parse_range(const std::string& text) {
    const std::size_t dots = text.find("..");
    if (dots == std::string::npos) {
        throw std::invalid_argument("--range must look like LO..HI, got '" + text + "'");
    }
    return {parse_integer(text.substr(0, dots)), parse_integer(text.substr(dots + 2))};
}

std::vector<Integer> parse_integer_list(const std::string& text) {
    std::vector<Integer> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string::npos) {
            comma = text.size();
        }
        out.push_back(parse_integer(text.substr(start, comma - start)));
        start = comma + 1;
    }
    return out;
}

struct ClassifyOptions {
    std::string p;
    std::string q;
    bool extended = false;
};

int run_classify(const ClassifyOptions& opt) {
    const LucasParams params{parse_integer(opt.p), parse_integer(opt.q)};
    const ConcavityVerdict verdict = classify(params, opt.extended);
    std::cout << verdict.describe();
    switch (verdict.kind) {
        case ConcavityVerdict::Kind::InfinitelyLogConcave: return 0;
        case ConcavityVerdict::Kind::NotOneFold: return 1;
        case ConcavityVerdict::Kind::OutsideScope: return 2;
    }
    return 70;
}

struct GenOptions {
    SourceOptions source;
    std::string horizon;
    std::string output;
};

int run_gen(const GenOptions& opt) {
    std::optional<BFile> original;
    const SeqSource src = build_source(opt.source, &original);
    long long top = 0;
    if (!opt.horizon.empty()) {
        top = parse_count(opt.horizon, 0, "--horizon");
    } else if (original) {
        top = static_cast<long long>(original->values.size()) - 1;
    } else {
        throw std::invalid_argument("generator sources need --horizon");
    }
    BFile out;
    out.offset = 0;
    out.values.reserve(static_cast<std::size_t>(top) + 1);
    for (long long n = 0; n <= top; ++n) {
        out.values.push_back(value_at(src, n));
    }
    std::vector<std::string> comments = {describe(src) + ", n = 0.." + std::to_string(top)};
    if (original && original->offset != 0) {
        comments.push_back("indices re-based from start " + std::to_string(original->offset) +
                           " to 0");
    }
    write_bfile_to(opt.output, out, comments);
    return 0;
}

struct LogkOptions {
    SourceOptions source;
    std::string depth = "1";
    std::string horizon;
    bool zero_fill = false;
    std::string output;
};

int run_logk(const LogkOptions& opt) {
    std::optional<BFile> original;
    const SeqSource src = build_source(opt.source, &original);
    const int depth = static_cast<int>(parse_count(opt.depth, 1, "--depth"));
    long long top = 0;
    if (!opt.horizon.empty()) {
        top = parse_count(opt.horizon, 0, "--horizon");
    } else if (original) {
        top = static_cast<long long>(original->values.size()) - 1;
    } else {
        throw std::invalid_argument("generator sources need --horizon");
    }
    const bool explicit_src = std::holds_alternative<Explicit>(src);
    const bool truncating = explicit_src && !opt.zero_fill;
    const SeqWindow window = truncating ? generate(src, top) : generate_zero_fill(src, top);
    const SeqWindow image = apply_log_k(window, depth);

    BFile out;
    out.offset = 0;
    out.values = image.values();
    std::vector<std::string> comments = {"L^" + std::to_string(depth) + " of " + describe(src) +
                                         ", n = 0.." + std::to_string(image.top_index())};
    if (truncating) {
        comments.push_back("right edge: truncated, the window shrinks by one index per "
                           "application");
    } else if (explicit_src) {
        comments.push_back("right edge: zero-filled beyond the stored values");
    } else {
        comments.push_back("right edge: source extended as needed");
    }
    if (original && original->offset != 0) {
        comments.push_back("indices re-based from start " + std::to_string(original->offset) +
                           " to 0");
    }
    write_bfile_to(opt.output, out, comments);
    return 0;
}

struct CheckOptions {
    SourceOptions source;
    std::string depth = "1";
    std::string horizon = "50";
    bool truncate = false;
};

int run_check(const CheckOptions& opt) {
    const SeqSource src = build_source(opt.source);
    const int depth = static_cast<int>(parse_count(opt.depth, 1, "--depth"));
    const long long horizon = parse_count(opt.horizon, 1, "--horizon");
    const RightPolicy policy = opt.truncate ? RightPolicy::Truncate : RightPolicy::Extendable;
    const FoldVerdict verdict = check_k_fold(src, depth, horizon, policy);
    std::cout << "check " << describe(src) << ": " << verdict.describe() << "\n";
    if (opt.truncate) {
        std::string horizons;
        for (long long h : verdict.depth_horizons) {
            horizons += (horizons.empty() ? "" : ",") + std::to_string(h);
        }
        std::cout << "effective horizon per depth: " << horizons << "\n";
    }
    if (!verdict.nonnegative()) {
        return 1;
    }
    if (const auto cert = detect_stationary(src, std::max<long long>(horizon, 2))) {
        std::cout << "stationary shape after one application: " << cert->describe() << "\n";
    }
    return 0;
}

struct SearchOptions {
    int order = 0;
    std::string range;
    std::string init;
    long long horizon = 60;
    int imax = 3;
    std::string output;
};

int run_search(const SearchOptions& opt) {
    const auto [lo, hi] = parse_range(opt.range);
    std::vector<Integer> init;
    if (!opt.init.empty()) {
        init = parse_integer_list(opt.init);
    }
    const std::vector<EmpiricalReport> reports =
        grid_search(opt.order, lo, hi, init, opt.horizon, opt.imax);
    const SearchSummary summary = summarize(reports);

    const std::string init_text = init.empty() ? "default [0,...,0,1]" : coeff_list(init);
    const std::string config = "search: order " + std::to_string(opt.order) + ", coefficients in [" +
                               lo.get_str() + ".." + hi.get_str() + "], init " + init_text +
                               ", horizon " + std::to_string(opt.horizon) + ", depth " +
                               std::to_string(opt.imax) + "\n";

    if (!opt.output.empty()) {
        std::ofstream out(opt.output);
        if (!out) {
            throw std::invalid_argument("cannot open output file: " + opt.output);
        }
        write_reports(out, reports);
        std::cout << config << render_summary(summary);
        for (const EmpiricalReport& r : reports) {
            if (r.anomaly) {
                std::cout << render_report_line(r) << "\n";
            }
        }
        return 0;
    }
    write_reports(std::cout, reports);
    std::cerr << config << render_summary(summary);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact log-concavity analysis for integer sequences"};
    app.require_subcommand(1);

    ClassifyOptions classify_opt;
    CLI::App* classify_cmd =
        app.add_subcommand("classify", "classify the Lucas sequence U(P,Q)");
    classify_cmd->add_option("-P", classify_opt.p, "Lucas parameter P")->required();
    classify_cmd->add_option("-Q", classify_opt.q, "Lucas parameter Q")->required();
    classify_cmd->add_flag("--extended", classify_opt.extended, "admit zero P or Q");

    CLI::App* table_cmd =
        app.add_subcommand("table", "verdicts for Fibonacci, Pell, Jacobsthal, Mersenne");

    GenOptions gen_opt;
    CLI::App* gen_cmd = app.add_subcommand("gen", "emit a sequence as a b-file");
    add_source_flags(gen_cmd, gen_opt.source);
    gen_cmd->add_option("--horizon", gen_opt.horizon, "top index to emit");
    gen_cmd->add_option("--output", gen_opt.output, "write to a file instead of stdout");

    LogkOptions logk_opt;
    CLI::App* logk_cmd =
        app.add_subcommand("logk", "apply the log-operator k times, emit a b-file");
    add_source_flags(logk_cmd, logk_opt.source);
    logk_cmd->add_option("--depth", logk_opt.depth, "number of applications (default 1)");
    logk_cmd->add_option("--horizon", logk_opt.horizon, "top index of the starting window");
    logk_cmd->add_flag("--zero-fill", logk_opt.zero_fill,
                       "extend a b-file source by zeros instead of truncating");
    logk_cmd->add_option("--output", logk_opt.output, "write to a file instead of stdout");

    CheckOptions check_opt;
    CLI::App* check_cmd =
        app.add_subcommand("check", "scan L^1..L^k for negative entries over a horizon");
    add_source_flags(check_cmd, check_opt.source);
    check_cmd->add_option("--depth", check_opt.depth, "deepest iterate to scan (default 1)");
    check_cmd->add_option("--horizon", check_opt.horizon, "scan indices 0..N (default 50)");
    check_cmd->add_flag("--truncate", check_opt.truncate,
                        "shrink the window per application instead of extending");

    SearchOptions search_opt;
    CLI::App* search_cmd =
        app.add_subcommand("search", "empirical grid sweep over recurrence coefficients");
    search_cmd->add_option("--order", search_opt.order, "recurrence order m (1..4)")->required();
    search_cmd->add_option("--range", search_opt.range, "coefficient range LO..HI")->required();
    search_cmd->add_option("--init", search_opt.init,
                           "comma-separated a_0..a_{m-1} (default 0,...,0,1)");
    search_cmd->add_option("--horizon", search_opt.horizon, "scan indices 0..N (default 60)");
    search_cmd->add_option("--depth", search_opt.imax, "iterates per cell (default 3)");
    search_cmd->add_option("--output", search_opt.output, "write JSON Lines to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 64;
    }

    try {
        if (classify_cmd->parsed()) {
            return run_classify(classify_opt);
        }
        if (table_cmd->parsed()) {
            std::cout << named_sequence_table();
            return 0;
        }
        if (gen_cmd->parsed()) {
            return run_gen(gen_opt);
        }
        if (logk_cmd->parsed()) {
            return run_logk(logk_opt);
        }
        if (check_cmd->parsed()) {
            return run_check(check_opt);
        }
        if (search_cmd->parsed()) {
            return run_search(search_opt);
        }
        std::cerr << "error: no subcommand\n";
        return 64;
    } catch (const bfile_parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 65;
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 65;
    } catch (const limit_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 66;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 64;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 64;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
}
