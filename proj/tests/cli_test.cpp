// End-to-end tests driving the installed binary through a shell, so
// argument parsing, exit codes, and byte-exact stdout are all covered.

#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

#ifndef LOGCONCAVE_CLI_PATH
#error "LOGCONCAVE_CLI_PATH must point at the binary under test"
#endif
#ifndef LOGCONCAVE_GOLDEN_DIR
#error "LOGCONCAVE_GOLDEN_DIR must point at the golden files"
#endif

namespace {

struct CliResult {
    int status = -1;
    std::string out;
};

const std::string& test_dir() {
    static const std::string dir = [] {
        std::string tmpl = "/tmp/logconcave_cli_XXXXXX";
        if (!mkdtemp(tmpl.data())) {
            ADD_FAILURE() << "mkdtemp failed";
        }
        return tmpl;
    }();
    return dir;
}

std::string write_file(const std::string& name, const std::string& content) {
    const std::string path = test_dir() + "/" + name;
    std::ofstream out(path);
    out << content;
    return path;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    EXPECT_TRUE(in.good()) << path;
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

CliResult run_cli(const std::string& args, const std::string& stdin_text = "",
                  bool merge_stderr = false) {
    std::string cmd = std::string(LOGCONCAVE_CLI_PATH) + " " + args;
    if (stdin_text.empty()) {
        cmd += " < /dev/null";
    } else {
        static int stdin_counter = 0;
        cmd += " < " + write_file("stdin_" + std::to_string(stdin_counter++), stdin_text);
    }
    cmd += merge_stderr ? " 2>&1" : " 2>/dev/null";

    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        ADD_FAILURE() << "popen failed: " << cmd;
        return {};
    }
    CliResult result;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) {
        result.out.append(buf, got);
    }
    const int rc = pclose(pipe);
    result.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return result;
}

std::vector<std::string> nonempty_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty()) {
            lines.push_back(line);
        }
    }
    return lines;
}

TEST(CliClassify, VerdictKindsMapToExitCodes) {
    const CliResult inf = run_cli("classify -P 3 -Q 2");
    EXPECT_EQ(inf.status, 0);
    EXPECT_EQ(inf.out,
              "U(3,2), D = 1: infinitely log-concave\n"
              "certificate: Q >= 0 and P > 2*sqrt(Q); L(U)_n = Q^(n-1) >= 0\n");

    const CliResult fib = run_cli("classify -P 1 -Q -1");
    EXPECT_EQ(fib.status, 1);
    EXPECT_EQ(fib.out,
              "U(1,-1), D = 5: not 1-fold log-concave\n"
              "witness: L(U)_2 = -1 < 0\n");

    const CliResult outside = run_cli("classify -P 1 -Q 1");
    EXPECT_EQ(outside.status, 2);
    EXPECT_EQ(outside.out, "U(1,1), D = -3: outside scope (negative discriminant)\n");
}

TEST(CliClassify, RepeatedRootAndExtendedMode) {
    const CliResult repeated = run_cli("classify -P -6 -Q 9");
    EXPECT_EQ(repeated.status, 0);
    EXPECT_NE(repeated.out.find("repeated root"), std::string::npos);
    EXPECT_NE(repeated.out.find("S = -3"), std::string::npos);

    const CliResult rejected = run_cli("classify -P 4 -Q 0");
    EXPECT_EQ(rejected.status, 2);
    EXPECT_NE(rejected.out.find("must be nonzero"), std::string::npos);

    const CliResult relaxed = run_cli("classify -P 4 -Q 0 --extended");
    EXPECT_EQ(relaxed.status, 0);
    EXPECT_NE(relaxed.out.find("outside the standard Lucas-sequence hypothesis"),
              std::string::npos);
}

TEST(CliClassify, UsageErrorsExitSixtyFour) {
    EXPECT_EQ(run_cli("classify -P 3").status, 64);        // -Q missing
    EXPECT_EQ(run_cli("classify -P x -Q 1").status, 64);   // not an integer
    EXPECT_EQ(run_cli("").status, 64);                     // subcommand required
    EXPECT_EQ(run_cli("frobnicate").status, 64);           // unknown subcommand
}

TEST(CliHelp, ExitsZero) {
    const CliResult help = run_cli("--help");
    EXPECT_EQ(help.status, 0);
    EXPECT_NE(help.out.find("classify"), std::string::npos);
    EXPECT_NE(help.out.find("search"), std::string::npos);
}

TEST(CliTable, MatchesTheGoldenBytes) {
    const CliResult table = run_cli("table");
    EXPECT_EQ(table.status, 0);
    EXPECT_EQ(table.out, read_file(std::string(LOGCONCAVE_GOLDEN_DIR) + "/table.txt"));
}

TEST(CliGen, EmitsFibonacciBFile) {
    const CliResult gen = run_cli("gen -P 1 -Q -1 --horizon 10");
    EXPECT_EQ(gen.status, 0);
    EXPECT_EQ(gen.out,
              "# lucas(1,-1), n = 0..10\n"
              "0 0\n1 1\n2 1\n3 2\n4 3\n5 5\n6 8\n7 13\n8 21\n9 34\n10 55\n");
}

TEST(CliGen, WritesToFileAndRebasesOffsets) {
    const std::string out_path = test_dir() + "/fib.txt";
    const CliResult gen = run_cli("gen -P 1 -Q -1 --horizon 6 --output " + out_path);
    EXPECT_EQ(gen.status, 0);
    EXPECT_EQ(gen.out, "");
    EXPECT_EQ(read_file(out_path),
              "# lucas(1,-1), n = 0..6\n"
              "0 0\n1 1\n2 1\n3 2\n4 3\n5 5\n6 8\n");

    const std::string shifted = write_file("shifted.txt", "5 10\n6 20\n7 30\n");
    const CliResult rebased = run_cli("gen --input " + shifted);
    EXPECT_EQ(rebased.status, 0);
    EXPECT_EQ(rebased.out,
              "# explicit(n=3), n = 0..2\n"
              "# indices re-based from start 5 to 0\n"
              "0 10\n1 20\n2 30\n");
}

TEST(CliGen, UsageAndSourceErrors) {
    EXPECT_EQ(run_cli("gen --constant 5").status, 64);              // no --horizon
    EXPECT_EQ(run_cli("gen -P 1 --horizon 5").status, 64);          // -Q missing
    EXPECT_EQ(run_cli("gen -P 1 -Q -1 --constant 3 --horizon 5").status, 64);  // two sources
    EXPECT_EQ(run_cli("gen --horizon 5").status, 64);               // no source
    EXPECT_EQ(run_cli("gen -P 1 -Q -1 --horizon -2").status, 64);   // bad horizon
}

TEST(CliLogk, TruncatesExplicitFilesByDefault) {
    const std::string fib = write_file(
        "fib10.txt", "0 0\n1 1\n2 1\n3 2\n4 3\n5 5\n6 8\n7 13\n8 21\n9 34\n10 55\n");

    const CliResult once = run_cli("logk --input " + fib);
    EXPECT_EQ(once.status, 0);
    EXPECT_EQ(once.out,
              "# L^1 of explicit(n=11), n = 0..9\n"
              "# right edge: truncated, the window shrinks by one index per application\n"
              "0 0\n1 1\n2 -1\n3 1\n4 -1\n5 1\n6 -1\n7 1\n8 -1\n9 1\n");

    const CliResult twice = run_cli("logk --input " + fib + " --depth 2");
    EXPECT_EQ(twice.status, 0);
    EXPECT_EQ(twice.out,
              "# L^2 of explicit(n=11), n = 0..8\n"
              "# right edge: truncated, the window shrinks by one index per application\n"
              "0 0\n1 1\n2 0\n3 0\n4 0\n5 0\n6 0\n7 0\n8 0\n");
}

TEST(CliLogk, ZeroFillKeepsTheWindowWidth) {
    const std::string plateau = write_file("plateau.txt", "0 7\n1 7\n2 7\n3 7\n");

    const CliResult truncated = run_cli("logk --input " + plateau);
    EXPECT_EQ(truncated.status, 0);
    EXPECT_EQ(truncated.out,
              "# L^1 of explicit(n=4), n = 0..2\n"
              "# right edge: truncated, the window shrinks by one index per application\n"
              "0 49\n1 0\n2 0\n");

    const CliResult filled = run_cli("logk --input " + plateau + " --zero-fill");
    EXPECT_EQ(filled.status, 0);
    EXPECT_EQ(filled.out,
              "# L^1 of explicit(n=4), n = 0..3\n"
              "# right edge: zero-filled beyond the stored values\n"
              "0 49\n1 0\n2 0\n3 49\n");
}

TEST(CliLogk, GeneratorSourcesExtendInsteadOfShrinking) {
    const CliResult image = run_cli("logk -P 1 -Q -1 --horizon 6 --depth 2");
    EXPECT_EQ(image.status, 0);
    EXPECT_EQ(image.out,
              "# L^2 of lucas(1,-1), n = 0..6\n"
              "# right edge: source extended as needed\n"
              "0 0\n1 1\n2 0\n3 0\n4 0\n5 0\n6 0\n");

    EXPECT_EQ(run_cli("logk --constant 5").status, 64);  // generator needs --horizon
    EXPECT_EQ(run_cli("logk -P 1 -Q -1 --horizon 6 --depth 0").status, 64);
}

TEST(CliCheck, PassAndFailVerdicts) {
    const CliResult pass = run_cli("check -P 3 -Q 2 --depth 10 --horizon 64");
    EXPECT_EQ(pass.status, 0);
    EXPECT_EQ(pass.out,
              "check lucas(3,2): L^1..L^10 nonnegative over 0..64 (not a proof)\n"
              "stationary shape after one application: zeros before n = 1, then 1 * 2^(n-1); "
              "one application of L collapses it to a single support point\n");

    const CliResult fail = run_cli("check -P 1 -Q -1");
    EXPECT_EQ(fail.status, 1);
    EXPECT_EQ(fail.out, "check lucas(1,-1): L^1 is negative at n = 2: value -1\n");

    const CliResult zero = run_cli("check --constant 0 --horizon 5");
    EXPECT_EQ(zero.status, 0);
    EXPECT_NE(zero.out.find("all-zero window, an L-invariant fixed point"), std::string::npos);
}

TEST(CliCheck, TruncateReportsEffectiveHorizons) {
    const std::string plateau = write_file("plateau2.txt", "0 7\n1 7\n2 7\n3 7\n");
    const CliResult checked =
        run_cli("check --input " + plateau + " --depth 2 --truncate");
    EXPECT_EQ(checked.status, 0);
    EXPECT_EQ(checked.out,
              "check explicit(n=4): L^1..L^2 nonnegative over 0..50 (not a proof)\n"
              "effective horizon per depth: 2,1\n");
}

TEST(CliCheck, ReadsBFilesFromStdin) {
    const CliResult fail = run_cli("check --input -", "0 0\n1 1\n2 1\n3 2\n4 3\n5 5\n");
    EXPECT_EQ(fail.status, 1);
    EXPECT_NE(fail.out.find("L^1 is negative at n = 2: value -1"), std::string::npos);
}

TEST(CliCheck, InputErrorsExitSixtyFive) {
    EXPECT_EQ(run_cli("check --input " + test_dir() + "/does_not_exist.txt").status, 65);
    EXPECT_EQ(run_cli("check --input -", "0 1\n2 5\n").status, 65);   // gap in indices
    EXPECT_EQ(run_cli("check --input -", "# only comments\n").status, 65);
    const CliResult diag = run_cli("check --input -", "0 1\n1 2x\n", /*merge_stderr=*/true);
    EXPECT_EQ(diag.status, 65);
    EXPECT_NE(diag.out.find("b-file line 2: bad value '2x'"), std::string::npos);
}

TEST(CliSearch, WritesJsonLinesAndSummary) {
    const std::string out_path = test_dir() + "/grid.jsonl";
    const CliResult search =
        run_cli("search --order 2 --range -2..2 --output " + out_path);
    EXPECT_EQ(search.status, 0);
    EXPECT_EQ(search.out,
              "search: order 2, coefficients in [-2..2], init default [0,...,0,1], "
              "horizon 60, depth 3\n"
              "reports: 25\n"
              "looks-inf-concave: 14\n"
              "fails-at-depth 1: 10\n"
              "degenerate: 1\n"
              "inconclusive: 0\n"
              "anomalies: 0\n");

    const auto lines = nonempty_lines(read_file(out_path));
    ASSERT_EQ(lines.size(), 25u);
    for (const std::string& line : lines) {
        const auto parsed = nlohmann::json::parse(line);
        EXPECT_TRUE(parsed.contains("coeffs"));
        EXPECT_TRUE(parsed.contains("tag"));
        EXPECT_FALSE(parsed.at("anomaly").get<bool>());
    }
}

TEST(CliSearch, StreamsReportsToStdout) {
    const CliResult search = run_cli("search --order 1 --range 1..3");
    EXPECT_EQ(search.status, 0);
    const auto lines = nonempty_lines(search.out);
    ASSERT_EQ(lines.size(), 3u);
    for (const std::string& line : lines) {
        EXPECT_NO_THROW(nlohmann::json::parse(line)) << line;
    }
}

TEST(CliSearch, LimitAndUsageErrors) {
    EXPECT_EQ(run_cli("search --order 5 --range 0..1").status, 66);
    EXPECT_EQ(run_cli("search --order 2 --range -11..11").status, 66);
    EXPECT_EQ(run_cli("search --order 2 --range 5..1").status, 64);
    EXPECT_EQ(run_cli("search --order 2 --range nope").status, 64);
    EXPECT_EQ(run_cli("search --order 2 --range 0..1 --init 1,2,3").status, 64);
    EXPECT_EQ(run_cli("search --range 0..1").status, 64);  // --order required
}

TEST(CliSearch, HonorsInitOverride) {
    const CliResult search = run_cli("search --order 1 --range 2..2 --init 3");
    EXPECT_EQ(search.status, 0);
    const auto lines = nonempty_lines(search.out);
    ASSERT_EQ(lines.size(), 1u);
    const auto parsed = nlohmann::json::parse(lines[0]);
    EXPECT_EQ(parsed.at("init")[0].get<std::string>(), "3");
    EXPECT_EQ(parsed.at("tag").get<std::string>(), "looks-inf-concave");
}

}  // namespace
