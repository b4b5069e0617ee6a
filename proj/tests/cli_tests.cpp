// End-to-end checks of the command-line surface: exit codes, the JSON
// schema, byte-stable output, and table processing.
//
//   cli_tests <path-to-cli-binary> <path-to-knot-table>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

namespace {

int g_failures = 0;

#define REQUIRE_MSG(cond, msg)                                              \
    do {                                                                    \
        if (!(cond)) {                                                      \
            ++g_failures;                                                   \
            std::cerr << "[FAIL] " << __FILE__ << ":" << __LINE__ << "  "   \
                      << msg << "\n";                                       \
        }                                                                   \
    } while (0)

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& command) {
    RunResult r;
    FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: cli_tests <cli-binary> <knot-table>\n";
        return 2;
    }
    const std::string cli = argv[1];
    const std::string table = argv[2];

    // compute: trefoil JSON carries the pinned values
    {
        const RunResult r = run(cli + " compute --braid \"1 1 1\" --format json");
        REQUIRE_MSG(r.exit_code == 0, "trefoil compute should exit 0, got " << r.exit_code);
        REQUIRE_MSG(contains(r.output, "\"jones\":[[-8,-1],[-6,1],[-2,1]]"),
                    "trefoil jones values missing: " << r.output);
        REQUIRE_MSG(contains(r.output, "\"alexander\":[[-2,1],[0,-1],[2,1]]"),
                    "trefoil alexander values missing: " << r.output);
        REQUIRE_MSG(contains(r.output, "\"writhe\":3"), "writhe missing");
        REQUIRE_MSG(contains(r.output, "\"components\":1"), "components missing");
        REQUIRE_MSG(!contains(r.output, "\"passed\":false"), "a check failed: " << r.output);
    }

    // compute: byte-identical across runs
    {
        const std::string cmd = cli + " compute --braid \"1 -2 1 -2\" --format json";
        REQUIRE_MSG(run(cmd).output == run(cmd).output, "compute output not byte-stable");
    }

    // compute: identity braid with explicit strand count
    {
        const RunResult r = run(cli + " compute --braid \"\" --n 1 --format json");
        REQUIRE_MSG(r.exit_code == 0, "unknot compute should exit 0");
        REQUIRE_MSG(contains(r.output, "\"jones\":[[0,1]]"), "unknot jones should be 1");
        REQUIRE_MSG(contains(r.output, "\"alexander\":[[0,1]]"), "unknot alexander should be 1");
    }

    // compute: parse errors exit 2
    {
        REQUIRE_MSG(run(cli + " compute --braid \"0\"").exit_code == 2, "zero letter must exit 2");
        REQUIRE_MSG(run(cli + " compute --braid \"3\" --n 2").exit_code == 2,
                    "out-of-range letter must exit 2");
        REQUIRE_MSG(run(cli + " compute --braid \"1 potato\"").exit_code == 2,
                    "junk token must exit 2");
    }

    // table: bundled table runs clean and contains one report per row
    {
        const RunResult r = run(cli + " table --file " + table + " --format csv");
        REQUIRE_MSG(r.exit_code == 0, "bundled table should exit 0, got " << r.exit_code);
        REQUIRE_MSG(contains(r.output, "name,n,word,writhe,components,jones,alexander,checks_passed"),
                    "csv header missing");
        REQUIRE_MSG(contains(r.output, "trefoil,2,1 1 1,3,1,"), "trefoil row missing");
        REQUIRE_MSG(contains(r.output, "borromean,3,"), "borromean row missing");
        REQUIRE_MSG(!contains(r.output, ",no"), "some table check failed: " << r.output);
    }

    // table: compute and table agree on the same braid
    {
        const RunResult single = run(cli + " compute --braid \"1 1 1\" --format json");
        const RunResult all = run(cli + " table --file " + table + " --format json");
        const auto pos = all.output.find("\"name\":\"trefoil\"");
        REQUIRE_MSG(pos != std::string::npos, "trefoil row missing from json table output");
        const auto line_start = all.output.rfind('\n', pos);
        const auto line_end = all.output.find('\n', pos);
        std::string row = all.output.substr(line_start + 1, line_end - line_start - 1);
        std::string expect = single.output;
        if (!expect.empty() && expect.back() == '\n') expect.pop_back();
        const std::string tail = expect.substr(expect.find("\"n\":"));
        REQUIRE_MSG(contains(row, tail), "table row differs from compute output for the trefoil");
    }

    // table: missing file exits 3, malformed row exits 1
    {
        REQUIRE_MSG(run(cli + " table --file /nonexistent/knots.tsv").exit_code == 3,
                    "missing file must exit 3");
        const std::string tmp = "/tmp/knotpoly_cli_bad_table.tsv";
        FILE* f = fopen(tmp.c_str(), "w");
        fputs("name\tn\tword\nbad\t2\t5\ngood\t2\t1 1\n", f);
        fclose(f);
        const RunResult r = run(cli + " table --file " + tmp);
        REQUIRE_MSG(r.exit_code == 1, "row error must exit 1, got " << r.exit_code);
        REQUIRE_MSG(contains(r.output, "good"), "valid rows must still be processed");
        std::remove(tmp.c_str());
    }

    // table: header-only file exits 0 with no rows
    {
        const std::string tmp = "/tmp/knotpoly_cli_empty_table.tsv";
        FILE* f = fopen(tmp.c_str(), "w");
        fputs("name\tn\tword\n", f);
        fclose(f);
        const RunResult r = run(cli + " table --file " + tmp);
        REQUIRE_MSG(r.exit_code == 0, "empty table must exit 0");
        std::remove(tmp.c_str());
    }

    // verify: deterministic, passing, and sensitive to the trials knob
    {
        const std::string cmd = cli + " verify --suite markov --nmax 4 --lenmax 8 --trials 20 --seed 1";
        const RunResult r1 = run(cmd);
        REQUIRE_MSG(r1.exit_code == 0, "markov verify should pass");
        REQUIRE_MSG(contains(r1.output, "suite markov: 40/40 checks passed"),
                    "unexpected markov summary: " << r1.output);
        REQUIRE_MSG(r1.output == run(cmd).output, "verify output must be deterministic");

        const RunResult vac = run(cli + " verify --suite skein --trials 0");
        REQUIRE_MSG(vac.exit_code == 0, "vacuous skein suite must exit 0");
        REQUIRE_MSG(contains(vac.output, "suite skein: 0/0 checks passed"),
                    "vacuous summary wrong: " << vac.output);

        const RunResult sk = run(cli + " verify --suite skein --nmax 3 --lenmax 6 --trials 10 --seed 2");
        REQUIRE_MSG(sk.exit_code == 0, "skein verify should pass");
        REQUIRE_MSG(contains(sk.output, "suite skein: 40/40 checks passed"),
                    "unexpected skein summary: " << sk.output);
    }

    // verify: interpolation suite
    {
        const RunResult r = run(cli + " verify --suite interpolation --nmax 3 --lenmax 6 --trials 10 --seed 4");
        REQUIRE_MSG(r.exit_code == 0, "interpolation verify should pass");
        REQUIRE_MSG(contains(r.output, "suite interpolation: 20/20 checks passed"),
                    "unexpected interpolation summary: " << r.output);
    }

    // threads env var must not change results
    {
        const std::string cmd = cli + " table --file " + table + " --format json";
        const RunResult par = run(cmd);
        const RunResult ser = run("KNOTPOLY_THREADS=1 " + cmd);
        REQUIRE_MSG(par.output == ser.output, "KNOTPOLY_THREADS must not change output");
    }

    // bad arguments exit 2
    {
        REQUIRE_MSG(run(cli + " compute").exit_code == 2, "missing --braid must exit 2");
        REQUIRE_MSG(run(cli + " verify --suite nosuch").exit_code == 2,
                    "unknown suite must exit 2");
    }

    if (g_failures == 0) {
        std::cout << "cli_tests: all checks passed\n";
        return 0;
    }
    std::cout << "cli_tests: " << g_failures << " checks failed\n";
    return 1;
}
