// knotpoly command line: compute invariants for a single braid word, run a
// whole knot table, or run the randomised verification suites.
//
// Exit codes: 0 success, 1 verification/check failure, 2 argument or parse
// error, 3 I/O error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "knotpoly/braid.hpp"
#include "knotpoly/parallel.hpp"
#include "knotpoly/report.hpp"
#include "knotpoly/suites.hpp"

namespace {

void emit_report(const knotpoly::InvariantReport& rep, const std::string& format, bool with_header) {
    if (format == "json") {
        std::cout << knotpoly::report_to_json(rep) << "\n";
    } else if (format == "csv") {
        if (with_header) std::cout << knotpoly::report_csv_header() << "\n";
        std::cout << knotpoly::report_to_csv(rep) << "\n";
    } else {
        std::cout << knotpoly::report_to_text(rep) << "\n";
    }
}

int run_compute(const std::string& braid_text, int n_override, const std::string& format) {
    knotpoly::BraidWord braid;
    try {
        braid = knotpoly::parse_braid(
            braid_text, n_override > 0 ? std::optional<int>(n_override) : std::nullopt);
    } catch (const knotpoly::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    }
    const auto rep = knotpoly::build_report("braid", braid);
    emit_report(rep, format, true);
    return 0;
}

int run_table(const std::string& path, const std::string& format) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot open '" << path << "'\n";
        return 3;
    }
    int row_errors = 0;
    const auto rows = knotpoly::parse_knot_table(in, [&](std::size_t lineno, const std::string& msg) {
        ++row_errors;
        std::cerr << path << ":" << lineno << ": " << msg << "\n";
    });

    // Rows are independent; compute them concurrently but emit in input order.
    std::vector<knotpoly::InvariantReport> reports(rows.size());
    knotpoly::parallel_for_indexed(rows.size(), [&](std::size_t i) {
        reports[i] = knotpoly::build_report(rows[i].name, rows[i].braid());
    });

    bool checks_ok = true;
    bool first = true;
    for (const auto& rep : reports) {
        checks_ok = checks_ok && rep.all_checks_passed();
        emit_report(rep, format, first);
        first = false;
    }
    if (row_errors > 0 || !checks_ok) return 1;
    return 0;
}

int run_verify(const std::string& suite, int nmax, int lenmax, int trials, std::uint64_t seed) {
    using knotpoly::SuiteResult;
    std::vector<SuiteResult> results;
    if (suite == "markov" || suite == "all")
        results.push_back(knotpoly::suite_markov(nmax, lenmax, trials, seed));
    if (suite == "skein" || suite == "all")
        results.push_back(knotpoly::suite_skein(nmax, lenmax, trials, seed + 1));
    if (suite == "interpolation" || suite == "all")
        results.push_back(knotpoly::suite_interpolation(nmax, lenmax, trials, seed + 2));

    bool ok = true;
    for (const auto& r : results) {
        std::cout << knotpoly::format_suite_result(r);
        ok = ok && r.passed();
    }
    std::cout << (ok ? "verify: all suites passed" : "verify: FAILURES") << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact braid-closure invariants in the quotient ring "
                 "Z[x^{1/2},x^{-1/2},d,d^{-1}]/((d+1)(dx-1)), with Jones and "
                 "Alexander specialisations and independent oracles"};
    app.require_subcommand(1);

    std::string braid_text;
    int n_override = 0;
    std::string format = "text";

    auto* compute = app.add_subcommand("compute", "invariants of one braid word");
    compute->add_option("--braid", braid_text, "whitespace-separated letters, e.g. \"1 1 1\"")
        ->required();
    compute->add_option("--n", n_override, "strand count override (default: 1 + max letter)");
    compute->add_option("--format", format, "json|csv|text")
        ->check(CLI::IsMember({"json", "csv", "text"}));

    std::string table_path;
    auto* table = app.add_subcommand("table", "invariants for every row of a knot table (TSV)");
    table->add_option("--file", table_path, "TSV file: name<TAB>n<TAB>word")->required();
    table->add_option("--format", format, "json|csv|text")
        ->check(CLI::IsMember({"json", "csv", "text"}));

    std::string suite = "all";
    int nmax = 4;
    int lenmax = 8;
    int trials = 50;
    std::uint64_t seed = 1;
    auto* verify = app.add_subcommand("verify", "randomised property suites");
    verify->add_option("--suite", suite, "markov|skein|interpolation|all")
        ->check(CLI::IsMember({"markov", "skein", "interpolation", "all"}));
    verify->add_option("--nmax", nmax, "max strand count")->check(CLI::PositiveNumber);
    verify->add_option("--lenmax", lenmax, "max word length")->check(CLI::NonNegativeNumber);
    verify->add_option("--trials", trials, "number of random trials")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--seed", seed, "RNG seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 2 : 0;
    }

    try {
        if (compute->parsed()) return run_compute(braid_text, n_override, format);
        if (table->parsed()) return run_table(table_path, format);
        return run_verify(suite, nmax, lenmax, trials, seed);
    } catch (const knotpoly::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
