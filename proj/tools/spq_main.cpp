// Command-line front end for the spq shared library. Reads a delimited
// table, runs a constraint check or measure, prints a report, and exits
// 0 (holds / within bound), 1 (fails / undefined), 2 (error) or
// 3 (search gave up).

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "spq.h"

namespace {

struct CommonArgs {
    std::string input;
    std::string constraint;
    std::string null_token;
    std::string delimiter = ",";
    bool no_header = false;
    uint64_t node_cap = 0;
    uint64_t size_guard = 10000000;
    std::string bound;
    std::string report_path;
    bool json_output = false;
    bool no_witness = false;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_bound) {
    cmd->add_option("input", args.input, "input file, or - for standard input")->required();
    cmd->add_option("-c,--constraint", args.constraint,
                    "constraint: key=A,B | fd=A,B->C | keys=A,B;B,C")
        ->required();
    cmd->add_option("--null-token", args.null_token, "cell text marking a missing value");
    cmd->add_option("--delimiter", args.delimiter, "field delimiter (single character)");
    cmd->add_flag("--no-header", args.no_header, "input has no header row (attributes c1..cN)");
    cmd->add_option("--node-cap", args.node_cap, "abort exact searches past this many nodes");
    cmd->add_option("--size-guard", args.size_guard, "oracle world/assignment guard");
    if (with_bound)
        cmd->add_option("--bound", args.bound, "decide measure <= p/q instead of reporting it");
    cmd->add_option("--report", args.report_path, "write the JSON report to this file");
    cmd->add_flag("--json", args.json_output, "print the JSON report instead of text");
    cmd->add_flag("--no-witness", args.no_witness, "omit the replacement-world witness");
}

int fail(const std::string& msg) {
    std::cerr << "spq: " << msg << "\n";
    return 2;
}

bool read_input(const std::string& path, std::string& out) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        out = ss.str();
        return true;
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) return false;
    std::ostringstream ss;
    ss << f.rdbuf();
    out = ss.str();
    return true;
}

// Accepts "p/q", an integer, or a short decimal.
bool parse_bound(const std::string& s, int64_t& num, int64_t& den) {
    if (s.empty()) return false;
    auto slash = s.find('/');
    try {
        if (slash != std::string::npos) {
            num = std::stoll(s.substr(0, slash));
            den = std::stoll(s.substr(slash + 1));
            return den != 0;
        }
        auto dot = s.find('.');
        if (dot == std::string::npos) {
            num = std::stoll(s);
            den = 1;
            return true;
        }
        std::string frac = s.substr(dot + 1);
        if (frac.size() > 9) return false;
        den = 1;
        for (size_t i = 0; i < frac.size(); ++i) den *= 10;
        int64_t whole = dot == 0 ? 0 : std::stoll(s.substr(0, dot));
        num = whole * den + (frac.empty() ? 0 : std::stoll(frac));
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

int run_analysis(const CommonArgs& args, const std::string& op) {
    std::string text;
    if (!read_input(args.input, text)) return fail("cannot read " + args.input);
    if (args.delimiter.size() != 1) return fail("delimiter must be a single character");

    spq_parse_options popts;
    spq_parse_options_init(&popts);
    popts.delimiter = args.delimiter[0];
    popts.null_token = args.null_token.c_str();
    popts.has_header = args.no_header ? 0 : 1;

    char err[512] = {0};
    spq_table* table = nullptr;
    if (spq_table_parse(text.c_str(), &popts, &table, err, sizeof err) != SPQ_OK)
        return fail(err);

    spq_options opts;
    spq_options_init(&opts);
    opts.node_cap = args.node_cap;
    opts.size_guard = args.size_guard;
    opts.want_witness = args.no_witness ? 0 : 1;
    if (!args.bound.empty()) {
        int64_t n = 0, d = 0;
        if (!parse_bound(args.bound, n, d)) {
            spq_table_free(table);
            return fail("cannot parse bound: " + args.bound);
        }
        opts.bound_num = n;
        opts.bound_den = d;
    }

    spq_result* result = nullptr;
    int rc = spq_analyze(table, args.constraint.c_str(), op.c_str(), &opts, &result, err,
                         sizeof err);
    spq_table_free(table);
    if (rc != SPQ_OK) return fail(err);

    std::cout << (args.json_output ? spq_result_json(result) : spq_result_text(result));
    if (args.json_output) std::cout << "\n";
    if (!args.report_path.empty()) {
        std::ofstream rf(args.report_path, std::ios::binary);
        if (!rf) {
            spq_result_free(result);
            return fail("cannot write " + args.report_path);
        }
        rf << spq_result_json(result) << "\n";
    }
    int code = spq_result_exit_code(result);
    spq_result_free(result);
    return code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"constraint quality for incomplete tables: strongly possible keys and "
                 "dependencies with exact g3/g5 measures"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(spq_version()));

    CommonArgs check_args;
    auto* check = app.add_subcommand("check", "decide whether the constraint holds");
    add_common(check, check_args, false);

    CommonArgs measure_args;
    std::string which_measure;
    auto* measure = app.add_subcommand("measure", "compute g3 (removal) or g5 (addition)");
    measure->add_option("measure", which_measure, "g3 | g5 | g3eq5")
        ->required()
        ->check(CLI::IsMember({"g3", "g5", "g3eq5"}));
    add_common(measure, measure_args, true);

    CommonArgs maxg3_args;
    auto* maxg3 = app.add_subcommand(
        "maxg3", "does the family measure equal the largest member measure?");
    add_common(maxg3, maxg3_args, false);

    CommonArgs oracle_args;
    std::string which_oracle;
    auto* oracle =
        app.add_subcommand("oracle", "brute-force reference answers (tiny inputs only)");
    oracle->add_option("measure", which_oracle, "check | g3 | g5")
        ->required()
        ->check(CLI::IsMember({"check", "g3", "g5"}));
    add_common(oracle, oracle_args, true);

    auto* gen = app.add_subcommand("gen", "emit a reproducible random table (splitmix64)");
    spq_gen_options gopts;
    spq_gen_options_init(&gopts);
    std::string gen_fixture, gen_delimiter = ",", gen_null_token;
    bool gen_no_header = false;
    gen->add_option("--seed", gopts.seed, "generator seed");
    gen->add_option("--rows", gopts.rows, "row count");
    gen->add_option("--cols", gopts.cols, "column count");
    gen->add_option("--symbols", gopts.symbols, "symbol pool size per column");
    gen->add_option("--null-rate", gopts.null_rate, "per-cell probability of a missing value");
    gen->add_option("--dup-rate", gopts.dup_rate, "probability a row repeats its predecessor");
    gen->add_option("--fixture", gen_fixture,
                    "emit a built-in table instead (cars, pair, pair_reduced, pair_extended, "
                    "trio)");
    gen->add_option("--delimiter", gen_delimiter, "output delimiter");
    gen->add_option("--null-token", gen_null_token, "output text for missing values");
    gen->add_flag("--no-header", gen_no_header, "omit the header row");

    CLI11_PARSE(app, argc, argv);

    if (check->parsed()) return run_analysis(check_args, "check");
    if (measure->parsed()) return run_analysis(measure_args, which_measure);
    if (maxg3->parsed()) return run_analysis(maxg3_args, "maxg3");
    if (oracle->parsed()) return run_analysis(oracle_args, "oracle-" + which_oracle);

    if (gen->parsed()) {
        char err[512] = {0};
        spq_table* table = nullptr;
        int rc = gen_fixture.empty()
                     ? spq_table_generate(&gopts, &table, err, sizeof err)
                     : spq_table_fixture(gen_fixture.c_str(), &table, err, sizeof err);
        if (rc != SPQ_OK) return fail(err);
        if (gen_delimiter.size() != 1) {
            spq_table_free(table);
            return fail("delimiter must be a single character");
        }
        spq_parse_options popts;
        spq_parse_options_init(&popts);
        popts.delimiter = gen_delimiter[0];
        popts.null_token = gen_null_token.c_str();
        popts.has_header = gen_no_header ? 0 : 1;
        char* out = nullptr;
        rc = spq_table_serialize(table, &popts, &out, err, sizeof err);
        spq_table_free(table);
        if (rc != SPQ_OK) return fail(err);
        std::fputs(out, stdout);
        spq_string_free(out);
        return 0;
    }
    return 2;
}
