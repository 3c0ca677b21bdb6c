// SPDX-License-Identifier: Apache-2.0
//
// Command-line surface over the shared library's C interface.  Subcommands:
//   gen     write a generated instance (one word per line)
//   solve   run one algorithm on an instance file
//   verify  run a check suite over generated or loaded instances -> JSON
//   sweep   run algorithms across a parameter range -> CSV
//   report  re-render and re-derive a stored JSON report
// Exit codes: 0 all verdicts pass, 1 falsification found, 2 usage or limits.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ssp/capi.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFalsified = 1;
constexpr int kExitUsage = 2;

struct Range {
    long long lo = 0;
    long long hi = 0;
};

// "LO..HI" or a single "N"
std::optional<Range> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const long long v = std::stoll(text);
            return Range{v, v};
        }
        const long long lo = std::stoll(text.substr(0, dots));
        const long long hi = std::stoll(text.substr(dots + 2));
        if (hi < lo) return std::nullopt;
        return Range{lo, hi};
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, ','))
        if (!cur.empty()) out.push_back(cur);
    return out;
}

int fail_usage(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return kExitUsage;
}

int map_status(ssp_status status) {
    if (status == SSP_OK) return kExitPass;
    std::cerr << "error: " << ssp_last_error() << "\n";
    return kExitUsage;
}

bool write_or_print(const std::string& content, const std::string& path) {
    if (path.empty()) {
        std::cout << content;
        return true;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << content;
    out.flush();
    if (!out) {
        std::cerr << "error: cannot write " << path << "\n";
        return false;
    }
    return true;
}

struct GenFlags {
    std::string family = "random";
    int m = 8;
    std::string len = "3..8";
    int alphabet = 3;
    std::string k = "3";
    uint64_t seed = 1;
};

void add_gen_flags(CLI::App* cmd, GenFlags& flags, bool with_family) {
    if (with_family)
        cmd->add_option("--family", flags.family,
                        "random|tarhio|blum|periodic|fragments");
    cmd->add_option("--m", flags.m, "word count");
    cmd->add_option("--len", flags.len, "word length range LO..HI");
    cmd->add_option("--alphabet", flags.alphabet, "alphabet size (1..26)");
    cmd->add_option("--k", flags.k, "family parameter N (ranges: sweep only)");
    cmd->add_option("--seed", flags.seed, "64-bit seed");
}

std::optional<std::string> genspec_json(const GenFlags& flags,
                                        long long k_value, uint64_t seed) {
    const auto len = parse_range(flags.len);
    if (!len) return std::nullopt;
    std::ostringstream out;
    out << "{\"family\":\"" << flags.family << "\",\"m\":" << flags.m
        << ",\"len_lo\":" << len->lo << ",\"len_hi\":" << len->hi
        << ",\"alphabet\":" << flags.alphabet << ",\"k\":" << k_value
        << ",\"seed\":" << seed << "}";
    return out.str();
}

int run_gen(const GenFlags& flags, const std::string& out_path) {
    const auto k = parse_range(flags.k);
    if (!k || k->lo != k->hi) return fail_usage("gen needs a single --k value");
    const auto spec = genspec_json(flags, k->lo, flags.seed);
    if (!spec) return fail_usage("bad --len range");
    ssp_instance* inst = nullptr;
    if (const int rc = map_status(ssp_instance_generate(spec->c_str(), &inst)))
        return rc;
    std::string content;
    for (int i = 0; i < ssp_instance_size(inst); ++i) {
        content += ssp_instance_word(inst, i);
        content += '\n';
    }
    ssp_instance_free(inst);
    return write_or_print(content, out_path) ? kExitPass : kExitUsage;
}

int run_solve(const std::string& in_path, const std::string& algo, int max_m,
              double budget) {
    ssp_instance* inst = nullptr;
    if (const int rc = map_status(ssp_instance_from_file(in_path.c_str(), &inst)))
        return rc;
    ssp_solution* sol = nullptr;
    const ssp_status status =
        ssp_solve(inst, algo.c_str(), max_m, budget, &sol);
    ssp_instance_free(inst);
    if (const int rc = map_status(status)) return rc;
    std::cout << ssp_solution_text(sol) << "\n"
              << ssp_solution_length(sol) << "\n";
    ssp_solution_free(sol);
    return kExitPass;
}

int run_verify(const GenFlags& flags, bool generated, const std::string& in_path,
               const std::string& suite, int count, int max_m, double budget,
               const std::string& json_path) {
    char* doc = nullptr;
    long long failures = 0;
    ssp_status status;
    if (generated) {
        const auto k = parse_range(flags.k);
        if (!k || k->lo != k->hi)
            return fail_usage("verify needs a single --k value");
        const auto spec = genspec_json(flags, k->lo, flags.seed);
        if (!spec) return fail_usage("bad --len range");
        status = ssp_verify_generated(spec->c_str(), count, suite.c_str(), max_m,
                                      budget, &doc, &failures);
    } else {
        status = ssp_verify_file(in_path.c_str(), suite.c_str(), max_m, budget,
                                 &doc, &failures);
    }
    if (const int rc = map_status(status)) return rc;
    const std::string payload = doc;
    ssp_string_free(doc);
    if (!write_or_print(payload, json_path)) return kExitUsage;
    if (!json_path.empty())
        std::cerr << (failures == 0 ? "all checks passed\n"
                                    : "failures: " + std::to_string(failures) + "\n");
    return failures == 0 ? kExitPass : kExitFalsified;
}

int run_sweep(const GenFlags& flags, int count, const std::string& algos_flag,
              int max_m, double budget, const std::string& csv_path) {
    const std::vector<std::string> algos = split_csv(algos_flag);
    if (algos.empty()) return fail_usage("--algos must name at least one algorithm");
    const auto k = parse_range(flags.k);
    if (!k) return fail_usage("bad --k range");

    // one run per k value; within a single k, `count` seeded repetitions
    struct Row {
        std::string fingerprint;
        long long k = 0;
        uint64_t seed = 0;
        int m = 0;
        long long total_length = 0;
        std::map<std::string, long long> lengths;  // algo -> length (-1 skip)
    };
    std::vector<Row> rows;
    for (long long kv = k->lo; kv <= k->hi; ++kv) {
        for (int rep = 0; rep < count; ++rep) {
            const uint64_t seed = flags.seed + static_cast<uint64_t>(rep);
            const auto spec = genspec_json(flags, kv, seed);
            if (!spec) return fail_usage("bad --len range");
            ssp_instance* inst = nullptr;
            if (const int rc =
                    map_status(ssp_instance_generate(spec->c_str(), &inst)))
                return rc;
            Row row;
            row.k = kv;
            row.seed = seed;
            row.m = ssp_instance_size(inst);
            row.total_length = ssp_instance_total_length(inst);
            char* fp = nullptr;
            if (const int rc = map_status(ssp_instance_fingerprint(inst, &fp))) {
                ssp_instance_free(inst);
                return rc;
            }
            row.fingerprint = fp;
            ssp_string_free(fp);
            for (const std::string& algo : algos) {
                ssp_solution* sol = nullptr;
                const ssp_status status =
                    ssp_solve(inst, algo.c_str(), max_m, budget, &sol);
                if (status == SSP_OK) {
                    row.lengths[algo] = ssp_solution_length(sol);
                    ssp_solution_free(sol);
                } else if (status == SSP_ERR_TOO_LARGE ||
                           status == SSP_ERR_BUDGET) {
                    row.lengths[algo] = -1;  // recorded as empty cell
                } else {
                    ssp_instance_free(inst);
                    return map_status(status);
                }
            }
            ssp_instance_free(inst);
            rows.push_back(std::move(row));
        }
    }
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        return a.fingerprint < b.fingerprint;
    });

    const bool with_ratio =
        std::find(algos.begin(), algos.end(), "exact") != algos.end();
    std::ostringstream csv;
    csv << "fingerprint,family,k,seed,m,total_length";
    for (const std::string& algo : algos) csv << ",len_" << algo;
    if (with_ratio)
        for (const std::string& algo : algos)
            if (algo != "exact") csv << ",ratio_" << algo;
    csv << "\n";
    for (const Row& row : rows) {
        csv << row.fingerprint << "," << flags.family << "," << row.k << ","
            << row.seed << "," << row.m << "," << row.total_length;
        for (const std::string& algo : algos) {
            const long long len = row.lengths.at(algo);
            csv << ",";
            if (len >= 0) csv << len;
        }
        if (with_ratio) {
            const long long n = row.lengths.at("exact");
            for (const std::string& algo : algos) {
                if (algo == "exact") continue;
                const long long len = row.lengths.at(algo);
                csv << ",";
                if (n > 0 && len >= 0) {
                    char buf[32];
                    std::snprintf(buf, sizeof buf, "%.6f",
                                  static_cast<double>(len) / static_cast<double>(n));
                    csv << buf;
                }
            }
        }
        csv << "\n";
    }
    return write_or_print(csv.str(), csv_path) ? kExitPass : kExitUsage;
}

int run_report(const std::string& in_path) {
    std::ifstream in(in_path, std::ios::binary);
    if (!in) return fail_usage("cannot open " + in_path);
    std::ostringstream buf;
    buf << in.rdbuf();
    char* table = nullptr;
    long long mismatches = 0, failures = 0;
    const ssp_status status = ssp_recheck_report(buf.str().c_str(), &table,
                                                 &mismatches, &failures);
    if (const int rc = map_status(status)) return rc;
    std::cout << table;
    ssp_string_free(table);
    return (mismatches == 0 && failures == 0) ? kExitPass : kExitFalsified;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"shortest-superstring toolbox (library "
                 + std::string(ssp_version()) + ")"};
    app.require_subcommand(1);

    GenFlags gen_flags;
    std::string out_path;
    auto* gen = app.add_subcommand("gen", "generate an instance file");
    add_gen_flags(gen, gen_flags, true);
    gen->add_option("--out", out_path, "output path (default: stdout)");

    std::string solve_in, solve_algo = "greedy";
    int solve_max_m = 0;
    double solve_budget = 0.0;
    auto* solve = app.add_subcommand("solve", "solve one instance file");
    solve->add_option("--in", solve_in, "instance file")->required();
    solve->add_option(
        "--algo", solve_algo,
        "greedy|mgreedy|tgreedy|pipeline-greedy|pipeline-exact|exact");
    solve->add_option("--max-m", solve_max_m, "exact-solver node cap");
    solve->add_option("--budget", solve_budget, "exact-solver seconds");

    GenFlags verify_flags;
    std::string verify_gen, verify_in, verify_suite = "all", verify_json;
    int verify_count = 1, verify_max_m = 12;
    double verify_budget = 0.0;
    auto* verify = app.add_subcommand("verify", "run a check suite");
    verify->add_option("--gen", verify_gen,
                       "generate instances from this family");
    verify->add_option("--family", verify_gen, "alias of --gen");
    verify->add_option("--in", verify_in, "verify one instance file");
    verify->add_option("--suite", verify_suite,
                       "main-bound|first-bound|second-bound|culprits|lemmas|"
                       "transform|all");
    verify->add_option("--count", verify_count, "instances to generate");
    add_gen_flags(verify, verify_flags, false);
    verify->add_option("--max-m", verify_max_m,
                       "exact-solver node cap (default 12)");
    verify->add_option("--budget", verify_budget, "exact-solver seconds");
    verify->add_option("--json", verify_json, "report path (default: stdout)");

    GenFlags sweep_flags;
    std::string sweep_algos = "greedy,exact", sweep_csv;
    int sweep_count = 1, sweep_max_m = 12;
    double sweep_budget = 0.0;
    auto* sweep = app.add_subcommand("sweep", "algorithms across a range");
    add_gen_flags(sweep, sweep_flags, true);
    sweep->add_option("--count", sweep_count, "seeded repetitions per k");
    sweep->add_option("--algos", sweep_algos, "comma-separated algorithms");
    sweep->add_option("--max-m", sweep_max_m,
                      "exact-solver node cap (default 12)");
    sweep->add_option("--budget", sweep_budget, "exact-solver seconds");
    sweep->add_option("--csv", sweep_csv, "CSV path (default: stdout)");

    std::string report_in;
    auto* report = app.add_subcommand("report", "re-render a JSON report");
    report->add_option("--in", report_in, "report path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitPass : kExitUsage;
    }

    if (gen->parsed()) return run_gen(gen_flags, out_path);
    if (solve->parsed())
        return run_solve(solve_in, solve_algo, solve_max_m, solve_budget);
    if (verify->parsed()) {
        const bool generated = !verify_gen.empty();
        if (generated == !verify_in.empty())
            return fail_usage("verify needs exactly one of --gen/--family or --in");
        if (generated) verify_flags.family = verify_gen;
        if (verify_count < 1) return fail_usage("--count must be positive");
        return run_verify(verify_flags, generated, verify_in, verify_suite,
                          verify_count, verify_max_m, verify_budget, verify_json);
    }
    if (sweep->parsed()) {
        if (sweep_count < 1) return fail_usage("--count must be positive");
        return run_sweep(sweep_flags, sweep_count, sweep_algos, sweep_max_m,
                         sweep_budget, sweep_csv);
    }
    if (report->parsed()) return run_report(report_in);
    return kExitUsage;
}
