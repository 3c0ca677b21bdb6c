// SPDX-License-Identifier: Apache-2.0
#include "ssp/capi.h"

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <new>
#include <stdexcept>
#include <string>
#include <vector>

#include "ssp/algorithms.hpp"
#include "ssp/errors.hpp"
#include "ssp/generate.hpp"
#include "ssp/instance.hpp"
#include "ssp/io.hpp"
#include "ssp/oracles.hpp"
#include "ssp/verify.hpp"

struct ssp_instance {
    ssp::Instance inst;
};

struct ssp_solution {
    ssp::SuperstringResult result;
};

namespace {

thread_local std::string t_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

ssp::OracleLimits make_limits(int max_nodes_dp, double time_budget_seconds) {
    ssp::OracleLimits limits;
    if (max_nodes_dp > 0) limits.max_nodes_dp = max_nodes_dp;
    if (time_budget_seconds > 0) limits.time_budget_seconds = time_budget_seconds;
    return limits;
}

template <typename Fn>
ssp_status guarded(Fn&& fn) {
    try {
        fn();
        t_last_error.clear();
        return SSP_OK;
    } catch (const ssp::TooLargeError& e) {
        t_last_error = e.what();
        return SSP_ERR_TOO_LARGE;
    } catch (const ssp::BudgetError& e) {
        t_last_error = e.what();
        return SSP_ERR_BUDGET;
    } catch (const ssp::IoError& e) {
        t_last_error = e.what();
        return SSP_ERR_IO;
    } catch (const ssp::ParseError& e) {
        t_last_error = e.what();
        return SSP_ERR_INVALID;
    } catch (const std::invalid_argument& e) {
        t_last_error = e.what();
        return SSP_ERR_INVALID;
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return SSP_ERR_INTERNAL;
    }
}

ssp_status invalid(const char* message) {
    t_last_error = message;
    return SSP_ERR_INVALID;
}

ssp::SuperstringResult solve_named(const ssp::Instance& inst,
                                   const std::string& algo,
                                   const ssp::OracleLimits& limits) {
    if (algo == "greedy") return ssp::greedy_superstring(inst).result;
    if (algo == "mgreedy") return ssp::mgreedy_superstring(inst);
    if (algo == "tgreedy") return ssp::tgreedy_superstring(inst);
    if (algo == "pipeline-greedy")
        return ssp::pipeline_superstring(inst, ssp::PathSolverKind::greedy_half,
                                         limits)
            .result;
    if (algo == "pipeline-exact")
        return ssp::pipeline_superstring(inst, ssp::PathSolverKind::exact_dp,
                                         limits)
            .result;
    if (algo == "exact") {
        const ssp::SuperstringSolution sol = ssp::exact_superstring(inst, limits);
        ssp::SuperstringResult r;
        r.algorithm = "exact";
        r.order = sol.order;
        r.text = sol.text;
        r.length = sol.length;
        return r;
    }
    throw std::invalid_argument("unknown algorithm: " + algo);
}

std::string run_verify(std::vector<ssp::Instance> instances, const char* suite,
                       const std::string& source,
                       const ssp::OracleLimits& limits, long long* failures) {
    const auto parsed = ssp::suite_from_name(suite ? suite : "");
    if (!parsed) throw std::invalid_argument("unknown suite");
    const auto start = std::chrono::steady_clock::now();
    std::vector<ssp::InstanceReport> reports;
    reports.reserve(instances.size());
    long long fail_total = 0;
    for (const ssp::Instance& inst : instances) {
        reports.push_back(ssp::run_suite(inst, *parsed, limits));
        fail_total += reports.back().count(ssp::CheckStatus::fail);
    }
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    if (failures) *failures = fail_total;
    return ssp::report_to_json(std::move(reports), suite, source, ms);
}

}  // namespace

extern "C" {

const char* ssp_version(void) { return "1.0.0"; }

const char* ssp_last_error(void) { return t_last_error.c_str(); }

void ssp_string_free(char* s) { std::free(s); }

ssp_status ssp_instance_from_file(const char* path, ssp_instance** out) {
    if (!path || !out) return invalid("null argument");
    return guarded([&] {
        *out = new ssp_instance{ssp::load_instance(path).instance};
    });
}

ssp_status ssp_instance_from_words(const char* const* words, int count,
                                   ssp_instance** out) {
    if (!words || !out || count <= 0) return invalid("null or empty word list");
    return guarded([&] {
        std::vector<ssp::Word> list;
        list.reserve(count);
        for (int i = 0; i < count; ++i) {
            if (!words[i]) throw std::invalid_argument("null word");
            list.emplace_back(words[i]);
        }
        *out = new ssp_instance{ssp::Instance::reduce(list).instance};
    });
}

ssp_status ssp_instance_generate(const char* genspec_json, ssp_instance** out) {
    if (!genspec_json || !out) return invalid("null argument");
    return guarded([&] {
        const ssp::GenSpec spec = ssp::GenSpec::from_json(genspec_json);
        *out = new ssp_instance{ssp::generate(spec).instance};
    });
}

ssp_status ssp_instance_save(const ssp_instance* inst, const char* path) {
    if (!inst || !path) return invalid("null argument");
    return guarded([&] { ssp::save_words(inst->inst.words(), path); });
}

void ssp_instance_free(ssp_instance* inst) { delete inst; }

int ssp_instance_size(const ssp_instance* inst) {
    return inst ? inst->inst.size() : -1;
}

long long ssp_instance_total_length(const ssp_instance* inst) {
    return inst ? inst->inst.total_length() : -1;
}

const char* ssp_instance_word(const ssp_instance* inst, int idx) {
    if (!inst || idx < 0 || idx >= inst->inst.size()) return nullptr;
    return inst->inst.word(idx).c_str();
}

ssp_status ssp_instance_fingerprint(const ssp_instance* inst, char** out) {
    if (!inst || !out) return invalid("null argument");
    return guarded([&] { *out = dup_string(ssp::fingerprint(inst->inst)); });
}

ssp_status ssp_solve(const ssp_instance* inst, const char* algo,
                     int max_nodes_dp, double time_budget_seconds,
                     ssp_solution** out) {
    if (!inst || !algo || !out) return invalid("null argument");
    return guarded([&] {
        *out = new ssp_solution{solve_named(
            inst->inst, algo, make_limits(max_nodes_dp, time_budget_seconds))};
    });
}

void ssp_solution_free(ssp_solution* sol) { delete sol; }

const char* ssp_solution_text(const ssp_solution* sol) {
    return sol ? sol->result.text.c_str() : nullptr;
}

long long ssp_solution_length(const ssp_solution* sol) {
    return sol ? sol->result.length : -1;
}

const char* ssp_solution_algorithm(const ssp_solution* sol) {
    return sol ? sol->result.algorithm.c_str() : nullptr;
}

int ssp_solution_order(const ssp_solution* sol, const int** out) {
    if (!sol || !out) return -1;
    *out = sol->result.order.data();
    return static_cast<int>(sol->result.order.size());
}

ssp_status ssp_verify_generated(const char* genspec_json, int count,
                                const char* suite, int max_nodes_dp,
                                double time_budget_seconds, char** json_doc,
                                long long* failures) {
    if (!genspec_json || !suite || !json_doc || count <= 0)
        return invalid("null argument or non-positive count");
    return guarded([&] {
        ssp::GenSpec spec = ssp::GenSpec::from_json(genspec_json);
        std::vector<ssp::Instance> instances;
        instances.reserve(count);
        const unsigned long long base = spec.seed;
        for (int i = 0; i < count; ++i) {
            spec.seed = base + static_cast<unsigned long long>(i);
            instances.push_back(ssp::generate(spec).instance);
        }
        spec.seed = base;
        *json_doc = dup_string(
            run_verify(std::move(instances), suite, spec.to_json(),
                       make_limits(max_nodes_dp, time_budget_seconds), failures));
    });
}

ssp_status ssp_verify_file(const char* path, const char* suite,
                           int max_nodes_dp, double time_budget_seconds,
                           char** json_doc, long long* failures) {
    if (!path || !suite || !json_doc) return invalid("null argument");
    return guarded([&] {
        std::vector<ssp::Instance> instances;
        instances.push_back(ssp::load_instance(path).instance);
        *json_doc = dup_string(
            run_verify(std::move(instances), suite, path,
                       make_limits(max_nodes_dp, time_budget_seconds), failures));
    });
}

ssp_status ssp_recheck_report(const char* json_text, char** table,
                              long long* mismatches, long long* failures) {
    if (!json_text || !table) return invalid("null argument");
    return guarded([&] {
        const ssp::RecheckStats stats = ssp::recheck_report(json_text);
        std::string rendered = ssp::report_to_table(json_text);
        rendered += "rechecked " + std::to_string(stats.rechecked) + " of " +
                    std::to_string(stats.rows) + " rows, mismatches " +
                    std::to_string(stats.mismatches) + "\n";
        *table = dup_string(rendered);
        if (mismatches) *mismatches = stats.mismatches;
        if (failures) *failures = stats.failures;
    });
}

}  // extern "C"
