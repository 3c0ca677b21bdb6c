// SPDX-License-Identifier: Apache-2.0
#include "ssp/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "ssp/bounds.hpp"
#include "ssp/constants.hpp"
#include "ssp/errors.hpp"

namespace ssp {

const char* check_status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skip: return "skip";
    }
    throw std::invalid_argument("unknown check status");
}

const char* suite_name(Suite s) {
    switch (s) {
        case Suite::main_bound: return "main-bound";
        case Suite::first_bound: return "first-bound";
        case Suite::second_bound: return "second-bound";
        case Suite::culprits: return "culprits";
        case Suite::lemmas: return "lemmas";
        case Suite::transform: return "transform";
        case Suite::all: return "all";
    }
    throw std::invalid_argument("unknown suite");
}

std::optional<Suite> suite_from_name(const std::string& name) {
    for (Suite s : {Suite::main_bound, Suite::first_bound, Suite::second_bound,
                    Suite::culprits, Suite::lemmas, Suite::transform, Suite::all})
        if (name == suite_name(s)) return s;
    return std::nullopt;
}

long long InstanceReport::count(CheckStatus s) const {
    long long n = 0;
    for (const CheckResult& c : checks) n += (c.status == s) ? 1 : 0;
    return n;
}

InstanceReport run_suite(const Instance& inst, Suite suite,
                         const OracleLimits& limits) {
    InstanceReport rep;
    rep.fingerprint = fingerprint(inst);
    rep.m = inst.size();
    rep.total_length = inst.total_length();
    auto append = [&](CheckList rows) {
        for (CheckResult& r : rows) rep.checks.push_back(std::move(r));
    };
    switch (suite) {
        case Suite::main_bound:
            append(check_main_bound(inst, limits));
            append(check_ratios(inst, limits));
            break;
        case Suite::first_bound:
            append(check_first_bound(inst, limits));
            break;
        case Suite::second_bound:
            append(check_second_bound(inst, limits));
            break;
        case Suite::culprits:
            append(check_culprit_bounds(inst, limits));
            break;
        case Suite::lemmas:
            rep.checks.push_back(check_constants());
            append(check_lemma_suite(inst, limits));
            break;
        case Suite::transform:
            append(check_transform(inst, limits));
            break;
        case Suite::all:
            append(check_main_bound(inst, limits));
            append(check_ratios(inst, limits));
            append(check_culprit_bounds(inst, limits));
            append(check_first_bound(inst, limits));
            append(check_second_bound(inst, limits));
            append(check_transform(inst, limits));
            rep.checks.push_back(check_constants());
            append(check_lemma_suite(inst, limits));
            break;
    }
    return rep;
}

namespace {

nlohmann::json check_to_json(const CheckResult& c) {
    nlohmann::json j;
    j["name"] = c.name;
    j["status"] = check_status_name(c.status);
    if (!c.values.empty()) {
        nlohmann::json vals;
        for (const auto& [key, value] : c.values) vals[key] = value;
        j["values"] = vals;
    }
    if (!c.note.empty()) j["note"] = c.note;
    return j;
}

// Registered derivations: given the stored integers, recompute the verdict.
// Absent keys mean "not derivable" (nullopt).
using Deriver = std::function<std::optional<bool>(
    const std::map<std::string, long long>&)>;

std::optional<long long> get(const std::map<std::string, long long>& v,
                             const char* key) {
    const auto it = v.find(key);
    if (it == v.end()) return std::nullopt;
    return it->second;
}

const std::map<std::string, Deriver>& derivers() {
    using V = std::map<std::string, long long>;
    static const std::map<std::string, Deriver> table = [] {
        std::map<std::string, Deriver> t;
        auto quad = [](auto fn) {
            return [fn](const V& v) -> std::optional<bool> { return fn(v); };
        };
        t["cover_is_optimal"] = quad([](const V& v) -> std::optional<bool> {
            const auto a = get(v, "cover_length"), b = get(v, "exact_cover_length");
            if (!a || !b) return std::nullopt;
            return *a == *b;
        });
        t["main_bound"] = quad([](const V& v) -> std::optional<bool> {
            const auto o = get(v, "o"), w = get(v, "w"), n = get(v, "n");
            if (!o || !w || !n) return std::nullopt;
            return Quad57(*o) <= Quad57(*n) + constants().alpha * Quad57(*w);
        });
        t["culprit_length_bound"] = quad([](const V& v) -> std::optional<bool> {
            const auto g = get(v, "greedy_length"), n = get(v, "n"),
                       oc = get(v, "culprit_overlap"), wc = get(v, "culprit_length");
            if (!g || !n || !oc || !wc) return std::nullopt;
            return *g <= 2 * *n + *oc - *wc;
        });
        t["culprit_overlap_bound"] = quad([](const V& v) -> std::optional<bool> {
            const auto oc = get(v, "culprit_overlap"), n = get(v, "n"),
                       wc = get(v, "culprit_length");
            if (!oc || !n || !wc) return std::nullopt;
            return *oc <= *n + 2 * *wc;
        });
        t["culprit_refined_bound"] = quad([](const V& v) -> std::optional<bool> {
            const auto g = get(v, "greedy_length"), n = get(v, "n"),
                       nc = get(v, "culprit_opt"), wc = get(v, "culprit_length");
            if (!g || !n || !nc || !wc) return std::nullopt;
            return Quad57(*g) <= Quad57(2 * *n + *nc) +
                                     (constants().alpha - Quad57(1)) * Quad57(*wc);
        });
        t["first_bound"] = quad([](const V& v) -> std::optional<bool> {
            const auto o = get(v, "o_bar"), n = get(v, "n_bar"),
                       s = get(v, "small_w"), l = get(v, "large_w");
            if (!o || !n || !s || !l) return std::nullopt;
            return 2 * *o <= 2 * *n + 2 * *s + 3 * *l;
        });
        t["modified_opt_increase"] = quad([](const V& v) -> std::optional<bool> {
            const auto np = get(v, "n_prime"), nb = get(v, "n_bar"),
                       s = get(v, "small_w_bar");
            if (!np || !nb || !s) return std::nullopt;
            return *np <= *nb + *s;
        });
        t["ham_cycle_lower_bound"] = quad([](const V& v) -> std::optional<bool> {
            const auto nb = get(v, "n_bar"), c0 = get(v, "c0_length"),
                       s = get(v, "small_w_prime");
            if (!nb || !c0 || !s) return std::nullopt;
            return *nb >= *c0 - *s;
        });
        t["second_bound_modified"] = quad([](const V& v) -> std::optional<bool> {
            const auto o = get(v, "o_prime"), c0 = get(v, "c0_length"),
                       s = get(v, "small_w_prime"), l = get(v, "large_w_prime");
            if (!o || !c0 || !s || !l) return std::nullopt;
            return Quad57(*o) <= Quad57(*c0) +
                                     (constants().gamma - Quad57(1)) * Quad57(*s) +
                                     Quad57(*l);
        });
        t["second_bound"] = quad([](const V& v) -> std::optional<bool> {
            const auto o = get(v, "o_bar"), n = get(v, "n_bar"),
                       s = get(v, "small_w_bar"), l = get(v, "large_w_bar");
            if (!o || !n || !s || !l) return std::nullopt;
            return Quad57(*o) <= Quad57(*n) + constants().gamma * Quad57(*s) +
                                     Quad57(*l);
        });
        t["greedy_ratio"] = quad([](const V& v) -> std::optional<bool> {
            const auto g = get(v, "greedy_length"), n = get(v, "n");
            if (!g || !n) return std::nullopt;
            return Quad57(*g) <= greedy_ratio_ceiling() * Quad57(*n);
        });
        t["mgreedy_ratio"] = quad([](const V& v) -> std::optional<bool> {
            const auto g = get(v, "mgreedy_length"), n = get(v, "n");
            if (!g || !n) return std::nullopt;
            return Quad57(*g) <= mgreedy_ratio_ceiling() * Quad57(*n);
        });
        t["tgreedy_ratio"] = quad([](const V& v) -> std::optional<bool> {
            const auto g = get(v, "tgreedy_length"), n = get(v, "n");
            if (!g || !n) return std::nullopt;
            return Quad57(*g) <= tgreedy_ratio_ceiling() * Quad57(*n);
        });
        t["tgreedy_le_mgreedy"] = quad([](const V& v) -> std::optional<bool> {
            const auto tg = get(v, "tgreedy_length"), mg = get(v, "mgreedy_length");
            if (!tg || !mg) return std::nullopt;
            return *tg <= *mg;
        });
        t["pipeline_two_approx"] = quad([](const V& v) -> std::optional<bool> {
            const auto len = get(v, "length"), n = get(v, "n"), x = get(v, "x"),
                       y = get(v, "y");
            if (!len || !n || !x || !y) return std::nullopt;
            return *len <= 2 * *n && *y >= *x - 2 * *n;
        });
        t["pipeline_x_bound"] = quad([](const V& v) -> std::optional<bool> {
            const auto x = get(v, "x"), n = get(v, "n");
            if (!x || !n) return std::nullopt;
            return Quad57(*x) <= mgreedy_ratio_ceiling() * Quad57(*n);
        });
        t["pipeline_exact_le_greedy"] = quad([](const V& v) -> std::optional<bool> {
            const auto e = get(v, "pipeline_exact_length"),
                       g = get(v, "pipeline_greedy_length");
            if (!e || !g) return std::nullopt;
            return *e <= *g;
        });
        t["pipeline_compression_identity"] =
            quad([](const V& v) -> std::optional<bool> {
                const auto len = get(v, "length"), x = get(v, "x"),
                           p = get(v, "path_profit");
                if (!len || !x || !p) return std::nullopt;
                return *len <= *x - *p;
            });
        t["greedy_path_half_approx"] = quad([](const V& v) -> std::optional<bool> {
            const auto g = get(v, "greedy_path_profit"), b = get(v, "max_path_profit");
            if (!g || !b) return std::nullopt;
            return 2 * *g >= *b;
        });
        t["modified_cover_length_preserved"] =
            quad([](const V& v) -> std::optional<bool> {
                const auto a = get(v, "cover_length_bar"),
                           b = get(v, "cover_length_prime");
                if (!a || !b) return std::nullopt;
                return *a == *b;
            });
        t["modified_cycle_count_preserved"] =
            quad([](const V& v) -> std::optional<bool> {
                const auto a = get(v, "cycles_bar"), b = get(v, "cycles_prime");
                if (!a || !b) return std::nullopt;
                return *a == *b;
            });
        t["modified_small_length_preserved"] =
            quad([](const V& v) -> std::optional<bool> {
                const auto a = get(v, "small_w_bar"), b = get(v, "small_w_prime");
                if (!a || !b) return std::nullopt;
                return *a == *b;
            });
        t["related_count_le_two"] = quad([](const V& v) -> std::optional<bool> {
            const auto c = get(v, "max_small_per_large");
            if (!c) return std::nullopt;
            return *c <= 2;
        });
        t["representative_opt_two_approx"] =
            quad([](const V& v) -> std::optional<bool> {
                const auto r = get(v, "representative_opt"), n = get(v, "n");
                if (!r || !n) return std::nullopt;
                return *r <= 2 * *n;
            });
        t["exchange_lemmas"] = quad([](const V& v) -> std::optional<bool> {
            const auto x = get(v, "violations");
            if (!x) return std::nullopt;
            return *x == 0;
        });
        return t;
    }();
    return table;
}

}  // namespace

std::string report_to_json(std::vector<InstanceReport> reports,
                           const std::string& suite, const std::string& source,
                           double timing_ms) {
    std::stable_sort(reports.begin(), reports.end(),
                     [](const InstanceReport& a, const InstanceReport& b) {
                         return a.fingerprint < b.fingerprint;
                     });
    nlohmann::json doc;
    doc["schema_version"] = 1;
    doc["suite"] = suite;
    doc["source"] = source;
    long long pass = 0, fail = 0, skip = 0;
    nlohmann::json rows = nlohmann::json::array();
    for (const InstanceReport& rep : reports) {
        nlohmann::json r;
        r["fingerprint"] = rep.fingerprint;
        r["m"] = rep.m;
        r["total_length"] = rep.total_length;
        nlohmann::json checks = nlohmann::json::array();
        for (const CheckResult& c : rep.checks) checks.push_back(check_to_json(c));
        r["checks"] = checks;
        rows.push_back(r);
        pass += rep.count(CheckStatus::pass);
        fail += rep.count(CheckStatus::fail);
        skip += rep.count(CheckStatus::skip);
    }
    doc["instances"] = rows;
    doc["summary"] = {{"instances", reports.size()},
                      {"pass", pass},
                      {"fail", fail},
                      {"skip", skip}};
    doc["timing_ms"] = timing_ms;
    return doc.dump(2) + "\n";
}

RecheckStats recheck_report(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad report document: ") + e.what());
    }
    try {
        if (doc.at("schema_version").get<int>() != 1)
            throw ParseError("unsupported report schema version");
        RecheckStats stats;
        for (const auto& inst : doc.at("instances")) {
            for (const auto& check : inst.at("checks")) {
                const std::string status =
                    check.at("status").get<std::string>();
                if (status == "skip") continue;
                ++stats.rows;
                if (status == "fail") ++stats.failures;
                const auto it =
                    derivers().find(check.at("name").get<std::string>());
                if (it == derivers().end()) continue;
                std::map<std::string, long long> values;
                if (check.contains("values"))
                    for (const auto& [key, val] : check.at("values").items())
                        values[key] = val.get<long long>();
                const std::optional<bool> expect = it->second(values);
                if (!expect) continue;
                ++stats.rechecked;
                const bool stored = status == "pass";
                if (stored != *expect) ++stats.mismatches;
            }
        }
        return stats;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad report document: ") + e.what());
    }
}

std::string report_to_table(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad report document: ") + e.what());
    }
    try {
        std::ostringstream out;
        out << "suite: " << doc.at("suite").get<std::string>() << "\n";
        for (const auto& inst : doc.at("instances")) {
            out << inst.at("fingerprint").get<std::string>() << "  m="
                << inst.at("m").get<int>() << "  len="
                << inst.at("total_length").get<long long>() << "\n";
            for (const auto& check : inst.at("checks")) {
                out << "  " << check.at("status").get<std::string>() << "  "
                    << check.at("name").get<std::string>();
                if (check.contains("note"))
                    out << "  (" << check.at("note").get<std::string>() << ")";
                out << "\n";
            }
        }
        const auto& summary = doc.at("summary");
        out << "pass " << summary.at("pass").get<long long>() << ", fail "
            << summary.at("fail").get<long long>() << ", skip "
            << summary.at("skip").get<long long>() << "\n";
        return out.str();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad report document: ") + e.what());
    }
}

}  // namespace ssp
