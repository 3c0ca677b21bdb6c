// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "ssp/bounds.hpp"
#include "ssp/check.hpp"
#include "ssp/cycle_cover.hpp"
#include "ssp/generate.hpp"
#include "ssp/instance.hpp"
#include "ssp/oracles.hpp"
#include "ssp/verify.hpp"

using ssp::CheckList;
using ssp::CheckResult;
using ssp::CheckStatus;
using ssp::Instance;

namespace {

const CheckResult* find_row(const CheckList& list, const std::string& name) {
    for (const auto& r : list)
        if (r.name == name) return &r;
    return nullptr;
}

bool no_fail(const CheckList& list) {
    return std::none_of(list.begin(), list.end(), [](const CheckResult& r) {
        return r.status == CheckStatus::fail;
    });
}

}  // namespace

TEST_CASE("constants identities hold exactly") {
    const auto r = ssp::check_constants();
    CHECK(r.name == "constants_identities");
    CHECK(r.status == CheckStatus::pass);
}

TEST_CASE("main bound rows on the rotation pair") {
    const Instance inst = Instance::of({"abababa", "bababab"});
    const ssp::OracleLimits limits;
    const auto rows = ssp::check_main_bound(inst, limits);
    REQUIRE(rows.size() == 2);

    const auto* opt = find_row(rows, "cover_is_optimal");
    REQUIRE(opt != nullptr);
    CHECK(opt->status == CheckStatus::pass);
    CHECK(opt->values.at("cover_length") == 2);
    CHECK(opt->values.at("exact_cover_length") == 2);

    const auto* main = find_row(rows, "main_bound");
    REQUIRE(main != nullptr);
    CHECK(main->status == CheckStatus::pass);
    CHECK(main->values.at("o") == 6);
    CHECK(main->values.at("w") == 2);
    CHECK(main->values.at("n") == 8);
    CHECK(main->values.at("m") == 2);
}

TEST_CASE("culprit rows on the rotation pair") {
    const Instance inst = Instance::of({"abababa", "bababab"});
    const ssp::OracleLimits limits;
    const auto rows = ssp::check_culprit_bounds(inst, limits);
    CHECK(no_fail(rows));
    for (const char* name :
         {"back_edge_intervals_laminar", "culprit_cycles_disjoint",
          "culprit_cycles_reproduced", "culprit_length_bound",
          "culprit_overlap_bound", "culprit_refined_bound"}) {
        const auto* r = find_row(rows, name);
        REQUIRE_MESSAGE(r != nullptr, name);
        CHECK_MESSAGE(r->status == CheckStatus::pass, name);
    }
}

TEST_CASE("restricted setup covers the non-extra-large part") {
    const Instance pair = Instance::of({"abababa", "bababab"});
    const auto setup =
        ssp::make_restricted_setup(pair, ssp::min_cycle_cover_greedy(pair));
    CHECK(setup.has_bar);
    CHECK(setup.bar.original_ids == std::vector<int>{0, 1});
    CHECK(setup.reproduced);
    // the Small 2-cycle collapses to one representative word
    CHECK(setup.prime.instance.size() == 1);

    const Instance xl = Instance::of({"ab", "cd"});
    const auto none =
        ssp::make_restricted_setup(xl, ssp::min_cycle_cover_greedy(xl));
    CHECK_FALSE(none.has_bar);
}

TEST_CASE("rotation witness is vacuous when all words share the power") {
    const Instance inst = Instance::of({"abababa", "bababab"});
    const auto cover = ssp::min_cycle_cover_greedy(inst);
    CHECK(ssp::overlap_rotation_witness(inst, cover, 0) == 1);
}

TEST_CASE("every suite is clean on hand instances") {
    const ssp::OracleLimits limits;
    const std::vector<std::vector<std::string>> corpora = {
        {"abababa", "bababab"},
        {"abbb", "bbbb", "bbba"},
        {"ab", "cd"},
        {"aa", "ab"},
        {"abc", "bca", "cab"},
        {"aaaa", "ababa"},
    };
    for (const auto& words : corpora) {
        const Instance inst = Instance::of(words);
        CHECK(no_fail(ssp::check_main_bound(inst, limits)));
        CHECK(no_fail(ssp::check_culprit_bounds(inst, limits)));
        CHECK(no_fail(ssp::check_first_bound(inst, limits)));
        CHECK(no_fail(ssp::check_second_bound(inst, limits)));
        CHECK(no_fail(ssp::check_transform(inst, limits)));
        CHECK(no_fail(ssp::check_ratios(inst, limits)));
        CHECK(no_fail(ssp::check_lemma_suite(inst, limits)));
    }
}

TEST_CASE("suite names roundtrip") {
    using ssp::Suite;
    for (Suite s : {Suite::main_bound, Suite::first_bound, Suite::second_bound,
                    Suite::culprits, Suite::lemmas, Suite::transform,
                    Suite::all}) {
        const auto back = ssp::suite_from_name(ssp::suite_name(s));
        REQUIRE(back.has_value());
        CHECK(*back == s);
    }
    CHECK_FALSE(ssp::suite_from_name("bogus").has_value());
}

TEST_CASE("full suite reports are clean, rendered, and recheckable") {
    const ssp::OracleLimits limits;
    std::vector<ssp::InstanceReport> reports;
    for (uint64_t seed = 1; seed <= 25; ++seed) {
        ssp::GenSpec spec;
        spec.family = seed % 5 == 0 ? "periodic" : "random";
        spec.m = 2 + static_cast<int>(seed % 5);
        spec.alphabet = 2 + static_cast<int>(seed % 3);
        spec.len_lo = 2;
        spec.len_hi = 8;
        spec.k = 1 + static_cast<int>(seed % 3);
        spec.seed = seed;
        const Instance inst = ssp::generate(spec).instance;

        auto rep = ssp::run_suite(inst, ssp::Suite::all, limits);
        CHECK(rep.fingerprint == ssp::fingerprint(inst));
        CHECK(rep.m == inst.size());
        CHECK(rep.clean());
        CHECK(rep.count(CheckStatus::pass) > 0);
        reports.push_back(std::move(rep));
    }

    const std::string json =
        ssp::report_to_json(reports, "all", "unit-sweep", 0.0);
    CHECK(json.find("\"schema_version\"") != std::string::npos);

    const auto stats = ssp::recheck_report(json);
    CHECK(stats.rows > 0);
    CHECK(stats.rechecked > 0);
    CHECK(stats.mismatches == 0);
    CHECK(stats.failures == 0);

    const std::string table = ssp::report_to_table(json);
    CHECK(table.find("main_bound") != std::string::npos);
    CHECK(table.find(reports.front().fingerprint) != std::string::npos);
}
