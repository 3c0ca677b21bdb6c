#include <doctest.h>

#include <vector>

#include "ssp/algorithms.hpp"
#include "ssp/cycle_cover.hpp"
#include "ssp/generate.hpp"
#include "ssp/instance.hpp"
#include "ssp/oracles.hpp"

using ssp::Instance;

namespace {

Instance seeded_instance(uint64_t seed, int m, int len_hi = 8) {
    ssp::GenSpec spec;
    spec.family = "random";
    spec.m = m;
    spec.len_lo = 2;
    spec.len_hi = len_hi;
    spec.alphabet = 2 + static_cast<int>(seed % 3);
    spec.seed = seed;
    return ssp::generate(spec).instance;
}

}  // namespace

TEST_CASE("greedy on the alternating-square pair") {
    const auto inst = Instance::of({"abababa", "bababab"});
    const auto run = ssp::greedy_superstring(inst);
    CHECK(run.result.length == 8);  // one merge of overlap 6
    CHECK(run.result.text.size() == 8);
    REQUIRE(run.trace.accepted.size() == 1);
    CHECK(run.trace.accepted[0].overlap == 6);
    // the reverse edge was rejected as cycle-closing
    REQUIRE(run.trace.back_edges.size() == 1);
    const auto& back = run.trace.back_edges[0];
    CHECK(back.closing_overlap == 6);
    CHECK(back.cycle_length == 2);
    CHECK(back.culprit);
    CHECK(back.first == 0);
    CHECK(back.last == 1);
    const auto stats = ssp::culprit_stats(run.trace);
    CHECK(stats.overlap_sum == 6);
    CHECK(stats.length_sum == 2);
    CHECK(stats.culprit_nodes == std::vector<int>{0, 1});
}

TEST_CASE("greedy on disjoint words") {
    const auto inst = Instance::of({"ab", "cd"});
    const auto run = ssp::greedy_superstring(inst);
    CHECK(run.result.length == 4);
    // the free self-loop on node 0 is rejected as cycle-closing before the
    // merge, and the reverse edge closes the finished path afterwards
    REQUIRE(run.trace.back_edges.size() == 2);
    CHECK(run.trace.back_edges[0].edge.tail == 0);
    CHECK(run.trace.back_edges[0].edge.head == 0);
    CHECK(run.trace.back_edges[0].first == run.trace.back_edges[0].last);
    CHECK(run.trace.back_edges[0].culprit);
    CHECK(run.trace.back_edges[1].edge.tail == 1);
    CHECK(run.trace.back_edges[1].edge.head == 0);
    CHECK_FALSE(run.trace.back_edges[1].culprit);
    const auto stats = ssp::culprit_stats(run.trace);
    CHECK(stats.overlap_sum == 0);
    CHECK(stats.length_sum == 2);
    CHECK(stats.culprit_nodes == std::vector<int>{0});
}

TEST_CASE("greedy on a single word leaves an empty trace") {
    const auto inst = Instance::of({"abc"});
    const auto run = ssp::greedy_superstring(inst);
    CHECK(run.result.text == "abc");
    CHECK(run.trace.accepted.empty());
    CHECK(run.trace.back_edges.empty());
}

TEST_CASE("greedy frozen runs") {
    // the adversarial triple where greedy hits ratio 2
    const auto blum2 = Instance::of({"cabab", "baba", "ababc"});
    const auto run = ssp::greedy_superstring(blum2);
    CHECK(run.result.text == "babacababc");
    CHECK(run.result.length == 10);  // 4k + 2 at k = 2
    CHECK(run.result.order == std::vector<int>{1, 0, 2});

    const auto tarhio3 = Instance::of({"abbb", "bbbb", "bbba"});
    const auto t = ssp::greedy_superstring(tarhio3);
    CHECK(t.result.text == "abbbba");
    CHECK(t.result.length == 6);  // k + 3
    CHECK(t.result.order == std::vector<int>{0, 1, 2});
}

TEST_CASE("merge algorithms yield superstrings across a sweep") {
    for (uint64_t seed = 1; seed <= 150; ++seed) {
        const Instance inst = seeded_instance(seed, 2 + static_cast<int>(seed % 7));
        CAPTURE(seed);
        const auto g = ssp::greedy_superstring(inst);
        const auto m = ssp::mgreedy_superstring(inst);
        const auto t = ssp::tgreedy_superstring(inst);
        CHECK(ssp::is_superstring(g.result.text, inst));
        CHECK(ssp::is_superstring(m.text, inst));
        CHECK(ssp::is_superstring(t.text, inst));
        CHECK(t.length <= m.length);
        CHECK(static_cast<long long>(g.result.text.size()) == g.result.length);

        // mgreedy length is exactly cover length plus closing overlaps
        const auto cover = ssp::min_cycle_cover_greedy(inst);
        CHECK(m.length == cover.total_length + cover.total_closing_overlap);

        // back-edge intervals sit inside the final path and culprits are
        // minimal intervals
        for (const auto& b : g.trace.back_edges) {
            CHECK(b.first >= 0);
            CHECK(b.first <= b.last);
            if (b.edge.tail == b.edge.head) {
                CHECK(b.first == b.last);
            } else {
                CHECK(b.first < b.last);
            }
            CHECK(b.last < inst.size());
        }
    }
}

TEST_CASE("pipeline identity and solver equivalences") {
    for (uint64_t seed = 1; seed <= 120; ++seed) {
        const Instance inst = seeded_instance(seed, 2 + static_cast<int>(seed % 6), 7);
        CAPTURE(seed);
        const auto greedy_pipe = ssp::pipeline_superstring(
            inst, ssp::PathSolverKind::greedy_half, ssp::OracleLimits{});
        const auto exact_pipe = ssp::pipeline_superstring(
            inst, ssp::PathSolverKind::exact_dp, ssp::OracleLimits{});
        const auto tg = ssp::tgreedy_superstring(inst);

        // the greedy-solver pipeline *is* tgreedy
        CHECK(greedy_pipe.result.text == tg.text);
        CHECK(greedy_pipe.result.length == tg.length);
        CHECK(exact_pipe.result.length <= greedy_pipe.result.length);
        CHECK(ssp::is_superstring(exact_pipe.result.text, inst));

        // compression accounting: length = reduced total - path profit
        CHECK(exact_pipe.result.length ==
              exact_pipe.reduced_total - exact_pipe.path_profit);
        CHECK(greedy_pipe.result.length ==
              greedy_pipe.reduced_total - greedy_pipe.path_profit);
        CHECK(greedy_pipe.representative_total >= greedy_pipe.reduced_total);
    }
}

TEST_CASE("greedy path scan achieves at least half the optimum") {
    for (uint64_t seed = 1; seed <= 150; ++seed) {
        const Instance inst = seeded_instance(seed, 2 + static_cast<int>(seed % 6), 7);
        CAPTURE(seed);
        const auto greedy = ssp::greedy_max_path(inst);
        const auto exact = ssp::exact_max_ham_path(inst);
        CHECK(2 * greedy.profit >= exact.profit);
        CHECK(greedy.profit <= exact.profit);
    }
}

TEST_CASE("first occurrence order recovers every word") {
    const auto inst = Instance::of({"abc", "bca", "cab"});
    const auto order = ssp::first_occurrence_order(inst, "abcabc");
    CHECK(order == std::vector<int>{0, 1, 2});
    CHECK_THROWS_AS(ssp::first_occurrence_order(inst, "abc"),
                    std::invalid_argument);
}

TEST_CASE("pipeline names follow the solver") {
    const auto inst = Instance::of({"abc", "bca"});
    const auto a = ssp::pipeline_superstring(inst, ssp::PathSolverKind::greedy_half,
                                             ssp::OracleLimits{});
    const auto b = ssp::pipeline_superstring(inst, ssp::PathSolverKind::exact_dp,
                                             ssp::OracleLimits{});
    CHECK(a.result.algorithm == "pipeline-greedy");
    CHECK(b.result.algorithm == "pipeline-exact");
}
