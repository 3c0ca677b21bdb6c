#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "ssp/errors.hpp"
#include "ssp/generate.hpp"
#include "ssp/instance.hpp"
#include "ssp/oracles.hpp"
#include "ssp/overlap_graph.hpp"

using ssp::Instance;
using ssp::OracleLimits;

namespace {

// Reference values by enumeration over all permutations.
long long brute_max_path(const ssp::OverlapGraph& g) {
    std::vector<int> perm(g.size());
    std::iota(perm.begin(), perm.end(), 0);
    long long best = 0;
    do {
        long long profit = 0;
        for (int i = 0; i + 1 < g.size(); ++i)
            profit += g.ov(perm[i], perm[i + 1]);
        best = std::max(best, profit);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

long long brute_max_cycle(const ssp::OverlapGraph& g) {
    std::vector<int> perm(g.size());
    std::iota(perm.begin(), perm.end(), 0);
    long long best = 0;
    do {
        long long profit = g.ov(perm.back(), perm.front());
        for (int i = 0; i + 1 < g.size(); ++i)
            profit += g.ov(perm[i], perm[i + 1]);
        best = std::max(best, profit);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// Minimum cycle-cover length = min over successor permutations of the
// distance sum, self-loops allowed.
long long brute_min_cover(const ssp::OverlapGraph& g) {
    std::vector<int> perm(g.size());
    std::iota(perm.begin(), perm.end(), 0);
    long long best = -1;
    do {
        long long length = 0;
        for (int i = 0; i < g.size(); ++i) length += g.dist(i, perm[i]);
        if (best < 0 || length < best) best = length;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

Instance seeded_instance(uint64_t seed, int m) {
    ssp::GenSpec spec;
    spec.family = "random";
    spec.m = m;
    spec.len_lo = 2;
    spec.len_hi = 6;
    spec.alphabet = 2 + static_cast<int>(seed % 3);
    spec.seed = seed;
    return ssp::generate(spec).instance;
}

}  // namespace

TEST_CASE("exact path, cycle, cover and superstring match brute force") {
    for (uint64_t seed = 1; seed <= 120; ++seed) {
        const Instance inst = seeded_instance(seed, 2 + static_cast<int>(seed % 5));
        const ssp::OverlapGraph g(inst);
        CAPTURE(seed);

        const auto path = ssp::exact_max_ham_path(inst);
        CHECK(path.profit == brute_max_path(g));
        long long along = 0;
        for (size_t i = 0; i + 1 < path.order.size(); ++i)
            along += g.ov(path.order[i], path.order[i + 1]);
        CHECK(along == path.profit);

        const auto cyc = ssp::exact_max_ham_cycle(inst);
        CHECK(cyc.profit == brute_max_cycle(g));

        const auto cover = ssp::exact_min_cycle_cover(inst);
        CHECK(cover.length == brute_min_cover(g));

        const auto ss = ssp::exact_superstring(inst);
        CHECK(ss.length == inst.total_length() - path.profit);
        CHECK(ss.text.size() == static_cast<size_t>(ss.length));
        CHECK(ssp::is_superstring(ss.text, inst));
    }
}

TEST_CASE("frozen exact values") {
    const auto abc = Instance::of({"abc", "bca", "cab"});
    CHECK(ssp::exact_superstring(abc).length == 5);  // "abcab"
    CHECK(ssp::is_superstring("abcab", abc));

    const auto square = Instance::of({"abababa", "bababab"});
    CHECK(ssp::exact_superstring(square).length == 8);
    CHECK(ssp::exact_max_ham_cycle(square).profit == 12);

    const auto blum2 = Instance::of({"cabab", "baba", "ababc"});
    CHECK(ssp::exact_superstring(blum2).length == 8);  // 2k + 4 at k = 2
}

TEST_CASE("banned-adjacency superstring") {
    const auto inst = Instance::of({"abc", "bca", "cab"});
    const auto free = ssp::exact_superstring(inst);
    // ban every adjacency of some optimum; the banned load can only grow
    for (int u = 0; u < inst.size(); ++u)
        for (int v = 0; v < inst.size(); ++v) {
            if (u == v) continue;
            const auto banned = ssp::exact_superstring_banned(inst, u, v);
            CHECK(banned.length >= free.length);
            CHECK(ssp::is_superstring(banned.text, inst));
            for (size_t i = 0; i + 1 < banned.order.size(); ++i)
                CHECK(!(banned.order[i] == u && banned.order[i + 1] == v));
        }
}

TEST_CASE("oracles refuse oversized instances") {
    std::vector<ssp::Word> words;
    const std::string alphabet = "abcdefghijklmnopqrstuvwxyz";
    for (int i = 0; i < 16; ++i)
        words.push_back(std::string(1, alphabet[i]) + "qq" +
                        std::string(1, alphabet[i + 1]));
    const Instance inst = Instance::reduce(words).instance;
    REQUIRE(inst.size() == 16);
    OracleLimits limits;
    limits.max_nodes_dp = 12;
    CHECK_THROWS_AS(ssp::exact_max_ham_path(inst, limits), ssp::TooLargeError);
    CHECK_THROWS_AS(ssp::exact_superstring(inst, limits), ssp::TooLargeError);
    // the polynomial cover solver still works
    CHECK(ssp::exact_min_cycle_cover(inst).length <= inst.total_length());
}

TEST_CASE("matrix-level solvers and the tour adapter agree") {
    const std::vector<std::vector<int>> profit{
        {0, 5, 1, 0}, {2, 0, 4, 1}, {0, 3, 0, 6}, {4, 0, 2, 0}};
    const auto path = ssp::max_path_order(profit);
    const auto cycle = ssp::max_cycle_order(profit);
    CHECK(path.profit == 15);   // 0 -> 1 -> 2 -> 3
    CHECK(cycle.profit == 19);  // the same plus the closing 3 -> 0
    const auto cut = ssp::tour_to_path(profit, [](const auto& p) {
        return ssp::max_cycle_order(p).order;
    });
    long long along = 0;
    for (size_t i = 0; i + 1 < cut.size(); ++i)
        along += profit[cut[i]][cut[i + 1]];
    // the zero-profit dummy makes the best tour exactly the best path
    CHECK(along == 15);
}
