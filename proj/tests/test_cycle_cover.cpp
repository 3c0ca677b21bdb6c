#include <doctest.h>

#include <algorithm>
#include <set>

#include "ssp/cycle_cover.hpp"
#include "ssp/generate.hpp"
#include "ssp/instance.hpp"
#include "ssp/oracles.hpp"

using ssp::CycleClass;
using ssp::CycleCover;
using ssp::Instance;

TEST_CASE("cycle classification thresholds") {
    // o > 2w
    CHECK(ssp::classify_cycle(2, 5) == CycleClass::small);
    CHECK(ssp::classify_cycle(2, 4) == CycleClass::large);
    // alpha*w < o <= 2w with alpha = (1+sqrt57)/6 ~ 1.425
    CHECK(ssp::classify_cycle(4, 6) == CycleClass::large);
    // o <= alpha*w: 5 <= 1.425*4 = 5.7...
    CHECK(ssp::classify_cycle(4, 5) == CycleClass::extra_large);
    CHECK(ssp::classify_cycle(4, 0) == CycleClass::extra_large);
    // the rational overload moves the boundary
    CHECK(ssp::classify_cycle(4, 5, ssp::Rational(1)) == CycleClass::large);
    CHECK(ssp::classify_cycle(4, 5, ssp::Rational(3, 2)) ==
          CycleClass::extra_large);
}

TEST_CASE("greedy cover on the square-word pair") {
    const auto inst = Instance::of({"abababa", "bababab"});
    const CycleCover cover = ssp::min_cycle_cover_greedy(inst);
    REQUIRE(cover.cycles.size() == 1);
    const auto& c = cover.cycles[0];
    CHECK(c.nodes.size() == 2);
    CHECK(c.length == 2);
    CHECK(c.closing_overlap == 6);
    CHECK(c.cls == CycleClass::small);
    CHECK(cover.total_length == 2);
    CHECK(cover.total_closing_overlap == 6);
    CHECK(ssp::representative(inst, c).size() == 8);
    // cycle word has length w and the strings live inside its power
    const ssp::Word cw = ssp::cycle_word(inst, c);
    CHECK(cw.size() == 2);
    const ssp::Word power = ssp::power_prefix(cw, 16);
    CHECK(power.find(inst.word(0)) != ssp::Word::npos);
    CHECK(power.find(inst.word(1)) != ssp::Word::npos);
    // the rotation started one node later is a rotation of the cycle word
    CHECK(ssp::is_rotation(cw, ssp::rotation_word(inst, c, 1)));
}

TEST_CASE("greedy cover splits the tarhio triple correctly") {
    const auto inst = Instance::of({"abbb", "bbbb", "bbba"});  // k = 3
    const CycleCover cover = ssp::min_cycle_cover_greedy(inst);
    CHECK(cover.total_length == 5);  // k + 2
    const auto exact = ssp::exact_min_cycle_cover(inst);
    CHECK(exact.length == 5);
}

TEST_CASE("two disjoint words form two self-loops") {
    const auto inst = Instance::of({"ab", "cd"});
    const CycleCover cover = ssp::min_cycle_cover_greedy(inst);
    REQUIRE(cover.cycles.size() == 2);
    CHECK(cover.total_length == 4);
    CHECK(cover.total_closing_overlap == 0);
    CHECK(cover.cycles[0].nodes == std::vector<int>{0});
    CHECK(cover.cycles[1].nodes == std::vector<int>{1});
    CHECK(cover.cycle_of[0] == 0);
    CHECK(cover.cycle_of[1] == 1);
}

TEST_CASE("greedy cover length is optimal across a seeded sweep") {
    for (uint64_t seed = 1; seed <= 400; ++seed) {
        ssp::GenSpec spec;
        spec.family = "random";
        spec.m = 2 + static_cast<int>(seed % 6);
        spec.len_lo = 2;
        spec.len_hi = 7;
        spec.alphabet = 2 + static_cast<int>(seed % 3);
        spec.seed = seed;
        const Instance inst = ssp::generate(spec).instance;
        const CycleCover cover = ssp::min_cycle_cover_greedy(inst);
        const auto exact = ssp::exact_min_cycle_cover(inst);
        CAPTURE(seed);
        CHECK(cover.total_length == exact.length);

        // structural sanity: cycles partition the nodes
        std::set<int> seen;
        long long length = 0, closing = 0;
        for (const auto& c : cover.cycles) {
            for (int v : c.nodes) seen.insert(v);
            length += c.length;
            closing += c.closing_overlap;
        }
        CHECK(static_cast<int>(seen.size()) == inst.size());
        CHECK(length == cover.total_length);
        CHECK(closing == cover.total_closing_overlap);
    }
}

TEST_CASE("modification collapses small cycles to single words") {
    const auto inst = Instance::of({"abababa", "bababab", "xyzxy"});
    const CycleCover cover = ssp::min_cycle_cover_greedy(inst);
    const auto mod = ssp::modified_instance(inst, cover);
    // the square-word small cycle becomes one word; xyzxy passes through
    CHECK(mod.instance.size() <= inst.size());
    int replaced = 0;
    for (const auto& origin : mod.origins) replaced += origin.replaced ? 1 : 0;
    CHECK(replaced >= 1);
    const CycleCover after = ssp::min_cycle_cover_greedy(mod.instance);
    for (const auto& c : after.cycles)
        if (c.cls == CycleClass::small) CHECK(c.nodes.size() == 1);
}

TEST_CASE("restrictions keep original ids aligned") {
    const auto inst = Instance::of({"abc", "bca", "cab", "xyz"});
    const auto sub = ssp::restrict_instance(inst, {2, 0});
    REQUIRE(sub.instance.size() == 2);
    CHECK(sub.original_ids == std::vector<int>{0, 2});  // ascending
    CHECK(sub.instance.word(0) == "abc");
    CHECK(sub.instance.word(1) == "cab");
    CHECK(sub.new_ids[0] == 0);
    CHECK(sub.new_ids[1] == -1);
    CHECK(sub.new_ids[2] == 1);
}
