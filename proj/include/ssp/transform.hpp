// SPDX-License-Identifier: Apache-2.0
#pragma once
//
// Certified transformation of a maximum-overlap Hamiltonian cycle into the
// greedy cycle cover by edge swaps.  Each step forces one missing cover edge
// in, pays for newly completed small cycles through an exactly computed
// charge, and is certified by gain >= charge; the machinery below also
// exposes the swap primitives and the exchange lemmas as standalone checkers.

#include <string>
#include <vector>

#include "ssp/cycle_cover.hpp"
#include "ssp/instance.hpp"
#include "ssp/oracles.hpp"
#include "ssp/overlap_graph.hpp"
#include "ssp/qnum.hpp"

namespace ssp {

// A cycle cover as a successor permutation (self-loops allowed).
struct SuccMap {
    std::vector<int> succ;
    std::vector<int> pred;

    // Validates that `succ` is a permutation and derives `pred`.
    static SuccMap of(std::vector<int> succ);

    int size() const { return static_cast<int>(succ.size()); }
    bool contains(int tail, int head) const { return succ[tail] == head; }
    long long total_overlap(const OverlapGraph& g) const;
    int symmetric_difference(const SuccMap& other) const;
};

SuccMap cover_successors(const CycleCover& cover, int m);
SuccMap cycle_successors(const std::vector<int>& order);  // Hamiltonian cycle

// The swap forcing e = (u, v) into a cover that does not contain it: remove
// f = (pred(v), v) and f' = (u, succ(u)), add e and e' = (pred(v), succ(u)).
// u == v (forcing a self-loop) is allowed; f == f' is impossible while e is
// missing from the cover.
struct Swap {
    OverlapEdge e, e_prime, f, f_prime;
    long long gain = 0;  // ov(e) + ov(e') - ov(f) - ov(f')
};

Swap make_swap(const SuccMap& cur, const OverlapGraph& g, int u, int v);
SuccMap apply_swap(const SuccMap& cur, const Swap& s);

// Coupling between Small and Large cycles of one cover: a Small cycle c
// (with single string s) and a Large cycle c' are related iff
// (gamma - 2) * w(c) <= w(c') and some string s' of c' has
// ov(s, s') >= alpha * w(c') or ov(s', s) >= alpha * w(c').
// Throws std::invalid_argument if some Small cycle has more than one node.
struct RelatedPairs {
    std::vector<std::pair<int, int>> pairs;  // (small cycle idx, large cycle idx)
    std::vector<std::vector<int>> large_of_small;  // small idx -> large idxs
    int max_small_per_large = 0;

    bool related(int small_idx, int large_idx) const;
};

RelatedPairs related_pairs(const Instance& inst, const CycleCover& cover);

// The charge of completing small cycle `cycle_idx`:
//   o(c) - gamma*w(c) - (1/2) * sum over related large c' of (2w(c') - o(c')).
Quad57 merge_charge(const CycleCover& cover, int cycle_idx,
                    const RelatedPairs& rel);

// Indices of the cover's Small cycles all of whose edges are present in cc.
std::vector<int> completed_small_cycles(const CycleCover& cover,
                                        const SuccMap& cc);

// Whether forcing cover edge (u, v) into `cur` satisfies the good-edge
// conditions: (u, v) lies on a Small cycle of the cover while the patch edge
// e' does not, and the heavier removed edge is no lighter than the closing
// overlap of the cycle holding its replaced endpoint (or that cycle is Small
// and no longer than the forced one).
bool good_edge(const SuccMap& cur, const OverlapGraph& g,
               const CycleCover& cover, int u, int v);

// Exchange-lemma checkers over a constructed swap.  `not_applicable` means
// the hypothesis does not hold, so the lemma asserts nothing.
enum class TrioVerdict { not_applicable, holds, violated };

// Shared-endpoint exchange: max{ov(e), ov(e')} >= max{ov(f), ov(f')}
// implies gain >= 0.
TrioVerdict check_monge(const Swap& s);

// e a (self-loop) edge of a Small cycle c of `cover` implies
// gain > ov(e) - max{ov(f), ov(f')} - w(c), strictly.
TrioVerdict check_small_monge(const Swap& s, const OverlapGraph& g,
                              const CycleCover& cover);

// e on cover cycle c, e' on a different cover cycle c', and
// ov(e') >= w(c) + w(c') imply gain > ov(e) - w(c), strictly.
TrioVerdict check_heavy_patch(const Swap& s, const OverlapGraph& g,
                              const CycleCover& cover);

struct TransformStep {
    Swap swap;
    Quad57 charge;                      // owed bound for the chosen swap
    bool gain_ok = false;               // gain >= charge
    int symdiff_drop = 0;               // 2 or 4
    bool had_reduce_by_four = false;    // some candidate patches with e' in C
    bool had_plain_exchange = false;    // some candidate off Small cycles, Monge-ready
    bool had_good_edge = false;         // some candidate is a good edge
    std::vector<int> new_small_cycles;  // cover cycle indices completed here
    long long trio_violations = 0;      // exchange-lemma failures among candidates
    bool charge_upper_ok = true;        // charge <= sum of (o - gamma*w) over new
    bool good_candidates_ok = true;     // every good candidate has gain >= charge
};

struct TransformReport {
    bool skipped = false;  // one-node instance whose only cycle is Small
    std::string note;
    std::vector<TransformStep> steps;
    long long start_overlap = 0;  // overlap of the Hamiltonian cycle
    long long end_overlap = 0;    // overlap of the target cover
    bool start_small_empty = true;  // no Small cycle complete at the start
    bool every_gain_ok = false;
    bool classification_ok = false;  // every step had >= 1 applicable class
    bool monotone_ok = false;        // completed Small set never shrank
    bool terminated = false;         // reached the cover exactly
    bool telescoping_ok = false;     // sum of gains == end - start overlap

    bool certified() const;
};

// Runs the swap sequence from `start` (a Hamiltonian cycle of `inst`) to the
// cover, choosing at each step the missing cover edge maximizing
// gain - charge (ties by the canonical edge key).
TransformReport transform_to_cover(const Instance& inst, const CycleCover& cover,
                                   const SuccMap& start);

// Full pipeline on an already-modified instance: greedy cover, exact
// maximum-overlap Hamiltonian cycle, then the certified transformation.
// Skips (with a note) when the instance is a single word forming a Small
// self-loop, where no Hamiltonian cycle distinct from the cover exists.
TransformReport transform_c0_to_c(const Instance& inst,
                                  const OracleLimits& limits);

}  // namespace ssp
