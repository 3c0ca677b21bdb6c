// SPDX-License-Identifier: Apache-2.0
#pragma once
//
// Cycle covers of the self-loop-complete distance graph.  The greedy scan
// below (the cover stage of the merge algorithms) produces a minimum-length
// cover; cycles carry their closing edge, length and closing overlap, and a
// three-way classification that drives the length bounds.

#include <vector>

#include "ssp/instance.hpp"
#include "ssp/overlap_graph.hpp"
#include "ssp/qnum.hpp"

namespace ssp {

enum class CycleClass { small, large, extra_large };

const char* cycle_class_name(CycleClass c);

// small:       o > 2w
// large:       alpha*w < o <= 2w
// extra_large: o <= alpha*w
// The default threshold alpha = (1+sqrt57)/6 is compared exactly; the
// rational overload probes other thresholds.
CycleClass classify_cycle(int length, int closing_overlap);
CycleClass classify_cycle(int length, int closing_overlap,
                          const Rational& alpha);

struct Cycle {
  // nodes[0] is the head of the closing edge; edges run nodes[i] ->
  // nodes[i+1], plus the closing edge nodes.back() -> nodes[0].
  std::vector<int> nodes;
  int length = 0;           // total distance around the cycle
  int closing_overlap = 0;  // overlap of the closing edge
  CycleClass cls = CycleClass::extra_large;
};

struct CycleCover {
  std::vector<Cycle> cycles;     // ordered by smallest node id
  std::vector<int> cycle_of;     // node id -> index into cycles
  long long total_length = 0;
  long long total_closing_overlap = 0;

  long long class_length_sum(CycleClass c) const;
  long long class_closing_sum(CycleClass c) const;
};

// Scans sorted_edges and accepts every edge whose tail and head slots are
// still free; the accepted set is a permutation and decomposes into the
// returned cover.  Each cycle's closing edge is the edge accepted last,
// which is also a minimum-overlap edge of that cycle.
CycleCover min_cycle_cover_greedy(const OverlapGraph& g);
CycleCover min_cycle_cover_greedy(const Instance& inst);

// Merge-prefix chain around the whole cycle, starting at nodes[0]; its
// length is exactly cycle.length, and every string of the cycle is a
// substring of its infinite power.
Word cycle_word(const Instance& inst, const Cycle& c);

// Chain started at nodes[l] instead (rotation of cycle_word).
Word rotation_word(const Instance& inst, const Cycle& c, int l);

// Chain over all edges except the closing one, then the last word whole:
// the shortest superstring of the cycle's strings laid out in cycle order.
// |representative| == length + closing_overlap.
Word representative(const Instance& inst, const Cycle& c);

struct ModifiedInstance {
  Instance instance;
  struct Origin {
    bool replaced = false;  // true: stands for a whole small cycle
    int ref = -1;           // cycle index when replaced, else original node
  };
  std::vector<Origin> origins;  // one per node of `instance`
  int swallowed = 0;  // words lost to reduction beyond the replaced ones
};

// Replaces each Small cycle's strings with one combined word (the cycle
// word extended by the cycle's first string); all other strings pass
// through.  The result is re-reduced; any extra word swallowed by that
// reduction is counted, not silently dropped.
ModifiedInstance modified_instance(const Instance& inst,
                                   const CycleCover& cover);

struct SubInstance {
  Instance instance;
  std::vector<int> original_ids;  // new node id -> original node id
  std::vector<int> new_ids;       // original node id -> new id, or -1
};

// Restriction to the given original node ids (kept in ascending id order so
// the canonical edge order is preserved under restriction).
SubInstance restrict_instance(const Instance& inst,
                              const std::vector<int>& node_ids);

// Restriction to the strings of the chosen cycles.
SubInstance subset_instance(const Instance& inst, const CycleCover& cover,
                            const std::vector<int>& chosen_cycles);

}  // namespace ssp
