// SPDX-License-Identifier: Apache-2.0
#include "ssp/cycle_cover.hpp"

#include <algorithm>
#include <stdexcept>

#include "ssp/constants.hpp"

namespace ssp {

const char* cycle_class_name(CycleClass c) {
  switch (c) {
    case CycleClass::small: return "small";
    case CycleClass::large: return "large";
    case CycleClass::extra_large: return "extra_large";
  }
  return "?";
}

CycleClass classify_cycle(int length, int closing_overlap) {
  if (closing_overlap > 2 * length) return CycleClass::small;
  if (Quad57(closing_overlap) > constants().alpha * Quad57(length))
    return CycleClass::large;
  return CycleClass::extra_large;
}

CycleClass classify_cycle(int length, int closing_overlap,
                          const Rational& alpha) {
  if (closing_overlap > 2 * length) return CycleClass::small;
  if (Rational(closing_overlap) > alpha * Rational(length))
    return CycleClass::large;
  return CycleClass::extra_large;
}

long long CycleCover::class_length_sum(CycleClass c) const {
  long long total = 0;
  for (const Cycle& cyc : cycles)
    if (cyc.cls == c) total += cyc.length;
  return total;
}

long long CycleCover::class_closing_sum(CycleClass c) const {
  long long total = 0;
  for (const Cycle& cyc : cycles)
    if (cyc.cls == c) total += cyc.closing_overlap;
  return total;
}

CycleCover min_cycle_cover_greedy(const OverlapGraph& g) {
  const int m = g.size();
  std::vector<int> succ(m, -1);
  std::vector<int> accept_rank(m, -1);  // per tail; each tail accepted once
  std::vector<char> in_taken(m, 0);
  int accepted = 0;
  for (const OverlapEdge& e : sorted_edges(g)) {
    if (succ[e.tail] != -1 || in_taken[e.head]) continue;
    succ[e.tail] = e.head;
    in_taken[e.head] = 1;
    accept_rank[e.tail] = accepted++;
    if (accepted == m) break;
  }

  CycleCover cover;
  cover.cycle_of.assign(m, -1);
  std::vector<char> visited(m, 0);
  for (int v = 0; v < m; ++v) {
    if (visited[v]) continue;
    std::vector<int> members;
    for (int x = v; !visited[x]; x = succ[x]) {
      visited[x] = 1;
      members.push_back(x);
    }
    int closing_tail = members.front();
    for (int t : members)
      if (accept_rank[t] > accept_rank[closing_tail]) closing_tail = t;

    Cycle c;
    const int first = succ[closing_tail];
    for (int x = first;;) {
      c.nodes.push_back(x);
      x = succ[x];
      if (x == first) break;
    }
    const int r = static_cast<int>(c.nodes.size());
    for (int i = 0; i < r; ++i)
      c.length += g.dist(c.nodes[i], c.nodes[(i + 1) % r]);
    c.closing_overlap = g.ov(closing_tail, first);
    c.cls = classify_cycle(c.length, c.closing_overlap);

    const int idx = static_cast<int>(cover.cycles.size());
    for (int x : c.nodes) cover.cycle_of[x] = idx;
    cover.total_length += c.length;
    cover.total_closing_overlap += c.closing_overlap;
    cover.cycles.push_back(std::move(c));
  }
  return cover;
}

CycleCover min_cycle_cover_greedy(const Instance& inst) {
  return min_cycle_cover_greedy(OverlapGraph(inst));
}

namespace {

// Merge prefix along a cycle edge; a self-loop contributes the period word.
Word chain_prefix(const Instance& inst, int u, int v) {
  const Word& s = inst.word(u);
  return u == v ? period_word(s) : merge_prefix(s, inst.word(v));
}

}  // namespace

Word cycle_word(const Instance& inst, const Cycle& c) {
  const int r = static_cast<int>(c.nodes.size());
  Word out;
  for (int i = 0; i < r; ++i)
    out += chain_prefix(inst, c.nodes[i], c.nodes[(i + 1) % r]);
  return out;
}

Word rotation_word(const Instance& inst, const Cycle& c, int l) {
  const int r = static_cast<int>(c.nodes.size());
  if (l < 0 || l >= r) throw std::invalid_argument("rotation out of range");
  Word out;
  for (int i = 0; i < r; ++i)
    out += chain_prefix(inst, c.nodes[(l + i) % r], c.nodes[(l + i + 1) % r]);
  return out;
}

Word representative(const Instance& inst, const Cycle& c) {
  Word out;
  for (size_t i = 0; i + 1 < c.nodes.size(); ++i)
    out += chain_prefix(inst, c.nodes[i], c.nodes[i + 1]);
  out += inst.word(c.nodes.back());
  return out;
}

ModifiedInstance modified_instance(const Instance& inst,
                                   const CycleCover& cover) {
  std::vector<Word> words;
  std::vector<ModifiedInstance::Origin> origins;
  std::vector<char> emitted(cover.cycles.size(), 0);
  for (int v = 0; v < inst.size(); ++v) {
    const int ci = cover.cycle_of[v];
    const Cycle& c = cover.cycles[ci];
    if (c.cls == CycleClass::small) {
      if (!emitted[ci]) {
        emitted[ci] = 1;
        words.push_back(cycle_word(inst, c) + inst.word(c.nodes[0]));
        origins.push_back({true, ci});
      }
    } else {
      words.push_back(inst.word(v));
      origins.push_back({false, v});
    }
  }
  auto red = Instance::reduce(words);
  ModifiedInstance out;
  out.instance = std::move(red.instance);
  for (int kept : red.kept_ids) out.origins.push_back(origins[kept]);
  out.swallowed = red.dropped;
  return out;
}

SubInstance restrict_instance(const Instance& inst,
                              const std::vector<int>& node_ids) {
  std::vector<int> ids = node_ids;
  std::sort(ids.begin(), ids.end());
  SubInstance out;
  out.instance = inst.restricted(ids);
  out.original_ids = ids;
  out.new_ids.assign(inst.size(), -1);
  for (size_t k = 0; k < ids.size(); ++k)
    out.new_ids[ids[k]] = static_cast<int>(k);
  return out;
}

SubInstance subset_instance(const Instance& inst, const CycleCover& cover,
                            const std::vector<int>& chosen_cycles) {
  if (chosen_cycles.empty()) throw std::invalid_argument("no cycles chosen");
  std::vector<char> seen(cover.cycles.size(), 0);
  std::vector<int> nodes;
  for (int ci : chosen_cycles) {
    if (ci < 0 || ci >= static_cast<int>(cover.cycles.size()))
      throw std::invalid_argument("cycle index out of range");
    if (seen[ci]) throw std::invalid_argument("repeated cycle index");
    seen[ci] = 1;
    nodes.insert(nodes.end(), cover.cycles[ci].nodes.begin(),
                 cover.cycles[ci].nodes.end());
  }
  return restrict_instance(inst, nodes);
}

}  // namespace ssp
