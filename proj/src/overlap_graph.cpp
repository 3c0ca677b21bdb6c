// SPDX-License-Identifier: Apache-2.0
#include "ssp/overlap_graph.hpp"

#include <algorithm>

namespace ssp {

OverlapGraph::OverlapGraph(const Instance& inst) : m_(inst.size()) {
  ov_.resize(static_cast<size_t>(m_) * m_);
  len_.resize(m_);
  for (int i = 0; i < m_; ++i)
    len_[i] = static_cast<int>(inst.word(i).size());
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j)
      ov_[i * m_ + j] = i == j ? self_overlap(inst.word(i))
                               : overlap(inst.word(i), inst.word(j));
}

bool edge_key_less(const OverlapEdge& a, const OverlapEdge& b) {
  if (a.overlap != b.overlap) return a.overlap > b.overlap;
  if (a.tail != b.tail) return a.tail < b.tail;
  return a.head < b.head;
}

std::vector<OverlapEdge> sorted_edges(const OverlapGraph& g) {
  std::vector<OverlapEdge> edges;
  edges.reserve(static_cast<size_t>(g.size()) * g.size());
  for (int i = 0; i < g.size(); ++i)
    for (int j = 0; j < g.size(); ++j)
      edges.push_back({i, j, g.ov(i, j)});
  std::stable_sort(edges.begin(), edges.end(), edge_key_less);
  return edges;
}

std::vector<OverlapEdge> sorted_edges(const Instance& inst) {
  return sorted_edges(OverlapGraph(inst));
}

}  // namespace ssp
