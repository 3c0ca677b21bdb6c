// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "ssp/instance.hpp"

namespace ssp {

// Dense overlap/distance tables over an instance.  The diagonal holds
// self-overlaps, so dist(i,i) is the period of word i.
class OverlapGraph {
 public:
  explicit OverlapGraph(const Instance& inst);

  int size() const { return m_; }
  int ov(int i, int j) const { return ov_[i * m_ + j]; }
  int dist(int i, int j) const { return len_[i] - ov(i, j); }
  int word_length(int i) const { return len_[i]; }

 private:
  int m_ = 0;
  std::vector<int> ov_;
  std::vector<int> len_;
};

struct OverlapEdge {
  int tail = 0;
  int head = 0;
  int overlap = 0;
};

// Canonical scan order shared by every greedy pass: overlap descending,
// then tail ascending, then head ascending.
bool edge_key_less(const OverlapEdge& a, const OverlapEdge& b);

// All m^2 edges, self-loops included, in canonical scan order.
std::vector<OverlapEdge> sorted_edges(const OverlapGraph& g);
std::vector<OverlapEdge> sorted_edges(const Instance& inst);

}  // namespace ssp
