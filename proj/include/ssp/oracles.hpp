// SPDX-License-Identifier: Apache-2.0
#pragma once
//
// Exact small-instance solvers: subset DP over Hamiltonian paths/cycles with
// overlap profit, and an O(m^3) assignment solver for minimum-length cycle
// covers.  Solvers refuse instances beyond their caps instead of degrading
// to an approximation.

#include <functional>
#include <vector>

#include "ssp/errors.hpp"
#include "ssp/instance.hpp"
#include "ssp/overlap_graph.hpp"

namespace ssp {

struct OracleLimits {
  int max_nodes_dp = 14;  // clamped to a hard cap of 20 (memory guard)
  double time_budget_seconds = 30.0;
};

struct PathSolution {
  long long profit = 0;
  std::vector<int> order;
};

struct SuperstringSolution {
  long long length = 0;
  std::vector<int> order;
  Word text;
};

struct CycleCoverSolution {
  long long length = 0;
  std::vector<int> successor;
};

// Max-overlap Hamiltonian path / cycle.  Ties among optimal solutions break
// to the lexicographically smallest order; cycles are anchored at node 0.
PathSolution exact_max_ham_path(const Instance&, const OracleLimits& = {});
PathSolution exact_max_ham_cycle(const Instance&, const OracleLimits& = {});

// Shortest superstring: total word length minus max path overlap.
SuperstringSolution exact_superstring(const Instance&,
                                      const OracleLimits& = {});

// As above with one adjacency (ban_tail immediately followed by ban_head)
// forbidden; decides whether some optimal superstring avoids a given merge.
SuperstringSolution exact_superstring_banned(const Instance&, int ban_tail,
                                             int ban_head,
                                             const OracleLimits& = {});

// Exact minimum-length cycle cover via shortest augmenting paths.
CycleCoverSolution exact_min_cycle_cover(const Instance&);
CycleCoverSolution exact_min_cycle_cover(const OverlapGraph&);

// Matrix-level variants; profit[i][j] is the gain of placing j after i.
PathSolution max_path_order(const std::vector<std::vector<int>>& profit,
                            const OracleLimits& = {});
PathSolution max_cycle_order(const std::vector<std::vector<int>>& profit,
                             const OracleLimits& = {});

// Turns any max-cycle solver into a max-path solver: add a zero-profit
// node, solve the tour, cut it at the added node.
using TourSolver =
    std::function<std::vector<int>(const std::vector<std::vector<int>>&)>;
std::vector<int> tour_to_path(const std::vector<std::vector<int>>& profit,
                              const TourSolver& solve_tour);

}  // namespace ssp
