// SPDX-License-Identifier: Apache-2.0
#include "ssp/oracles.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <climits>
#include <stdexcept>
#include <string>

namespace ssp {

namespace {

constexpr int kHardNodeCap = 20;
constexpr long long kNegInf = LLONG_MIN / 4;

using Clock = std::chrono::steady_clock;

struct Deadline {
  Clock::time_point at;
  void check() const {
    if (Clock::now() > at) throw BudgetError("time budget exceeded");
  }
};

int checked_size(size_t m, const OracleLimits& lim) {
  const int cap = std::min(lim.max_nodes_dp, kHardNodeCap);
  if (static_cast<int>(m) > cap)
    throw TooLargeError("instance too large for exact solver (" +
                        std::to_string(m) + " nodes, cap " +
                        std::to_string(cap) + ")");
  if (m == 0) throw std::invalid_argument("empty profit matrix");
  return static_cast<int>(m);
}

// table[mask][i]: best profit of a sequence that starts at i, visits exactly
// `mask` (which contains i), and adds terminal(last) after the last node.
std::vector<long long> completion_table(
    const std::vector<std::vector<int>>& profit,
    const std::vector<long long>& terminal, int m, const Deadline& deadline) {
  std::vector<long long> table(static_cast<size_t>(1) << m, 0);
  table.resize((static_cast<size_t>(1) << m) * m, kNegInf);
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    if ((mask & 0xfff) == 0) deadline.check();
    for (int i = 0; i < m; ++i) {
      if (!(mask >> i & 1)) continue;
      const unsigned rest = mask ^ (1u << i);
      long long best;
      if (rest == 0) {
        best = terminal[i];
      } else {
        best = kNegInf;
        for (int j = 0; j < m; ++j) {
          if (!(rest >> j & 1)) continue;
          const long long cand =
              profit[i][j] + table[static_cast<size_t>(rest) * m + j];
          if (cand > best) best = cand;
        }
      }
      table[static_cast<size_t>(mask) * m + i] = best;
    }
  }
  return table;
}

// Front-to-back walk choosing the smallest feasible node at every step;
// yields the lexicographically smallest optimal order.
std::vector<int> reconstruct(const std::vector<long long>& table,
                             const std::vector<std::vector<int>>& profit,
                             int m, int start) {
  const auto at = [&](unsigned mask, int i) {
    return table[static_cast<size_t>(mask) * m + i];
  };
  const unsigned full = (1u << m) - 1;
  int cur = start;
  if (cur < 0) {
    long long best = kNegInf;
    for (int i = 0; i < m; ++i)
      if (at(full, i) > best) {
        best = at(full, i);
        cur = i;
      }
  }
  std::vector<int> order{cur};
  unsigned mask = full;
  while (mask != (1u << cur)) {
    const unsigned rest = mask ^ (1u << cur);
    const long long want = at(mask, cur);
    int nxt = -1;
    for (int j = 0; j < m && nxt < 0; ++j)
      if ((rest >> j & 1) && profit[cur][j] + at(rest, j) == want) nxt = j;
    assert(nxt >= 0 && "inconsistent DP table");
    order.push_back(nxt);
    mask = rest;
    cur = nxt;
  }
  return order;
}

Deadline make_deadline(const OracleLimits& lim) {
  return {Clock::now() + std::chrono::duration_cast<Clock::duration>(
                             std::chrono::duration<double>(
                                 lim.time_budget_seconds))};
}

std::vector<std::vector<int>> profit_matrix(const OverlapGraph& g) {
  std::vector<std::vector<int>> p(g.size(), std::vector<int>(g.size()));
  for (int i = 0; i < g.size(); ++i)
    for (int j = 0; j < g.size(); ++j) p[i][j] = g.ov(i, j);
  return p;
}

}  // namespace

PathSolution max_path_order(const std::vector<std::vector<int>>& profit,
                            const OracleLimits& lim) {
  const int m = checked_size(profit.size(), lim);
  const Deadline deadline = make_deadline(lim);
  const std::vector<long long> terminal(m, 0);
  const auto table = completion_table(profit, terminal, m, deadline);
  PathSolution out;
  out.order = reconstruct(table, profit, m, -1);
  out.profit = table[(static_cast<size_t>(1u << m) - 1) * m + out.order[0]];
  return out;
}

PathSolution max_cycle_order(const std::vector<std::vector<int>>& profit,
                             const OracleLimits& lim) {
  const int m = checked_size(profit.size(), lim);
  const Deadline deadline = make_deadline(lim);
  std::vector<long long> terminal(m);
  for (int i = 0; i < m; ++i) terminal[i] = profit[i][0];
  const auto table = completion_table(profit, terminal, m, deadline);
  PathSolution out;
  out.order = reconstruct(table, profit, m, 0);
  out.profit = table[(static_cast<size_t>(1u << m) - 1) * m];
  return out;
}

PathSolution exact_max_ham_path(const Instance& inst,
                                const OracleLimits& lim) {
  return max_path_order(profit_matrix(OverlapGraph(inst)), lim);
}

PathSolution exact_max_ham_cycle(const Instance& inst,
                                 const OracleLimits& lim) {
  return max_cycle_order(profit_matrix(OverlapGraph(inst)), lim);
}

SuperstringSolution exact_superstring(const Instance& inst,
                                      const OracleLimits& lim) {
  const PathSolution path = exact_max_ham_path(inst, lim);
  SuperstringSolution out;
  out.order = path.order;
  out.text = merge_path(inst, path.order);
  out.length = static_cast<long long>(out.text.size());
  assert(out.length == inst.total_length() - path.profit);
  return out;
}

SuperstringSolution exact_superstring_banned(const Instance& inst,
                                             int ban_tail, int ban_head,
                                             const OracleLimits& lim) {
  if (inst.size() < 2) throw std::invalid_argument("need two nodes to ban");
  if (ban_tail == ban_head) throw std::invalid_argument("cannot ban a loop");
  auto profit = profit_matrix(OverlapGraph(inst));
  const long long total = inst.total_length();
  // Penalize the banned adjacency below any feasible profit.
  profit[ban_tail][ban_head] = static_cast<int>(
      -2 * std::min<long long>(total, INT_MAX / 4) - 1);
  const PathSolution path = max_path_order(profit, lim);
  SuperstringSolution out;
  out.order = path.order;
  out.text = merge_path(inst, path.order);
  out.length = static_cast<long long>(out.text.size());
  return out;
}

CycleCoverSolution exact_min_cycle_cover(const OverlapGraph& g) {
  // Shortest-augmenting-path assignment over the distance matrix
  // (self-loop cost on the diagonal).
  const int n = g.size();
  constexpr long long kInf = LLONG_MAX / 4;
  std::vector<long long> u(n + 1, 0), v(n + 1, 0);
  std::vector<int> match(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    match[0] = i;
    int j0 = 0;
    std::vector<long long> minv(n + 1, kInf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = match[j0];
      int j1 = -1;
      long long delta = kInf;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const long long cur = g.dist(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const int j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0);
  }
  CycleCoverSolution out;
  out.successor.assign(n, -1);
  for (int j = 1; j <= n; ++j) out.successor[match[j] - 1] = j - 1;
  for (int i = 0; i < n; ++i) out.length += g.dist(i, out.successor[i]);
  return out;
}

CycleCoverSolution exact_min_cycle_cover(const Instance& inst) {
  return exact_min_cycle_cover(OverlapGraph(inst));
}

std::vector<int> tour_to_path(const std::vector<std::vector<int>>& profit,
                              const TourSolver& solve_tour) {
  const int m = static_cast<int>(profit.size());
  if (m == 0) throw std::invalid_argument("empty profit matrix");
  std::vector<std::vector<int>> aug(m + 1, std::vector<int>(m + 1, 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) aug[i][j] = profit[i][j];
  std::vector<int> tour = solve_tour(aug);
  if (static_cast<int>(tour.size()) != m + 1)
    throw std::invalid_argument("tour solver returned a non-tour");
  const auto dummy = std::find(tour.begin(), tour.end(), m);
  if (dummy == tour.end())
    throw std::invalid_argument("tour solver returned a non-tour");
  std::vector<int> order;
  order.reserve(m);
  for (auto it = dummy + 1; it != tour.end(); ++it) order.push_back(*it);
  for (auto it = tour.begin(); it != dummy; ++it) order.push_back(*it);
  return order;
}

}  // namespace ssp
