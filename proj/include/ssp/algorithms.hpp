#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ssp/instance.hpp"
#include "ssp/oracles.hpp"
#include "ssp/overlap_graph.hpp"

namespace ssp {

// A solved superstring: a Hamiltonian order over the instance's nodes plus the
// text it produces.  For merge-based algorithms `order` is the merge order and
// `text` equals the maximal merge along it; for representative-based
// algorithms `order` is the first-occurrence order of the input words in the
// produced text.
struct SuperstringResult {
    std::string algorithm;
    std::vector<int> order;
    Word text;
    long long length = 0;
};

// An edge the greedy scan rejected solely because it would have closed a
// cycle.  `cycle_nodes` is the would-be cycle listed head-first (the path
// segment from edge.head to edge.tail at rejection time); `cycle_length` is
// the distance sum around that cycle and `closing_overlap` the rejected
// edge's overlap.  `first`/`last` are the endpoints of the interval the edge
// spans in final-path coordinates.
struct BackEdge {
    OverlapEdge edge;
    std::vector<int> cycle_nodes;
    long long cycle_length = 0;
    int closing_overlap = 0;
    int first = -1;
    int last = -1;
    bool culprit = false;
};

struct GreedyTrace {
    std::vector<OverlapEdge> accepted;   // in acceptance order
    std::vector<BackEdge> back_edges;    // in rejection order
    std::vector<int> order_index;        // node id -> position on the final path
    std::vector<int> culprit_indices;    // indices into back_edges
};

struct GreedyRun {
    SuperstringResult result;
    GreedyTrace trace;
};

// Aggregates over the culprit back edges of a trace.
struct CulpritStats {
    long long overlap_sum = 0;                 // sum of closing overlaps
    long long length_sum = 0;                  // sum of cycle lengths
    std::vector<int> culprit_nodes;            // sorted node ids on culprit cycles
    std::vector<std::vector<int>> cycles;      // node lists, one per culprit
};

GreedyRun greedy_superstring(const Instance& inst);
CulpritStats culprit_stats(const GreedyTrace& trace);

SuperstringResult mgreedy_superstring(const Instance& inst);
SuperstringResult tgreedy_superstring(const Instance& inst);

// The greedy maximum-profit Hamiltonian path over an explicit profit matrix:
// scan all ordered pairs by non-increasing profit, accept an edge iff both
// endpoints are free and it does not close a cycle.  This is the same scan
// that drives greedy_superstring, exposed as a path solver.
PathSolution greedy_max_path(const std::vector<std::vector<int>>& profit);
PathSolution greedy_max_path(const Instance& inst);

// Named maximum-path solvers for the representative pipeline.
enum class PathSolverKind { greedy_half, exact_dp };
const char* path_solver_name(PathSolverKind kind);

std::vector<int> solve_max_path(const std::vector<std::vector<int>>& profit,
                                PathSolverKind kind, const OracleLimits& limits);

// A pluggable path solver maps a profit matrix to a node order.
using PathSolver =
    std::function<std::vector<int>(const std::vector<std::vector<int>>&)>;

// Adapts a maximum-cycle solver into a path solver by adding a zero-profit
// dummy node, solving the (m+1)-node tour, and cutting it at the dummy.
PathSolver tour_to_path_adapter(TourSolver tour_solver);

struct PipelineResult {
    SuperstringResult result;
    long long representative_total = 0;  // total length of all representatives
    long long reduced_total = 0;         // total length after substring removal
    long long path_profit = 0;           // solver's overlap sum along its path
};

PipelineResult pipeline_superstring(const Instance& inst, const PathSolver& solver,
                                    const std::string& solver_name);
PipelineResult pipeline_superstring(const Instance& inst, PathSolverKind kind,
                                    const OracleLimits& limits);

// Positions of each word's first occurrence in `text`, sorted by
// (position, node id).  Throws std::invalid_argument if a word is missing.
std::vector<int> first_occurrence_order(const Instance& inst, const Word& text);

}  // namespace ssp
