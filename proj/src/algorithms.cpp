// SPDX-License-Identifier: Apache-2.0
#include "ssp/algorithms.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "ssp/cycle_cover.hpp"

namespace ssp {
namespace {

struct ScanBack {
    OverlapEdge edge;
    std::vector<int> segment;  // head .. tail along the pointers at rejection
};

struct ScanResult {
    std::vector<int> order;
    std::vector<OverlapEdge> accepted;
    std::vector<ScanBack> back;
};

int find_root(std::vector<int>& parent, int x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

// The shared scan behind greedy_superstring, greedy_max_path and the
// greedy-half pipeline solver: the full m^2 edge list in canonical order;
// accept an edge iff its tail's out-slot and head's in-slot are free and it
// does not close a cycle.  The whole list is scanned (a single word needs no
// merge, so it scans nothing); a self-loop always closes a cycle, so it is
// never accepted, but while both its slots are free it is rejected purely as
// cycle-closing and therefore recorded.  Keeping self-loops in the recorded
// list is what makes the culprit machinery consistent: a node whose
// self-overlap beats its neighboring merges becomes its own minimal
// interval, exactly mirroring the self-loop the cover scan would pick.
ScanResult greedy_scan(const std::vector<std::vector<int>>& profit,
                       bool record_back) {
    const int m = static_cast<int>(profit.size());
    if (m <= 0) throw std::invalid_argument("empty profit matrix");
    for (const auto& row : profit)
        if (static_cast<int>(row.size()) != m)
            throw std::invalid_argument("profit matrix is not square");
    ScanResult out;
    if (m == 1) {
        out.order = {0};
        return out;
    }
    std::vector<OverlapEdge> edges;
    edges.reserve(static_cast<size_t>(m) * m);
    for (int tail = 0; tail < m; ++tail)
        for (int head = 0; head < m; ++head)
            edges.push_back({tail, head, profit[tail][head]});
    std::sort(edges.begin(), edges.end(), edge_key_less);

    std::vector<int> succ(m, -1), pred(m, -1), parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    int taken = 0;
    for (const auto& e : edges) {
        if (succ[e.tail] != -1 || pred[e.head] != -1) continue;
        if (e.tail == e.head ||
            find_root(parent, e.tail) == find_root(parent, e.head)) {
            // Both slots free within one component: e.head is that path's
            // head and e.tail its tail, so e would close a cycle.
            if (record_back) {
                ScanBack b;
                b.edge = e;
                for (int x = e.head; x != -1; x = succ[x]) b.segment.push_back(x);
                if (b.segment.empty() || b.segment.back() != e.tail)
                    throw std::logic_error("back edge segment does not reach its tail");
                out.back.push_back(std::move(b));
            }
            continue;
        }
        succ[e.tail] = e.head;
        pred[e.head] = e.tail;
        parent[find_root(parent, e.tail)] = find_root(parent, e.head);
        out.accepted.push_back(e);
        ++taken;
    }
    if (taken != m - 1)
        throw std::logic_error("greedy scan did not complete a path");
    int start = -1;
    for (int i = 0; i < m; ++i) {
        if (pred[i] != -1) continue;
        if (start != -1) throw std::logic_error("greedy scan left several path heads");
        start = i;
    }
    out.order.reserve(m);
    for (int x = start; x != -1; x = succ[x]) out.order.push_back(x);
    if (static_cast<int>(out.order.size()) != m)
        throw std::logic_error("greedy scan path misses nodes");
    return out;
}

// Includes the self-overlap diagonal so the trace scan positions self-loops
// at their true overlap; acceptance never reads the diagonal (self-loops are
// always cycle-closing) and path profits only ever sum off-diagonal entries.
std::vector<std::vector<int>> overlap_profit(const OverlapGraph& g) {
    const int m = g.size();
    std::vector<std::vector<int>> profit(m, std::vector<int>(m, 0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) profit[i][j] = g.ov(i, j);
    return profit;
}

long long order_profit(const std::vector<std::vector<int>>& profit,
                       const std::vector<int>& order) {
    long long sum = 0;
    for (size_t i = 0; i + 1 < order.size(); ++i)
        sum += profit[order[i]][order[i + 1]];
    return sum;
}

void require_permutation(const std::vector<int>& order, int m) {
    if (static_cast<int>(order.size()) != m)
        throw std::logic_error("path solver returned a wrong-sized order");
    std::vector<char> seen(m, 0);
    for (int x : order) {
        if (x < 0 || x >= m || seen[x])
            throw std::logic_error("path solver order is not a permutation");
        seen[x] = 1;
    }
}

std::vector<Word> cover_representatives(const Instance& inst,
                                        const CycleCover& cover) {
    std::vector<Word> reps;
    reps.reserve(cover.cycles.size());
    for (const Cycle& c : cover.cycles) reps.push_back(representative(inst, c));
    return reps;
}

}  // namespace

GreedyRun greedy_superstring(const Instance& inst) {
    OverlapGraph g(inst);
    const int m = g.size();
    ScanResult scan = greedy_scan(overlap_profit(g), /*record_back=*/true);

    GreedyRun run;
    run.result.algorithm = "greedy";
    run.result.order = scan.order;
    run.result.text = merge_path(inst, scan.order);
    run.result.length = static_cast<long long>(run.result.text.size());

    long long merged = 0;
    for (const OverlapEdge& e : scan.accepted) merged += e.overlap;
    if (run.result.length != inst.total_length() - merged)
        throw std::logic_error("greedy merge length mismatch");

    run.trace.accepted = std::move(scan.accepted);
    run.trace.order_index.assign(m, -1);
    for (int pos = 0; pos < m; ++pos) run.trace.order_index[scan.order[pos]] = pos;

    run.trace.back_edges.reserve(scan.back.size());
    for (ScanBack& b : scan.back) {
        BackEdge be;
        be.edge = b.edge;
        be.cycle_nodes = std::move(b.segment);
        long long w = 0;
        for (size_t i = 0; i + 1 < be.cycle_nodes.size(); ++i)
            w += g.dist(be.cycle_nodes[i], be.cycle_nodes[i + 1]);
        w += g.dist(be.edge.tail, be.edge.head);
        be.cycle_length = w;
        be.closing_overlap = be.edge.overlap;
        be.first = run.trace.order_index[be.edge.head];
        be.last = run.trace.order_index[be.edge.tail];
        // a rejected self-loop spans the single-position interval [i,i];
        // every other back edge runs strictly backward along the path
        if (be.first < 0 || be.first > be.last ||
            (be.first == be.last && be.edge.tail != be.edge.head))
            throw std::logic_error("back edge spans a degenerate interval");
        run.trace.back_edges.push_back(std::move(be));
    }

    // A culprit spans a minimal interval: no other back edge's interval is
    // properly contained in it.
    const auto& backs = run.trace.back_edges;
    for (size_t i = 0; i < backs.size(); ++i) {
        bool minimal = true;
        for (size_t j = 0; j < backs.size() && minimal; ++j) {
            if (j == i) continue;
            const bool inside = backs[i].first <= backs[j].first &&
                                backs[j].last <= backs[i].last;
            const bool proper = backs[j].first != backs[i].first ||
                                backs[j].last != backs[i].last;
            if (inside && proper) minimal = false;
        }
        if (minimal) {
            run.trace.back_edges[i].culprit = true;
            run.trace.culprit_indices.push_back(static_cast<int>(i));
        }
    }
    return run;
}

CulpritStats culprit_stats(const GreedyTrace& trace) {
    CulpritStats stats;
    for (int idx : trace.culprit_indices) {
        const BackEdge& be = trace.back_edges[idx];
        stats.overlap_sum += be.closing_overlap;
        stats.length_sum += be.cycle_length;
        stats.cycles.push_back(be.cycle_nodes);
        stats.culprit_nodes.insert(stats.culprit_nodes.end(),
                                   be.cycle_nodes.begin(), be.cycle_nodes.end());
    }
    std::sort(stats.culprit_nodes.begin(), stats.culprit_nodes.end());
    stats.culprit_nodes.erase(
        std::unique(stats.culprit_nodes.begin(), stats.culprit_nodes.end()),
        stats.culprit_nodes.end());
    return stats;
}

SuperstringResult mgreedy_superstring(const Instance& inst) {
    CycleCover cover = min_cycle_cover_greedy(inst);
    Word text;
    for (const Word& rep : cover_representatives(inst, cover)) text += rep;

    SuperstringResult r;
    r.algorithm = "mgreedy";
    r.text = std::move(text);
    r.length = static_cast<long long>(r.text.size());
    if (r.length != cover.total_length + cover.total_closing_overlap)
        throw std::logic_error("representative concatenation length mismatch");
    if (!is_superstring(r.text, inst))
        throw std::logic_error("mgreedy output is not a superstring");
    r.order = first_occurrence_order(inst, r.text);
    return r;
}

SuperstringResult tgreedy_superstring(const Instance& inst) {
    CycleCover cover = min_cycle_cover_greedy(inst);
    Instance::Reduction red = Instance::reduce(cover_representatives(inst, cover));
    GreedyRun sub = greedy_superstring(red.instance);

    SuperstringResult r;
    r.algorithm = "tgreedy";
    r.text = std::move(sub.result.text);
    r.length = sub.result.length;
    if (!is_superstring(r.text, inst))
        throw std::logic_error("tgreedy output is not a superstring");
    r.order = first_occurrence_order(inst, r.text);
    return r;
}

PathSolution greedy_max_path(const std::vector<std::vector<int>>& profit) {
    ScanResult scan = greedy_scan(profit, /*record_back=*/false);
    PathSolution sol;
    sol.order = std::move(scan.order);
    sol.profit = order_profit(profit, sol.order);
    return sol;
}

PathSolution greedy_max_path(const Instance& inst) {
    return greedy_max_path(overlap_profit(OverlapGraph(inst)));
}

const char* path_solver_name(PathSolverKind kind) {
    switch (kind) {
        case PathSolverKind::greedy_half: return "greedy";
        case PathSolverKind::exact_dp: return "exact";
    }
    throw std::invalid_argument("unknown path solver");
}

std::vector<int> solve_max_path(const std::vector<std::vector<int>>& profit,
                                PathSolverKind kind, const OracleLimits& limits) {
    switch (kind) {
        case PathSolverKind::greedy_half: return greedy_max_path(profit).order;
        case PathSolverKind::exact_dp: return max_path_order(profit, limits).order;
    }
    throw std::invalid_argument("unknown path solver");
}

PathSolver tour_to_path_adapter(TourSolver tour_solver) {
    return [solver = std::move(tour_solver)](
               const std::vector<std::vector<int>>& profit) {
        return tour_to_path(profit, solver);
    };
}

PipelineResult pipeline_superstring(const Instance& inst, const PathSolver& solver,
                                    const std::string& solver_name) {
    CycleCover cover = min_cycle_cover_greedy(inst);
    std::vector<Word> reps = cover_representatives(inst, cover);
    long long rep_total = 0;
    for (const Word& rep : reps) rep_total += static_cast<long long>(rep.size());
    if (rep_total != cover.total_length + cover.total_closing_overlap)
        throw std::logic_error("representative total length mismatch");

    Instance::Reduction red = Instance::reduce(reps);
    const Instance& reduced = red.instance;
    std::vector<std::vector<int>> profit = overlap_profit(OverlapGraph(reduced));
    std::vector<int> order = solver(profit);
    require_permutation(order, reduced.size());

    PipelineResult out;
    out.representative_total = rep_total;
    out.reduced_total = reduced.total_length();
    out.path_profit = order_profit(profit, order);
    out.result.algorithm = "pipeline-" + solver_name;
    out.result.text = merge_path(reduced, order);
    out.result.length = static_cast<long long>(out.result.text.size());
    if (out.result.length != out.reduced_total - out.path_profit)
        throw std::logic_error("pipeline merge length mismatch");
    if (!is_superstring(out.result.text, inst))
        throw std::logic_error("pipeline output is not a superstring");
    out.result.order = first_occurrence_order(inst, out.result.text);
    return out;
}

PipelineResult pipeline_superstring(const Instance& inst, PathSolverKind kind,
                                    const OracleLimits& limits) {
    PathSolver solver = [kind, limits](const std::vector<std::vector<int>>& profit) {
        return solve_max_path(profit, kind, limits);
    };
    return pipeline_superstring(inst, solver, path_solver_name(kind));
}

std::vector<int> first_occurrence_order(const Instance& inst, const Word& text) {
    std::vector<std::pair<size_t, int>> hits;
    hits.reserve(inst.size());
    for (int i = 0; i < inst.size(); ++i) {
        const size_t pos = text.find(inst.word(i));
        if (pos == Word::npos)
            throw std::invalid_argument("word missing from claimed superstring");
        hits.emplace_back(pos, i);
    }
    std::sort(hits.begin(), hits.end());
    std::vector<int> order;
    order.reserve(hits.size());
    for (const auto& [pos, id] : hits) order.push_back(id);
    return order;
}

}  // namespace ssp
