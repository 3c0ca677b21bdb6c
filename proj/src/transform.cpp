// SPDX-License-Identifier: Apache-2.0
#include "ssp/transform.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "ssp/constants.hpp"

namespace ssp {
namespace {

const Quad57 kHalf{Rational(1, 2), Rational(0)};

Quad57 class_threshold_gap(const CycleCover& cover,
                           const std::vector<int>& cycle_ids,
                           const Quad57& gamma) {
    // sum over the given Small cycles of (o - gamma*w)
    Quad57 sum;
    for (int idx : cycle_ids) {
        const Cycle& c = cover.cycles[idx];
        sum = sum + (Quad57(c.closing_overlap) - gamma * Quad57(c.length));
    }
    return sum;
}

bool cover_edge_on_class(const SuccMap& cover_succ, const CycleCover& cover,
                         int tail, int head, CycleClass cls) {
    return cover_succ.contains(tail, head) &&
           cover.cycles[cover.cycle_of[tail]].cls == cls;
}

}  // namespace

SuccMap SuccMap::of(std::vector<int> succ) {
    const int m = static_cast<int>(succ.size());
    if (m == 0) throw std::invalid_argument("empty successor map");
    SuccMap sm;
    sm.succ = std::move(succ);
    sm.pred.assign(m, -1);
    for (int tail = 0; tail < m; ++tail) {
        const int head = sm.succ[tail];
        if (head < 0 || head >= m)
            throw std::invalid_argument("successor out of range");
        if (sm.pred[head] != -1)
            throw std::invalid_argument("successor map is not a permutation");
        sm.pred[head] = tail;
    }
    return sm;
}

long long SuccMap::total_overlap(const OverlapGraph& g) const {
    long long sum = 0;
    for (int tail = 0; tail < size(); ++tail) sum += g.ov(tail, succ[tail]);
    return sum;
}

int SuccMap::symmetric_difference(const SuccMap& other) const {
    if (other.size() != size())
        throw std::invalid_argument("successor maps over different node sets");
    int diff = 0;
    for (int tail = 0; tail < size(); ++tail)
        if (succ[tail] != other.succ[tail]) ++diff;
    return 2 * diff;
}

SuccMap cover_successors(const CycleCover& cover, int m) {
    std::vector<int> succ(m, -1);
    for (const Cycle& c : cover.cycles) {
        const int r = static_cast<int>(c.nodes.size());
        for (int i = 0; i < r; ++i) succ[c.nodes[i]] = c.nodes[(i + 1) % r];
    }
    for (int tail = 0; tail < m; ++tail)
        if (succ[tail] == -1)
            throw std::invalid_argument("cover does not span the instance");
    return SuccMap::of(std::move(succ));
}

SuccMap cycle_successors(const std::vector<int>& order) {
    const int m = static_cast<int>(order.size());
    if (m == 0) throw std::invalid_argument("empty cycle order");
    std::vector<int> succ(m, -1);
    for (int i = 0; i < m; ++i) {
        const int tail = order[i];
        if (tail < 0 || tail >= m || succ[tail] != -1)
            throw std::invalid_argument("cycle order is not a permutation");
        succ[tail] = order[(i + 1) % m];
    }
    return SuccMap::of(std::move(succ));
}

Swap make_swap(const SuccMap& cur, const OverlapGraph& g, int u, int v) {
    if (u < 0 || v < 0 || u >= cur.size() || v >= cur.size())
        throw std::invalid_argument("swap endpoint out of range");
    if (cur.contains(u, v))
        throw std::invalid_argument("edge to force is already in the cover");
    const int v_prev = cur.pred[v];
    const int u_next = cur.succ[u];
    Swap s;
    s.e = {u, v, g.ov(u, v)};
    s.e_prime = {v_prev, u_next, g.ov(v_prev, u_next)};
    s.f = {v_prev, v, g.ov(v_prev, v)};
    s.f_prime = {u, u_next, g.ov(u, u_next)};
    s.gain = static_cast<long long>(s.e.overlap) + s.e_prime.overlap -
             s.f.overlap - s.f_prime.overlap;
    return s;
}

SuccMap apply_swap(const SuccMap& cur, const Swap& s) {
    std::vector<int> succ = cur.succ;
    if (succ[s.f.tail] != s.f.head || succ[s.f_prime.tail] != s.f_prime.head)
        throw std::invalid_argument("swap does not match the current cover");
    succ[s.e.tail] = s.e.head;
    succ[s.e_prime.tail] = s.e_prime.head;
    return SuccMap::of(std::move(succ));
}

bool RelatedPairs::related(int small_idx, int large_idx) const {
    const auto& row = large_of_small[small_idx];
    return std::find(row.begin(), row.end(), large_idx) != row.end();
}

RelatedPairs related_pairs(const Instance& inst, const CycleCover& cover) {
    const Constants& k = constants();
    OverlapGraph g(inst);
    RelatedPairs rel;
    rel.large_of_small.assign(cover.cycles.size(), {});
    std::vector<int> per_large(cover.cycles.size(), 0);
    for (size_t si = 0; si < cover.cycles.size(); ++si) {
        const Cycle& small = cover.cycles[si];
        if (small.cls != CycleClass::small) continue;
        if (small.nodes.size() != 1)
            throw std::invalid_argument("Small cycle is not a single node");
        const int s_node = small.nodes[0];
        for (size_t li = 0; li < cover.cycles.size(); ++li) {
            const Cycle& large = cover.cycles[li];
            if (large.cls != CycleClass::large) continue;
            if ((k.gamma - Quad57(2)) * Quad57(small.length) >
                Quad57(large.length))
                continue;
            bool heavy = false;
            for (int t_node : large.nodes) {
                if (Quad57(g.ov(s_node, t_node)) >=
                        k.alpha * Quad57(large.length) ||
                    Quad57(g.ov(t_node, s_node)) >=
                        k.alpha * Quad57(large.length)) {
                    heavy = true;
                    break;
                }
            }
            if (!heavy) continue;
            rel.pairs.emplace_back(static_cast<int>(si), static_cast<int>(li));
            rel.large_of_small[si].push_back(static_cast<int>(li));
            per_large[li] += 1;
        }
    }
    for (int count : per_large)
        rel.max_small_per_large = std::max(rel.max_small_per_large, count);
    return rel;
}

Quad57 merge_charge(const CycleCover& cover, int cycle_idx,
                    const RelatedPairs& rel) {
    const Cycle& c = cover.cycles[cycle_idx];
    if (c.cls != CycleClass::small)
        throw std::invalid_argument("merge charge applies to Small cycles only");
    Quad57 related_slack;
    for (int li : rel.large_of_small[cycle_idx]) {
        const Cycle& cp = cover.cycles[li];
        related_slack = related_slack +
                        Quad57(2LL * cp.length - cp.closing_overlap);
    }
    return Quad57(c.closing_overlap) -
           constants().gamma * Quad57(c.length) - kHalf * related_slack;
}

std::vector<int> completed_small_cycles(const CycleCover& cover,
                                        const SuccMap& cc) {
    std::vector<int> out;
    for (size_t idx = 0; idx < cover.cycles.size(); ++idx) {
        const Cycle& c = cover.cycles[idx];
        if (c.cls != CycleClass::small) continue;
        const int r = static_cast<int>(c.nodes.size());
        bool all = true;
        for (int i = 0; i < r && all; ++i)
            all = cc.contains(c.nodes[i], c.nodes[(i + 1) % r]);
        if (all) out.push_back(static_cast<int>(idx));
    }
    return out;
}

bool good_edge(const SuccMap& cur, const OverlapGraph& g,
               const CycleCover& cover, int u, int v) {
    const SuccMap cover_succ = cover_successors(cover, g.size());
    if (!cover_succ.contains(u, v))
        throw std::invalid_argument("good-edge test needs a cover edge");
    const Swap s = make_swap(cur, g, u, v);
    const int c = cover.cycle_of[u];
    if (cover.cycles[c].cls != CycleClass::small) return false;
    if (cover_edge_on_class(cover_succ, cover, s.e_prime.tail, s.e_prime.head,
                            CycleClass::small))
        return false;
    const bool f_heavier = s.f.overlap >= s.f_prime.overlap;
    const int heavy_ov = f_heavier ? s.f.overlap : s.f_prime.overlap;
    const int anchor = f_heavier ? s.f.tail : s.f_prime.head;
    const int cp = cover.cycle_of[anchor];
    if (heavy_ov >= cover.cycles[cp].closing_overlap) return true;
    return cover.cycles[cp].cls == CycleClass::small &&
           cover.cycles[cp].length <= cover.cycles[c].length;
}

TrioVerdict check_monge(const Swap& s) {
    const int add = std::max(s.e.overlap, s.e_prime.overlap);
    const int drop = std::max(s.f.overlap, s.f_prime.overlap);
    if (add < drop) return TrioVerdict::not_applicable;
    return s.gain >= 0 ? TrioVerdict::holds : TrioVerdict::violated;
}

TrioVerdict check_small_monge(const Swap& s, const OverlapGraph& g,
                              const CycleCover& cover) {
    const SuccMap cover_succ = cover_successors(cover, g.size());
    if (!cover_edge_on_class(cover_succ, cover, s.e.tail, s.e.head,
                             CycleClass::small))
        return TrioVerdict::not_applicable;
    const Cycle& c = cover.cycles[cover.cycle_of[s.e.tail]];
    const long long floor = static_cast<long long>(s.e.overlap) -
                            std::max(s.f.overlap, s.f_prime.overlap) - c.length;
    return s.gain > floor ? TrioVerdict::holds : TrioVerdict::violated;
}

TrioVerdict check_heavy_patch(const Swap& s, const OverlapGraph& g,
                              const CycleCover& cover) {
    const SuccMap cover_succ = cover_successors(cover, g.size());
    if (!cover_succ.contains(s.e.tail, s.e.head) ||
        !cover_succ.contains(s.e_prime.tail, s.e_prime.head))
        return TrioVerdict::not_applicable;
    const int c = cover.cycle_of[s.e.tail];
    const int cp = cover.cycle_of[s.e_prime.tail];
    if (c == cp) return TrioVerdict::not_applicable;
    const long long wc = cover.cycles[c].length;
    const long long wcp = cover.cycles[cp].length;
    if (s.e_prime.overlap < wc + wcp) return TrioVerdict::not_applicable;
    return s.gain > s.e.overlap - wc ? TrioVerdict::holds
                                     : TrioVerdict::violated;
}

bool TransformReport::certified() const {
    if (skipped) return false;
    return terminated && every_gain_ok && classification_ok && monotone_ok &&
           telescoping_ok;
}

TransformReport transform_to_cover(const Instance& inst, const CycleCover& cover,
                                   const SuccMap& start) {
    OverlapGraph g(inst);
    const int m = inst.size();
    if (start.size() != m)
        throw std::invalid_argument("start cover over a different node set");
    const SuccMap target = cover_successors(cover, m);
    const RelatedPairs rel = related_pairs(inst, cover);
    const Quad57 gamma = constants().gamma;

    TransformReport rep;
    rep.start_overlap = start.total_overlap(g);
    rep.end_overlap = target.total_overlap(g);
    rep.every_gain_ok = true;
    rep.classification_ok = true;
    rep.monotone_ok = true;

    std::vector<char> completed(cover.cycles.size(), 0);
    for (int idx : completed_small_cycles(cover, start)) {
        completed[idx] = 1;
        rep.start_small_empty = false;
    }

    SuccMap cur = start;
    long long gain_sum = 0;
    int guard = 0;
    while (cur.succ != target.succ) {
        if (++guard > m + 1)
            throw std::logic_error("transformation did not terminate");

        struct Candidate {
            Swap swap;
            Quad57 charge;
            std::vector<int> news;
            bool reduce4 = false;
            bool plain = false;
            bool good = false;
        };
        bool have_best = false;
        Candidate best;
        Quad57 best_slack;
        TransformStep step;
        const int before_diff = cur.symmetric_difference(target);

        for (int u = 0; u < m; ++u) {
            const int v = target.succ[u];
            if (cur.succ[u] == v) continue;
            Candidate cand;
            cand.swap = make_swap(cur, g, u, v);
            const SuccMap next = apply_swap(cur, cand.swap);
            for (int idx : completed_small_cycles(cover, next))
                if (!completed[idx]) cand.news.push_back(idx);
            for (int idx : cand.news)
                cand.charge = cand.charge + merge_charge(cover, idx, rel);

            cand.reduce4 = target.contains(cand.swap.e_prime.tail,
                                           cand.swap.e_prime.head);
            const bool e_on_small =
                cover.cycles[cover.cycle_of[u]].cls == CycleClass::small;
            const bool ep_on_small =
                cover_edge_on_class(target, cover, cand.swap.e_prime.tail,
                                    cand.swap.e_prime.head, CycleClass::small);
            const int add = std::max(cand.swap.e.overlap, cand.swap.e_prime.overlap);
            const int drop = std::max(cand.swap.f.overlap, cand.swap.f_prime.overlap);
            cand.plain = !e_on_small && !ep_on_small && add >= drop;
            cand.good = good_edge(cur, g, cover, u, v);

            if (check_monge(cand.swap) == TrioVerdict::violated) ++step.trio_violations;
            if (check_small_monge(cand.swap, g, cover) == TrioVerdict::violated)
                ++step.trio_violations;
            if (check_heavy_patch(cand.swap, g, cover) == TrioVerdict::violated)
                ++step.trio_violations;

            if (cand.good && Quad57(cand.swap.gain) < cand.charge)
                step.good_candidates_ok = false;
            const Quad57 news_gap = class_threshold_gap(cover, cand.news, gamma);
            if (cand.charge > news_gap) step.charge_upper_ok = false;

            step.had_reduce_by_four = step.had_reduce_by_four || cand.reduce4;
            step.had_plain_exchange = step.had_plain_exchange || cand.plain;
            step.had_good_edge = step.had_good_edge || cand.good;

            const Quad57 slack = Quad57(cand.swap.gain) - cand.charge;
            if (!have_best || slack > best_slack ||
                (slack == best_slack && edge_key_less(cand.swap.e, best.swap.e))) {
                have_best = true;
                best = std::move(cand);
                best_slack = slack;
            }
        }
        if (!have_best)
            throw std::logic_error("covers differ but no forcing edge exists");

        cur = apply_swap(cur, best.swap);
        gain_sum += best.swap.gain;

        step.swap = best.swap;
        step.charge = best.charge;
        step.gain_ok = Quad57(best.swap.gain) >= best.charge;
        step.symdiff_drop = before_diff - cur.symmetric_difference(target);
        step.new_small_cycles = best.news;
        if (step.symdiff_drop != 2 && step.symdiff_drop != 4)
            throw std::logic_error("swap changed the symmetric difference oddly");

        rep.every_gain_ok = rep.every_gain_ok && step.gain_ok;
        rep.classification_ok =
            rep.classification_ok && (step.had_reduce_by_four ||
                                      step.had_plain_exchange || step.had_good_edge);

        std::vector<char> now(cover.cycles.size(), 0);
        for (int idx : completed_small_cycles(cover, cur)) now[idx] = 1;
        for (size_t idx = 0; idx < completed.size(); ++idx)
            if (completed[idx] && !now[idx]) rep.monotone_ok = false;
        completed.swap(now);

        rep.steps.push_back(std::move(step));
    }
    rep.terminated = true;
    rep.telescoping_ok = (gain_sum == rep.end_overlap - rep.start_overlap);
    return rep;
}

TransformReport transform_c0_to_c(const Instance& inst,
                                  const OracleLimits& limits) {
    CycleCover cover = min_cycle_cover_greedy(inst);
    if (inst.size() == 1 && cover.cycles[0].cls == CycleClass::small) {
        TransformReport rep;
        rep.skipped = true;
        rep.note =
            "single word forming a Small self-loop: the only Hamiltonian "
            "cycle is the cover itself and the cycle relaxation is vacuous";
        return rep;
    }
    PathSolution tour = exact_max_ham_cycle(inst, limits);
    return transform_to_cover(inst, cover, cycle_successors(tour.order));
}

}  // namespace ssp
