// SPDX-License-Identifier: Apache-2.0
#include "ssp/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>

#include "ssp/algorithms.hpp"
#include "ssp/constants.hpp"
#include "ssp/errors.hpp"
#include "ssp/transform.hpp"
#include "ssp/word.hpp"

namespace ssp {
namespace {

std::optional<long long> opt_length(const Instance& inst,
                                    const OracleLimits& limits,
                                    std::string& note) {
    try {
        return exact_superstring(inst, limits).length;
    } catch (const TooLargeError& e) {
        note = e.what();
    } catch (const BudgetError& e) {
        note = e.what();
    }
    return std::nullopt;
}

// Directed edges of the chosen cycles (all cycles when `chosen` is empty),
// mapped through `to_original` when given, sorted for set comparison.
std::vector<std::pair<int, int>> cycle_edges(
    const CycleCover& cover, const std::vector<int>& chosen,
    const std::vector<int>* to_original) {
    std::vector<int> ids = chosen;
    if (ids.empty()) {
        ids.resize(cover.cycles.size());
        std::iota(ids.begin(), ids.end(), 0);
    }
    std::vector<std::pair<int, int>> out;
    for (int idx : ids) {
        const Cycle& c = cover.cycles[idx];
        const int r = static_cast<int>(c.nodes.size());
        for (int i = 0; i < r; ++i) {
            int tail = c.nodes[i];
            int head = c.nodes[(i + 1) % r];
            if (to_original) {
                tail = (*to_original)[tail];
                head = (*to_original)[head];
            }
            out.emplace_back(tail, head);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

CheckResult quad_le(std::string name, const Quad57& lhs, const Quad57& rhs) {
    return make_check(std::move(name), lhs <= rhs);
}

// Positions strictly between i and j walking successor pointers around a
// cycle given as a node list with edges nodes[t] -> nodes[t+1 mod r].
std::vector<int> between_on_cycle(const std::vector<int>& nodes, int from_pos,
                                  int to_pos) {
    const int r = static_cast<int>(nodes.size());
    std::vector<int> out;
    for (int p = (from_pos + 1) % r; p != to_pos; p = (p + 1) % r)
        out.push_back(nodes[p]);
    return out;
}

}  // namespace

RestrictedSetup make_restricted_setup(const Instance& inst,
                                      const CycleCover& cover) {
    RestrictedSetup s;
    std::vector<int> chosen;
    std::vector<int> nodes;
    for (size_t idx = 0; idx < cover.cycles.size(); ++idx) {
        const Cycle& c = cover.cycles[idx];
        if (c.cls == CycleClass::extra_large) continue;
        chosen.push_back(static_cast<int>(idx));
        nodes.insert(nodes.end(), c.nodes.begin(), c.nodes.end());
    }
    if (nodes.empty()) return s;
    std::sort(nodes.begin(), nodes.end());
    s.has_bar = true;
    s.bar = restrict_instance(inst, nodes);
    s.cover_bar = min_cycle_cover_greedy(s.bar.instance);
    s.reproduced = cycle_edges(s.cover_bar, {}, &s.bar.original_ids) ==
                   cycle_edges(cover, chosen, nullptr);
    s.prime = modified_instance(s.bar.instance, s.cover_bar);
    s.cover_prime = min_cycle_cover_greedy(s.prime.instance);
    return s;
}

CheckResult check_constants() {
    const Constants& k = constants();
    const Quad57 alpha = k.alpha;
    const Quad57 gamma = k.gamma;
    const Quad57 expect_alpha{Rational(1, 6), Rational(1, 6)};
    const Quad57 expect_gamma{Rational(31, 14), Rational(3, 14)};
    const Quad57 two(2), three(3), one(1);
    bool ok = alpha == expect_alpha && gamma == expect_gamma;
    // the two tight constraints, exactly
    ok = ok && (three - two * alpha) * gamma == two - alpha;
    ok = ok && three * (alpha - two / (gamma - two)) == one;
    // the two strict constraints
    ok = ok && Quad57{Rational(5, 2), Rational(0)} +
                       one / (two * (alpha - one)) <
                   gamma;
    ok = ok && gamma < (gamma - one) * alpha;
    // the classification-combination identity
    ok = ok && (two * alpha - two) + (three - two * alpha) * gamma == alpha;
    // ratio ceilings agree with their closed forms
    ok = ok && greedy_ratio_ceiling() == two + alpha;
    ok = ok && mgreedy_ratio_ceiling() == two + alpha;
    ok = ok && tgreedy_ratio_ceiling() ==
                   Quad57{Rational(25, 12), Rational(1, 12)};
    return make_check("constants_identities", ok);
}

CheckList check_main_bound(const Instance& inst, const OracleLimits& limits) {
    CheckList out;
    const CycleCover cover = min_cycle_cover_greedy(inst);
    const CycleCoverSolution exact_cc = exact_min_cycle_cover(inst);

    CheckResult opt = make_check("cover_is_optimal",
                                 cover.total_length == exact_cc.length);
    opt.values["cover_length"] = cover.total_length;
    opt.values["exact_cover_length"] = exact_cc.length;
    out.push_back(std::move(opt));

    std::string note;
    if (auto n = opt_length(inst, limits, note)) {
        CheckResult main = quad_le(
            "main_bound", Quad57(cover.total_closing_overlap),
            Quad57(*n) + constants().alpha * Quad57(cover.total_length));
        main.values["o"] = cover.total_closing_overlap;
        main.values["w"] = cover.total_length;
        main.values["n"] = *n;
        main.values["m"] = inst.size();
        out.push_back(std::move(main));
    } else {
        out.push_back(skip_check("main_bound", note));
    }
    return out;
}

CheckList check_culprit_bounds(const Instance& inst,
                               const OracleLimits& limits) {
    CheckList out;
    const GreedyRun run = greedy_superstring(inst);
    const CulpritStats stats = culprit_stats(run.trace);
    const auto& backs = run.trace.back_edges;

    bool laminar = true;
    for (size_t i = 0; i < backs.size() && laminar; ++i) {
        for (size_t j = i + 1; j < backs.size() && laminar; ++j) {
            const auto& a = backs[i];
            const auto& b = backs[j];
            const bool nested = (a.first <= b.first && b.last <= a.last) ||
                                (b.first <= a.first && a.last <= b.last);
            const bool disjoint = a.last < b.first || b.last < a.first;
            laminar = nested || disjoint;
        }
    }
    CheckResult lam = make_check("back_edge_intervals_laminar", laminar);
    lam.values["back_edges"] = static_cast<long long>(backs.size());
    out.push_back(std::move(lam));

    long long culprit_node_total = 0;
    for (const auto& cyc : stats.cycles)
        culprit_node_total += static_cast<long long>(cyc.size());
    CheckResult disj = make_check(
        "culprit_cycles_disjoint",
        culprit_node_total == static_cast<long long>(stats.culprit_nodes.size()));
    disj.values["culprits"] = static_cast<long long>(stats.cycles.size());
    disj.values["culprit_nodes"] =
        static_cast<long long>(stats.culprit_nodes.size());
    out.push_back(std::move(disj));

    if (stats.cycles.empty()) {
        out.push_back(skip_check("culprit_cycles_reproduced", "no culprit cycles"));
    } else {
        const SubInstance sub = restrict_instance(inst, stats.culprit_nodes);
        const CycleCover subcover = min_cycle_cover_greedy(sub.instance);
        std::vector<std::pair<int, int>> expected;
        for (const auto& cyc : stats.cycles) {
            const int r = static_cast<int>(cyc.size());
            for (int i = 0; i < r; ++i)
                expected.emplace_back(cyc[i], cyc[(i + 1) % r]);
        }
        std::sort(expected.begin(), expected.end());
        CheckResult repr = make_check(
            "culprit_cycles_reproduced",
            cycle_edges(subcover, {}, &sub.original_ids) == expected);
        repr.values["culprits"] = static_cast<long long>(stats.cycles.size());
        out.push_back(std::move(repr));
    }

    std::string note;
    const auto n = opt_length(inst, limits, note);
    if (!n) {
        out.push_back(skip_check("culprit_length_bound", note));
        out.push_back(skip_check("culprit_overlap_bound", note));
        out.push_back(skip_check("culprit_refined_bound", note));
        return out;
    }
    const long long g_len = run.result.length;
    const long long oc = stats.overlap_sum;
    const long long wc = stats.length_sum;

    CheckResult len = make_check("culprit_length_bound",
                                 g_len <= 2 * *n + oc - wc);
    len.values["greedy_length"] = g_len;
    len.values["n"] = *n;
    len.values["culprit_overlap"] = oc;
    len.values["culprit_length"] = wc;
    out.push_back(std::move(len));

    CheckResult ovb = make_check("culprit_overlap_bound", oc <= *n + 2 * wc);
    ovb.values["culprit_overlap"] = oc;
    ovb.values["n"] = *n;
    ovb.values["culprit_length"] = wc;
    out.push_back(std::move(ovb));

    long long nc = 0;
    bool have_nc = true;
    std::string nc_note;
    if (!stats.culprit_nodes.empty()) {
        const SubInstance sub = restrict_instance(inst, stats.culprit_nodes);
        if (auto v = opt_length(sub.instance, limits, nc_note)) {
            nc = *v;
        } else {
            have_nc = false;
        }
    }
    if (!have_nc) {
        out.push_back(skip_check("culprit_refined_bound", nc_note));
    } else {
        CheckResult ref = quad_le(
            "culprit_refined_bound", Quad57(g_len),
            Quad57(2 * *n + nc) +
                (constants().alpha - Quad57(1)) * Quad57(wc));
        ref.values["greedy_length"] = g_len;
        ref.values["n"] = *n;
        ref.values["culprit_opt"] = nc;
        ref.values["culprit_length"] = wc;
        out.push_back(std::move(ref));
    }
    return out;
}

CheckList check_first_bound(const Instance& inst, const OracleLimits& limits) {
    CheckList out;
    const CycleCover cover = min_cycle_cover_greedy(inst);

    bool xl_ok = true;
    long long xl_cycles = 0;
    for (const Cycle& c : cover.cycles) {
        if (c.cls != CycleClass::extra_large) continue;
        ++xl_cycles;
        xl_ok = xl_ok && Quad57(c.closing_overlap) <=
                             constants().alpha * Quad57(c.length);
    }
    CheckResult xl = make_check("extra_large_closing_bound", xl_ok);
    xl.values["xl_cycles"] = xl_cycles;
    xl.values["xl_o"] = cover.class_closing_sum(CycleClass::extra_large);
    xl.values["xl_w"] = cover.class_length_sum(CycleClass::extra_large);
    out.push_back(std::move(xl));

    const RestrictedSetup setup = make_restricted_setup(inst, cover);
    if (!setup.has_bar) {
        out.push_back(skip_check("restricted_cover_reproduced",
                                 "no Small or Large cycles"));
        out.push_back(skip_check("first_bound", "no Small or Large cycles"));
        return out;
    }
    CheckResult repr =
        make_check("restricted_cover_reproduced", setup.reproduced);
    repr.values["m_bar"] = setup.bar.instance.size();
    repr.values["cycles_bar"] =
        static_cast<long long>(setup.cover_bar.cycles.size());
    out.push_back(std::move(repr));

    std::string note;
    const auto n_bar = opt_length(setup.bar.instance, limits, note);
    if (!n_bar) {
        out.push_back(skip_check("first_bound", note));
        return out;
    }
    const long long o_bar = setup.cover_bar.total_closing_overlap;
    const long long small_w = setup.cover_bar.class_length_sum(CycleClass::small);
    const long long large_w = setup.cover_bar.class_length_sum(CycleClass::large);
    CheckResult fb = make_check(
        "first_bound", 2 * o_bar <= 2 * *n_bar + 2 * small_w + 3 * large_w);
    fb.values["o_bar"] = o_bar;
    fb.values["n_bar"] = *n_bar;
    fb.values["small_w"] = small_w;
    fb.values["large_w"] = large_w;
    fb.values["m_bar"] = setup.bar.instance.size();
    out.push_back(std::move(fb));
    return out;
}

CheckList check_second_bound(const Instance& inst, const OracleLimits& limits) {
    CheckList out;
    const CycleCover cover = min_cycle_cover_greedy(inst);
    const RestrictedSetup setup = make_restricted_setup(inst, cover);
    const char* no_bar = "no Small or Large cycles";
    if (!setup.has_bar) {
        for (const char* name :
             {"modified_small_cycles_single_node", "modified_cover_length_preserved",
              "modified_cycle_count_preserved", "modified_small_length_preserved",
              "modified_opt_increase", "ham_cycle_lower_bound",
              "second_bound_modified", "second_bound"})
            out.push_back(skip_check(name, no_bar));
        return out;
    }
    const Instance& sp = setup.prime.instance;
    const CycleCover& cp = setup.cover_prime;
    const CycleCover& cb = setup.cover_bar;

    bool singles = true;
    for (const Cycle& c : cp.cycles) {
        if (c.cls != CycleClass::small) continue;
        singles = singles && c.nodes.size() == 1 &&
                  setup.prime.origins[c.nodes[0]].replaced;
    }
    CheckResult sing = make_check("modified_small_cycles_single_node", singles);
    sing.values["m_prime"] = sp.size();
    sing.values["small_cycles_prime"] = static_cast<long long>(
        std::count_if(cp.cycles.begin(), cp.cycles.end(), [](const Cycle& c) {
            return c.cls == CycleClass::small;
        }));
    out.push_back(std::move(sing));

    const long long small_bar = cb.class_length_sum(CycleClass::small);
    const long long large_bar = cb.class_length_sum(CycleClass::large);
    const long long small_p = cp.class_length_sum(CycleClass::small);
    const long long large_p = cp.class_length_sum(CycleClass::large);

    if (setup.prime.swallowed > 0) {
        const char* swallowed_note = "modification swallowed extra words";
        out.push_back(skip_check("modified_cover_length_preserved", swallowed_note));
        out.push_back(skip_check("modified_cycle_count_preserved", swallowed_note));
        out.push_back(skip_check("modified_small_length_preserved", swallowed_note));
    } else {
        CheckResult wl = make_check("modified_cover_length_preserved",
                                    cp.total_length == cb.total_length);
        wl.values["cover_length_bar"] = cb.total_length;
        wl.values["cover_length_prime"] = cp.total_length;
        out.push_back(std::move(wl));
        CheckResult cc = make_check(
            "modified_cycle_count_preserved",
            cp.cycles.size() == cb.cycles.size());
        cc.values["cycles_bar"] = static_cast<long long>(cb.cycles.size());
        cc.values["cycles_prime"] = static_cast<long long>(cp.cycles.size());
        out.push_back(std::move(cc));
        CheckResult sl = make_check("modified_small_length_preserved",
                                    small_p == small_bar);
        sl.values["small_w_bar"] = small_bar;
        sl.values["small_w_prime"] = small_p;
        out.push_back(std::move(sl));
    }

    std::string bar_note;
    const auto n_bar = opt_length(setup.bar.instance, limits, bar_note);
    std::string prime_note;
    const auto n_prime = opt_length(sp, limits, prime_note);

    if (n_bar && n_prime) {
        CheckResult inc = make_check("modified_opt_increase",
                                     *n_prime <= *n_bar + small_bar);
        inc.values["n_prime"] = *n_prime;
        inc.values["n_bar"] = *n_bar;
        inc.values["small_w_bar"] = small_bar;
        out.push_back(std::move(inc));
    } else {
        out.push_back(skip_check("modified_opt_increase",
                                 n_bar ? prime_note : bar_note));
    }

    std::optional<long long> c0;
    std::string c0_note;
    try {
        c0 = sp.total_length() - exact_max_ham_cycle(sp, limits).profit;
    } catch (const TooLargeError& e) {
        c0_note = e.what();
    } catch (const BudgetError& e) {
        c0_note = e.what();
    }

    if (n_bar && c0) {
        CheckResult ham = make_check("ham_cycle_lower_bound",
                                     *n_bar >= *c0 - small_p);
        ham.values["n_bar"] = *n_bar;
        ham.values["c0_length"] = *c0;
        ham.values["small_w_prime"] = small_p;
        out.push_back(std::move(ham));
    } else {
        out.push_back(
            skip_check("ham_cycle_lower_bound", n_bar ? c0_note : bar_note));
    }

    const bool vacuous =
        sp.size() == 1 && cp.cycles.size() == 1 &&
        cp.cycles[0].cls == CycleClass::small;
    if (vacuous) {
        out.push_back(skip_check(
            "second_bound_modified",
            "single Small word: the greedy merge is already optimal and the "
            "Hamiltonian-cycle relaxation is vacuous"));
    } else if (!c0) {
        out.push_back(skip_check("second_bound_modified", c0_note));
    } else {
        const Quad57 gamma = constants().gamma;
        CheckResult eq = quad_le(
            "second_bound_modified", Quad57(cp.total_closing_overlap),
            Quad57(*c0) + (gamma - Quad57(1)) * Quad57(small_p) +
                Quad57(large_p));
        eq.values["o_prime"] = cp.total_closing_overlap;
        eq.values["c0_length"] = *c0;
        eq.values["small_w_prime"] = small_p;
        eq.values["large_w_prime"] = large_p;
        out.push_back(std::move(eq));
    }

    if (!n_bar) {
        out.push_back(skip_check("second_bound", bar_note));
    } else {
        CheckResult sb = quad_le(
            "second_bound", Quad57(cb.total_closing_overlap),
            Quad57(*n_bar) + constants().gamma * Quad57(small_bar) +
                Quad57(large_bar));
        sb.values["o_bar"] = cb.total_closing_overlap;
        sb.values["n_bar"] = *n_bar;
        sb.values["small_w_bar"] = small_bar;
        sb.values["large_w_bar"] = large_bar;
        out.push_back(std::move(sb));
    }
    return out;
}

CheckList check_transform(const Instance& inst, const OracleLimits& limits) {
    CheckList out;
    const char* row_names[] = {
        "transform_terminates",      "transform_gain_covers_charge",
        "transform_classification",  "transform_small_set_monotone",
        "transform_telescoping",     "transform_start_small_empty",
        "exchange_lemmas",           "good_edge_gain",
        "charge_upper_bound",        "related_count_le_two"};
    auto skip_all = [&](const std::string& note) {
        for (const char* name : row_names) out.push_back(skip_check(name, note));
    };

    const CycleCover cover = min_cycle_cover_greedy(inst);
    const RestrictedSetup setup = make_restricted_setup(inst, cover);
    if (!setup.has_bar) {
        skip_all("no Small or Large cycles");
        return out;
    }
    const Instance& sp = setup.prime.instance;

    RelatedPairs rel;
    try {
        rel = related_pairs(sp, setup.cover_prime);
    } catch (const std::invalid_argument& e) {
        skip_all(e.what());
        return out;
    }

    TransformReport rep;
    try {
        rep = transform_c0_to_c(sp, limits);
    } catch (const TooLargeError& e) {
        skip_all(e.what());
        return out;
    } catch (const BudgetError& e) {
        skip_all(e.what());
        return out;
    }
    if (rep.skipped) {
        skip_all(rep.note);
        return out;
    }

    long long violations = 0;
    bool good_ok = true;
    bool charge_ok = true;
    for (const TransformStep& s : rep.steps) {
        violations += s.trio_violations;
        good_ok = good_ok && s.good_candidates_ok;
        charge_ok = charge_ok && s.charge_upper_ok;
    }

    auto add = [&](const char* name, bool ok) {
        CheckResult r = make_check(name, ok);
        r.values["steps"] = static_cast<long long>(rep.steps.size());
        r.values["start_overlap"] = rep.start_overlap;
        r.values["end_overlap"] = rep.end_overlap;
        out.push_back(std::move(r));
    };
    add("transform_terminates", rep.terminated);
    add("transform_gain_covers_charge", rep.every_gain_ok);
    add("transform_classification", rep.classification_ok);
    add("transform_small_set_monotone", rep.monotone_ok);
    add("transform_telescoping", rep.telescoping_ok);
    add("transform_start_small_empty", rep.start_small_empty);

    CheckResult trio = make_check("exchange_lemmas", violations == 0);
    trio.values["violations"] = violations;
    trio.values["steps"] = static_cast<long long>(rep.steps.size());
    out.push_back(std::move(trio));

    out.push_back(make_check("good_edge_gain", good_ok));
    out.push_back(make_check("charge_upper_bound", charge_ok));

    CheckResult two = make_check("related_count_le_two",
                                 rel.max_small_per_large <= 2);
    two.values["max_small_per_large"] = rel.max_small_per_large;
    two.values["related_pairs"] = static_cast<long long>(rel.pairs.size());
    out.push_back(std::move(two));
    return out;
}

CheckList check_ratios(const Instance& inst, const OracleLimits& limits) {
    CheckList out;
    const GreedyRun grun = greedy_superstring(inst);
    const SuperstringResult mg = mgreedy_superstring(inst);
    const SuperstringResult tg = tgreedy_superstring(inst);
    const PipelineResult pg =
        pipeline_superstring(inst, PathSolverKind::greedy_half, limits);

    CheckResult tle = make_check("tgreedy_le_mgreedy", tg.length <= mg.length);
    tle.values["tgreedy_length"] = tg.length;
    tle.values["mgreedy_length"] = mg.length;
    out.push_back(std::move(tle));

    CheckResult match = make_check("pipeline_greedy_matches_tgreedy",
                                   pg.result.text == tg.text);
    match.values["pipeline_greedy_length"] = pg.result.length;
    match.values["tgreedy_length"] = tg.length;
    out.push_back(std::move(match));

    CheckResult comp = make_check(
        "pipeline_compression_identity",
        pg.result.length <= pg.representative_total - pg.path_profit);
    comp.values["length"] = pg.result.length;
    comp.values["x"] = pg.representative_total;
    comp.values["path_profit"] = pg.path_profit;
    out.push_back(std::move(comp));

    std::string note;
    const auto n = opt_length(inst, limits, note);
    if (!n) {
        for (const char* name :
             {"greedy_ratio", "mgreedy_ratio", "tgreedy_ratio",
              "greedy_path_half_approx", "pipeline_two_approx",
              "pipeline_x_bound", "pipeline_exact_le_greedy"})
            out.push_back(skip_check(name, note));
        return out;
    }

    CheckResult gr = quad_le("greedy_ratio", Quad57(grun.result.length),
                             greedy_ratio_ceiling() * Quad57(*n));
    gr.values["greedy_length"] = grun.result.length;
    gr.values["n"] = *n;
    out.push_back(std::move(gr));

    CheckResult mr = quad_le("mgreedy_ratio", Quad57(mg.length),
                             mgreedy_ratio_ceiling() * Quad57(*n));
    mr.values["mgreedy_length"] = mg.length;
    mr.values["n"] = *n;
    out.push_back(std::move(mr));

    CheckResult tr = quad_le("tgreedy_ratio", Quad57(tg.length),
                             tgreedy_ratio_ceiling() * Quad57(*n));
    tr.values["tgreedy_length"] = tg.length;
    tr.values["n"] = *n;
    out.push_back(std::move(tr));

    std::string path_note;
    std::optional<long long> best_path;
    try {
        best_path = exact_max_ham_path(inst, limits).profit;
    } catch (const TooLargeError& e) {
        path_note = e.what();
    } catch (const BudgetError& e) {
        path_note = e.what();
    }
    if (best_path) {
        const long long greedy_profit = greedy_max_path(inst).profit;
        CheckResult half = make_check("greedy_path_half_approx",
                                      2 * greedy_profit >= *best_path);
        half.values["greedy_path_profit"] = greedy_profit;
        half.values["max_path_profit"] = *best_path;
        out.push_back(std::move(half));
    } else {
        out.push_back(skip_check("greedy_path_half_approx", path_note));
    }

    std::optional<PipelineResult> pe;
    std::string pe_note;
    try {
        pe = pipeline_superstring(inst, PathSolverKind::exact_dp, limits);
    } catch (const TooLargeError& e) {
        pe_note = e.what();
    } catch (const BudgetError& e) {
        pe_note = e.what();
    }
    if (!pe) {
        out.push_back(skip_check("pipeline_two_approx", pe_note));
        out.push_back(skip_check("pipeline_x_bound", pe_note));
        out.push_back(skip_check("pipeline_exact_le_greedy", pe_note));
        return out;
    }
    const long long x = pe->representative_total;
    const long long y = x - pe->result.length;

    CheckResult two = make_check("pipeline_two_approx",
                                 pe->result.length <= 2 * *n && y >= x - 2 * *n);
    two.values["x"] = x;
    two.values["y"] = y;
    two.values["length"] = pe->result.length;
    two.values["path_profit"] = pe->path_profit;
    two.values["reduced_total"] = pe->reduced_total;
    two.values["n"] = *n;
    out.push_back(std::move(two));

    CheckResult xb = quad_le("pipeline_x_bound", Quad57(x),
                             mgreedy_ratio_ceiling() * Quad57(*n));
    xb.values["x"] = x;
    xb.values["n"] = *n;
    out.push_back(std::move(xb));

    CheckResult dom = make_check("pipeline_exact_le_greedy",
                                 pe->result.length <= pg.result.length);
    dom.values["pipeline_exact_length"] = pe->result.length;
    dom.values["pipeline_greedy_length"] = pg.result.length;
    out.push_back(std::move(dom));
    return out;
}

int overlap_rotation_witness(const Instance& inst, const CycleCover& cover,
                             int cycle_idx) {
    const Cycle& c = cover.cycles[cycle_idx];
    const Word w_word = cycle_word(inst, c);
    const int w = static_cast<int>(w_word.size());
    // Smallest period g of the infinite power: the smallest divisor d of |w|
    // with the word equal to its length-d prefix repeated.
    int g = w;
    for (int d = 1; d < w; ++d) {
        if (w % d != 0) continue;
        if (power_prefix(w_word.substr(0, d), w) == w_word) {
            g = d;
            break;
        }
    }
    const Word root = w_word.substr(0, g);
    int maxlen = inst.max_word_length();
    const Word pow = power_prefix(w_word, g + maxlen + 1);

    auto all_hold = [&](int shift, int slack) {
        const Word rot = pow.substr(shift, maxlen + 1);
        for (int i = 0; i < inst.size(); ++i) {
            const Word& s = inst.word(i);
            if (is_rotation(period_word(s), root)) continue;  // equivalent
            if (2 * overlap(s, rot) >= 2 * period(s) + g + 2 * slack)
                return false;
        }
        return true;
    };
    for (int k = 1; k <= g; ++k)
        if (all_hold(k, 0)) return k;
    return 0;
}

CheckList check_lemma_suite(const Instance& inst, const OracleLimits& limits) {
    CheckList out;
    const int m = inst.size();
    const OverlapGraph g(inst);
    const CycleCover cover = min_cycle_cover_greedy(inst);

    {
        bool ok = true;
        for (int i = 0; i < m && ok; ++i) {
            const Word& s = inst.word(i);
            const int len = static_cast<int>(s.size());
            const std::vector<int> periods = all_periodicities(s);
            std::vector<char> has(len + 1, 0);
            for (int p : periods) has[p] = 1;
            const int base = period(s);
            for (size_t a = 0; a < periods.size() && ok; ++a) {
                if (2 * periods[a] <= len && periods[a] % base != 0) ok = false;
                for (size_t b = a; b < periods.size() && ok; ++b) {
                    if (periods[a] + periods[b] > len) continue;
                    ok = has[std::gcd(periods[a], periods[b])];
                }
            }
        }
        CheckResult r = make_check("periodicity_gcd", ok);
        r.values["words"] = m;
        out.push_back(std::move(r));
    }

    {
        bool ok = true;
        for (const Cycle& c : cover.cycles) {
            const Word cw = cycle_word(inst, c);
            for (size_t l = 0; l < c.nodes.size() && ok; ++l) {
                const Word& s = inst.word(c.nodes[l]);
                const Word rot = rotation_word(inst, c, static_cast<int>(l));
                ok = power_prefix(rot, static_cast<int>(s.size())) == s;
                if (!ok) break;
                const Word ext =
                    power_prefix(cw, c.length + static_cast<int>(s.size()));
                ok = ext.find(s) != Word::npos;
            }
            if (!ok) break;
        }
        out.push_back(make_check("cycle_strings_in_power", ok));
    }

    {
        bool ok = true;
        for (const Cycle& c : cover.cycles) {
            const SubInstance sub = restrict_instance(inst, c.nodes);
            ok = exact_min_cycle_cover(sub.instance).length <= c.length;
            if (!ok) break;
        }
        out.push_back(make_check("cycle_cover_from_power", ok));
    }

    {
        bool period_ok = true, inequiv_ok = true;
        for (const Cycle& c : cover.cycles) {
            const Word rep = representative(inst, c);
            period_ok = period_ok && period(rep) == c.length;
        }
        for (size_t a = 0; a < cover.cycles.size(); ++a)
            for (size_t b = a + 1; b < cover.cycles.size(); ++b)
                inequiv_ok = inequiv_ok &&
                             !equivalent(representative(inst, cover.cycles[a]),
                                         representative(inst, cover.cycles[b]));
        out.push_back(make_check("representative_period", period_ok));
        out.push_back(make_check("representatives_inequivalent", inequiv_ok));
    }

    {
        bool per_ok = true, closing_ok = true, small_len_ok = true,
             equiv_ok = true;
        for (const Cycle& c : cover.cycles) {
            const Word rep = representative(inst, c);
            for (int node : c.nodes) {
                const Word& s = inst.word(node);
                per_ok = per_ok && period(s) <= c.length;
                closing_ok = closing_ok &&
                             static_cast<int>(s.size()) > c.closing_overlap;
                if (c.cls == CycleClass::small) {
                    small_len_ok = small_len_ok &&
                                   static_cast<int>(s.size()) > 2 * c.length;
                    equiv_ok = equiv_ok && equivalent(s, rep) &&
                               period(s) == c.length;
                }
            }
        }
        out.push_back(make_check("period_le_cycle_length", per_ok));
        out.push_back(make_check("string_exceeds_closing_overlap", closing_ok));
        out.push_back(make_check("small_string_exceeds_twice_length", small_len_ok));
        out.push_back(make_check("small_cycle_equivalence", equiv_ok));
    }

    {
        bool ok = true;
        for (int i = 0; i < m && ok; ++i)
            for (int j = 0; j < m && ok; ++j) {
                if (i == j) continue;
                if (equivalent(inst.word(i), inst.word(j))) continue;
                ok = g.ov(i, j) < period(inst.word(i)) + period(inst.word(j));
            }
        out.push_back(make_check("inequivalent_overlap_bound", ok));
    }

    {
        bool ok = true;
        for (int i = 0; i < m && ok; ++i)
            for (int j = 0; j < m && ok; ++j) {
                if (i == j || cover.cycle_of[i] == cover.cycle_of[j]) continue;
                ok = g.ov(i, j) < cover.cycles[cover.cycle_of[i]].length +
                                      cover.cycles[cover.cycle_of[j]].length;
            }
        out.push_back(make_check("cross_cycle_overlap_bound", ok));
    }

    {
        bool ok = true;
        for (size_t a = 0; a < cover.cycles.size() && ok; ++a)
            for (size_t b = a + 1; b < cover.cycles.size() && ok; ++b) {
                const int wa = cover.cycles[a].length;
                const int wb = cover.cycles[b].length;
                const Word pa =
                    power_prefix(cycle_word(inst, cover.cycles[a]), 2 * wa + wb);
                const Word pb =
                    power_prefix(cycle_word(inst, cover.cycles[b]), wa + 2 * wb);
                ok = longest_common_substring(pa, pb) < wa + wb;
            }
        out.push_back(make_check("common_power_substring_bound", ok));
    }

    {
        bool ok = true;
        bool any = false;
        for (const Cycle& c : cover.cycles) {
            if (c.cls != CycleClass::small || c.nodes.size() < 3) continue;
            const int r = static_cast<int>(c.nodes.size());
            for (int i = 0; i < r && ok; ++i)
                for (int j = 0; j < r && ok; ++j) {
                    if (i == j || (i + 1) % r == j) continue;
                    any = true;
                    const int s = c.nodes[i];
                    const int t = c.nodes[j];
                    for (int mid : between_on_cycle(c.nodes, i, j)) {
                        if (g.dist(s, t) != g.dist(s, mid) + g.dist(mid, t)) {
                            ok = false;
                            break;
                        }
                    }
                }
        }
        if (!any) {
            out.push_back(skip_check("small_cycle_distance_additivity",
                                     "no Small cycle with three or more strings"));
        } else {
            out.push_back(make_check("small_cycle_distance_additivity", ok));
        }
    }

    {
        std::vector<std::pair<int, int>> banned;
        for (const Cycle& c : cover.cycles) {
            if (c.cls != CycleClass::small || c.nodes.size() < 2) continue;
            const int r = static_cast<int>(c.nodes.size());
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j) {
                    if (i == j || (i + 1) % r == j) continue;
                    banned.emplace_back(c.nodes[i], c.nodes[j]);
                }
        }
        if (banned.empty()) {
            out.push_back(skip_check("small_cycle_unmerged_optimal",
                                     "no Small cycle with non-adjacent strings"));
        } else {
            std::string note;
            if (const auto n = opt_length(inst, limits, note)) {
                try {
                    bool ok = true;
                    for (const auto& [s, t] : banned) {
                        if (exact_superstring_banned(inst, s, t, limits).length !=
                            *n) {
                            ok = false;
                            break;
                        }
                    }
                    CheckResult r = make_check("small_cycle_unmerged_optimal", ok);
                    r.values["banned_pairs"] =
                        static_cast<long long>(banned.size());
                    r.values["n"] = *n;
                    out.push_back(std::move(r));
                } catch (const BudgetError& e) {
                    out.push_back(
                        skip_check("small_cycle_unmerged_optimal", e.what()));
                }
            } else {
                out.push_back(skip_check("small_cycle_unmerged_optimal", note));
            }
        }
    }

    {
        bool witness_ok = true, general_ok = true;
        for (size_t idx = 0; idx < cover.cycles.size(); ++idx) {
            const Cycle& c = cover.cycles[idx];
            const int k =
                overlap_rotation_witness(inst, cover, static_cast<int>(idx));
            if (k == 0) {
                witness_ok = false;
                continue;
            }
            // generalized form: earlier shifts hold with matching slack
            const Word cw = cycle_word(inst, c);
            int gp = static_cast<int>(cw.size());
            for (int d = 1; d < gp; ++d) {
                if (static_cast<int>(cw.size()) % d != 0) continue;
                if (power_prefix(cw.substr(0, d), static_cast<int>(cw.size())) ==
                    cw) {
                    gp = d;
                    break;
                }
            }
            const Word root = cw.substr(0, gp);
            const int maxlen = inst.max_word_length();
            const Word pow = power_prefix(cw, gp + maxlen + 1);
            for (int back = 0; back < k && general_ok; ++back) {
                const Word rot = pow.substr(k - back, maxlen + 1);
                for (int i = 0; i < m; ++i) {
                    const Word& s = inst.word(i);
                    if (is_rotation(period_word(s), root)) continue;
                    if (2 * overlap(s, rot) >=
                        2 * period(s) + gp + 2 * back) {
                        general_ok = false;
                        break;
                    }
                }
            }
        }
        CheckResult wit = make_check("rotation_witness", witness_ok);
        wit.values["cycles"] = static_cast<long long>(cover.cycles.size());
        out.push_back(std::move(wit));
        if (!witness_ok) {
            out.push_back(
                skip_check("rotation_witness_general", "no witness shift found"));
        } else {
            out.push_back(make_check("rotation_witness_general", general_ok));
        }
    }

    {
        std::vector<Word> reps;
        for (const Cycle& c : cover.cycles)
            reps.push_back(representative(inst, c));
        const Instance::Reduction red = Instance::reduce(reps);
        std::string note_r, note_n;
        const auto n_r = opt_length(red.instance, limits, note_r);
        const auto n = opt_length(inst, limits, note_n);
        if (n_r && n) {
            CheckResult two = make_check("representative_opt_two_approx",
                                         *n_r <= 2 * *n);
            two.values["representative_opt"] = *n_r;
            two.values["n"] = *n;
            out.push_back(std::move(two));
        } else {
            out.push_back(skip_check("representative_opt_two_approx",
                                     n ? note_r : note_n));
        }
    }

    {
        bool ok = true;
        long long subsets = 0;
        std::vector<std::vector<int>> picks;
        for (size_t idx = 0; idx < cover.cycles.size(); ++idx)
            picks.push_back({static_cast<int>(idx)});
        std::vector<int> bar;
        for (size_t idx = 0; idx < cover.cycles.size(); ++idx)
            if (cover.cycles[idx].cls != CycleClass::extra_large)
                bar.push_back(static_cast<int>(idx));
        if (bar.size() > 1) picks.push_back(bar);
        for (const auto& chosen : picks) {
            ++subsets;
            const SubInstance sub = subset_instance(inst, cover, chosen);
            const CycleCover subcover = min_cycle_cover_greedy(sub.instance);
            ok = cycle_edges(subcover, {}, &sub.original_ids) ==
                 cycle_edges(cover, chosen, nullptr);
            if (!ok) break;
        }
        CheckResult r = make_check("subset_cover_reproduced", ok);
        r.values["subsets"] = subsets;
        out.push_back(std::move(r));
    }

    return out;
}

}  // namespace ssp
