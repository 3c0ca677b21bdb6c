// SPDX-License-Identifier: Apache-2.0
#pragma once
//
// The verification lab: every length bound, structural lemma and accounting
// identity this library claims, phrased as executable checks over one
// instance.  Verdicts on inequalities involving the tuning constants are
// decided exactly in Q[sqrt57]; statistics are recorded as integers so a
// stored report can be re-derived without re-running the solvers.

#include <vector>

#include "ssp/check.hpp"
#include "ssp/cycle_cover.hpp"
#include "ssp/instance.hpp"
#include "ssp/oracles.hpp"

namespace ssp {

// Closed-form identities tying alpha and gamma together; failure would mean
// the compiled constants are wrong.
CheckResult check_constants();

// Cover optimality of the greedy cover and the headline inequality
// o <= n + alpha*w.
CheckList check_main_bound(const Instance&, const OracleLimits&);

// Laminar back-edge intervals, culprit cycle reproduction, and the culprit
// refinements of the greedy length bound.
CheckList check_culprit_bounds(const Instance&, const OracleLimits&);

// The Small+Large restriction S-bar and its closing-overlap bound
// 2*o <= 2*n + 2*(Small length) + 3*(Large length).
CheckList check_first_bound(const Instance&, const OracleLimits&);

// The modification S' (Small cycles collapsed to single words), its
// conservation laws, the optimum-increase and Hamilton-cycle lower bounds,
// and the refined closing-overlap bound through gamma.
CheckList check_second_bound(const Instance&, const OracleLimits&);

// The certified Hamiltonian-cycle-to-cover transformation on S', plus the
// exchange lemmas and the related-cycle counting it leans on.
CheckList check_transform(const Instance&, const OracleLimits&);

// Worst-case ratio ceilings of every algorithm against the exact optimum,
// and the representative pipeline's accounting identities.
CheckList check_ratios(const Instance&, const OracleLimits&);

// Periodicity, equivalence, overlap and representative lemmas, the rotation
// witness, and cover reproduction on restrictions.
CheckList check_lemma_suite(const Instance&, const OracleLimits&);

// The Small+Large restriction and its modification, shared by the first and
// second bound suites.
struct RestrictedSetup {
    bool has_bar = false;      // false: no Small or Large cycles exist
    SubInstance bar;           // restriction of the instance to those cycles
    CycleCover cover_bar;      // greedy cover of the restriction
    bool reproduced = false;   // cover_bar matches the chosen cycles exactly
    ModifiedInstance prime;    // modification of the restriction
    CycleCover cover_prime;    // greedy cover of the modification
};

RestrictedSetup make_restricted_setup(const Instance& inst,
                                      const CycleCover& cover);

// Smallest shift k in [1, g] (g = smallest period of the cycle word's
// infinite power) such that every instance word inequivalent to that power
// satisfies 2*ov(word, shifted power) < 2*period(word) + g; 0 if none works.
int overlap_rotation_witness(const Instance& inst, const CycleCover& cover,
                             int cycle_idx);

}  // namespace ssp
