// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "ssp/qnum.hpp"

namespace ssp {

// Tuning constants of the cycle classification and the verified bounds:
//   alpha = (1 + sqrt57)/6    ~ 1.4250  (closing-overlap threshold)
//   gamma = (31 + 3*sqrt57)/14 ~ 3.8321 (small-cycle accounting weight)
// The pair satisfies, exactly in Q[sqrt57]:
//   (3 - 2*alpha)*gamma == 2 - alpha
//   3*(alpha - 2/(gamma - 2)) == 1
// and strictly:
//   5/2 + 1/(2*(alpha - 1)) < gamma,   gamma < (gamma - 1)*alpha.
struct Constants {
  Quad57 alpha;
  Quad57 gamma;
};

const Constants& constants();

// Proven worst-case length ratios, as exact field values.
Quad57 greedy_ratio_ceiling();   // (13 + sqrt57)/6 == 2 + alpha
Quad57 mgreedy_ratio_ceiling();  // 2 + alpha
Quad57 tgreedy_ratio_ceiling();  // (25 + sqrt57)/12

}  // namespace ssp
