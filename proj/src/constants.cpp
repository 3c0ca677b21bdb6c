// SPDX-License-Identifier: Apache-2.0
#include "ssp/constants.hpp"

namespace ssp {

const Constants& constants() {
  static const Constants c{
      Quad57{Rational(1, 6), Rational(1, 6)},
      Quad57{Rational(31, 14), Rational(3, 14)},
  };
  return c;
}

Quad57 greedy_ratio_ceiling() { return {Rational(13, 6), Rational(1, 6)}; }

Quad57 mgreedy_ratio_ceiling() { return Quad57(2) + constants().alpha; }

Quad57 tgreedy_ratio_ceiling() { return {Rational(25, 12), Rational(1, 12)}; }

}  // namespace ssp
