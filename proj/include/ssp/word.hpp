// SPDX-License-Identifier: Apache-2.0
#pragma once
//
// Primitive word operations: suffix-prefix overlap, merge distance, periods
// and the rotation equivalence of periodic words.

#include <string>
#include <vector>

namespace ssp {

using Word = std::string;

// Longest suffix of s that is a prefix of t (up to min(|s|,|t|), the full
// word included).  Linear time via the border table of t.
int overlap(const Word& s, const Word& t);

// Longest proper suffix of s that is also a prefix of s (< |s|).
int self_overlap(const Word& s);

// Symbols of s that survive when t is merged onto it: |s| - overlap(s,t).
int distance(const Word& s, const Word& t);
int self_distance(const Word& s);

// s with its overlap suffix removed, so merge(s,t) = merge_prefix(s,t) + t.
Word merge_prefix(const Word& s, const Word& t);

// Smallest p >= 1 such that s is a prefix of x^inf for some |x| = p.
int period(const Word& s);

// The length-period(s) prefix of s.
Word period_word(const Word& s);

// Whether w is a prefix of x^inf for some word x with |x| = a.
// Throws std::invalid_argument unless 1 <= a <= |w|.
bool has_periodicity(const Word& w, int a);

// Every a in [1, |w|] with has_periodicity(w, a); always contains |w|.
std::vector<int> all_periodicities(const Word& w);

bool is_rotation(const Word& x, const Word& y);

// Rotation equivalence of the period words of s and t.
bool equivalent(const Word& s, const Word& t);

// Prefix of base^inf of the given length.
Word power_prefix(const Word& base, int length);

// Length of the longest common substring; quadratic, for cross-checks on
// materialized power prefixes.
int longest_common_substring(const Word& x, const Word& y);

namespace naive {
// Quadratic reference implementations kept as differential oracles.
int overlap(const Word& s, const Word& t);
int self_overlap(const Word& s);
}  // namespace naive

}  // namespace ssp
