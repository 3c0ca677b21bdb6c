// SPDX-License-Identifier: Apache-2.0
#include "ssp/word.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ssp {

namespace {

std::vector<int> border_table(const Word& p) {
  std::vector<int> pi(p.size(), 0);
  for (size_t i = 1; i < p.size(); ++i) {
    int j = pi[i - 1];
    while (j > 0 && p[i] != p[j]) j = pi[j - 1];
    if (p[i] == p[j]) ++j;
    pi[i] = j;
  }
  return pi;
}

void require_nonempty(const Word& w) {
  if (w.empty()) throw std::invalid_argument("empty word");
}

}  // namespace

int overlap(const Word& s, const Word& t) {
  require_nonempty(s);
  require_nonempty(t);
  const std::vector<int> pi = border_table(t);
  const int tn = static_cast<int>(t.size());
  int j = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    while (j > 0 && s[i] != t[j]) j = pi[j - 1];
    if (s[i] == t[j]) ++j;
    if (j == tn) {
      if (i + 1 == s.size()) return tn;
      j = pi[j - 1];  // t occurs strictly inside s; keep scanning
    }
  }
  return j;
}

int self_overlap(const Word& s) {
  require_nonempty(s);
  return border_table(s).back();
}

int distance(const Word& s, const Word& t) {
  return static_cast<int>(s.size()) - overlap(s, t);
}

int self_distance(const Word& s) {
  return static_cast<int>(s.size()) - self_overlap(s);
}

Word merge_prefix(const Word& s, const Word& t) {
  return s.substr(0, s.size() - overlap(s, t));
}

int period(const Word& s) { return self_distance(s); }

Word period_word(const Word& s) { return s.substr(0, period(s)); }

bool has_periodicity(const Word& w, int a) {
  require_nonempty(w);
  if (a < 1 || a > static_cast<int>(w.size()))
    throw std::invalid_argument("periodicity out of range");
  for (size_t i = 0; i + a < w.size(); ++i)
    if (w[i] != w[i + a]) return false;
  return true;
}

std::vector<int> all_periodicities(const Word& w) {
  require_nonempty(w);
  std::vector<int> out;
  for (int a = 1; a <= static_cast<int>(w.size()); ++a)
    if (has_periodicity(w, a)) out.push_back(a);
  return out;
}

bool is_rotation(const Word& x, const Word& y) {
  if (x.size() != y.size()) return false;
  return (x + x).find(y) != Word::npos;
}

bool equivalent(const Word& s, const Word& t) {
  return is_rotation(period_word(s), period_word(t));
}

Word power_prefix(const Word& base, int length) {
  require_nonempty(base);
  if (length < 0) throw std::invalid_argument("negative length");
  Word out;
  out.reserve(length);
  while (static_cast<int>(out.size()) < length)
    out.append(base, 0, std::min(base.size(),
                                 length - out.size()));
  return out;
}

int longest_common_substring(const Word& x, const Word& y) {
  if (x.empty() || y.empty()) return 0;
  std::vector<int> prev(y.size() + 1, 0), cur(y.size() + 1, 0);
  int best = 0;
  for (size_t i = 1; i <= x.size(); ++i) {
    for (size_t j = 1; j <= y.size(); ++j) {
      cur[j] = x[i - 1] == y[j - 1] ? prev[j - 1] + 1 : 0;
      best = std::max(best, cur[j]);
    }
    std::swap(prev, cur);
  }
  return best;
}

namespace naive {

int overlap(const Word& s, const Word& t) {
  for (int i = static_cast<int>(std::min(s.size(), t.size())); i > 0; --i)
    if (s.compare(s.size() - i, i, t, 0, i) == 0) return i;
  return 0;
}

int self_overlap(const Word& s) {
  for (int i = static_cast<int>(s.size()) - 1; i > 0; --i)
    if (s.compare(s.size() - i, i, s, 0, i) == 0) return i;
  return 0;
}

}  // namespace naive

}  // namespace ssp
