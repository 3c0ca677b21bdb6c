// SPDX-License-Identifier: Apache-2.0
#include "ssp/instance.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace ssp {

namespace {

void validate_ids(const std::vector<int>& ids, int m) {
  if (ids.empty()) throw std::invalid_argument("empty id list");
  std::vector<char> seen(m, 0);
  for (int id : ids) {
    if (id < 0 || id >= m) throw std::invalid_argument("node id out of range");
    if (seen[id]) throw std::invalid_argument("repeated node id");
    seen[id] = 1;
  }
}

}  // namespace

Instance::Reduction Instance::reduce(const std::vector<Word>& words) {
  if (words.empty()) throw std::invalid_argument("empty word list");
  const int n = static_cast<int>(words.size());
  std::vector<char> keep(n, 1);
  for (int i = 0; i < n; ++i) {
    if (words[i].empty()) throw std::invalid_argument("empty word");
    for (int j = 0; j < n && keep[i]; ++j) {
      if (j == i) continue;
      if (words[j].size() > words[i].size()) {
        if (words[j].find(words[i]) != Word::npos) keep[i] = 0;
      } else if (words[j] == words[i] && j < i) {
        keep[i] = 0;
      }
    }
  }
  Reduction out;
  for (int i = 0; i < n; ++i)
    if (keep[i]) {
      out.kept_ids.push_back(i);
      out.instance.words_.push_back(words[i]);
    }
  out.index_map.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    for (size_t k = 0; k < out.kept_ids.size(); ++k) {
      const Word& host = words[out.kept_ids[k]];
      if (host.size() >= words[i].size() && host.find(words[i]) != Word::npos) {
        out.index_map[i] = static_cast<int>(k);
        break;
      }
    }
  }
  out.dropped = n - static_cast<int>(out.kept_ids.size());
  return out;
}

Instance Instance::of(std::vector<Word> words) {
  if (words.empty()) throw std::invalid_argument("empty word list");
  for (size_t i = 0; i < words.size(); ++i) {
    if (words[i].empty()) throw std::invalid_argument("empty word");
    for (size_t j = 0; j < words.size(); ++j) {
      if (i == j) continue;
      if (words[j].find(words[i]) != Word::npos)
        throw std::invalid_argument("word list is not substring-free");
    }
  }
  Instance inst;
  inst.words_ = std::move(words);
  return inst;
}

long long Instance::total_length() const {
  long long total = 0;
  for (const Word& w : words_) total += static_cast<long long>(w.size());
  return total;
}

int Instance::max_word_length() const {
  size_t best = 0;
  for (const Word& w : words_) best = std::max(best, w.size());
  return static_cast<int>(best);
}

Instance Instance::restricted(const std::vector<int>& ids) const {
  validate_ids(ids, size());
  Instance out;
  out.words_.reserve(ids.size());
  for (int id : ids) out.words_.push_back(words_[id]);
  return out;
}

Word merge_path(const Instance& inst, const std::vector<int>& order) {
  validate_ids(order, inst.size());
  Word out;
  for (size_t i = 0; i + 1 < order.size(); ++i)
    out += merge_prefix(inst.word(order[i]), inst.word(order[i + 1]));
  out += inst.word(order.back());
  return out;
}

bool is_superstring(const Word& w, const Instance& inst) {
  for (const Word& s : inst.words())
    if (w.find(s) == Word::npos) return false;
  return true;
}

std::string fingerprint(const Instance& inst) {
  uint64_t h = 14695981039346656037ull;
  auto eat = [&h](unsigned char c) {
    h ^= c;
    h *= 1099511628211ull;
  };
  for (const Word& w : inst.words()) {
    for (char c : w) eat(static_cast<unsigned char>(c));
    eat(0x1f);
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace ssp
