// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "ssp/word.hpp"

namespace ssp {

// A substring-free list of nonempty words, indexed 0..size()-1.
class Instance {
 public:
  struct Reduction;  // defined below, once Instance is complete

  // Drops words contained in another word; duplicates collapse to the first
  // occurrence.  Order of retained words is preserved.
  // Throws std::invalid_argument on an empty list or an empty word.
  static Reduction reduce(const std::vector<Word>& words);

  // Validating constructor for fixtures already known to be substring-free.
  static Instance of(std::vector<Word> words);

  int size() const { return static_cast<int>(words_.size()); }
  const Word& word(int i) const { return words_[i]; }
  const std::vector<Word>& words() const { return words_; }
  long long total_length() const;
  int max_word_length() const;

  // Sub-instance over distinct valid node ids, in the given order.
  // Substring-freeness is inherited, so no re-reduction happens.
  Instance restricted(const std::vector<int>& ids) const;

  // Empty placeholder, only meaningful as a to-be-assigned member of the
  // result structs below; every populated instance comes from a factory.
  Instance() = default;

 private:
  std::vector<Word> words_;
};

struct Instance::Reduction {
  Instance instance;
  // For each input word, the index of the retained word that contains it
  // (the word's own index, when it is retained).
  std::vector<int> index_map;
  // Original indices of the retained words, ascending.
  std::vector<int> kept_ids;
  int dropped = 0;
};

// Left-to-right maximal merge of the listed words.  `order` must hold
// distinct valid node ids (any nonempty subset).
Word merge_path(const Instance& inst, const std::vector<int>& order);

bool is_superstring(const Word& w, const Instance& inst);

// 64-bit FNV-1a over the word list, as a fixed-width hex string.  Stable
// across runs and platforms; used to key report rows.
std::string fingerprint(const Instance& inst);

}  // namespace ssp
