// SPDX-License-Identifier: Apache-2.0
#pragma once
//
// Seeded instance families.  Every stream is produced by the splitmix64
// generator below with documented draws, so a (family, parameters, seed)
// triple reproduces byte-identically on every platform.

#include <cstdint>
#include <string>
#include <vector>

#include "ssp/instance.hpp"

namespace ssp {

// splitmix64: state += 0x9E3779B97F4A7C15, then two xor-shift-multiply mixes.
struct SplitMix64 {
    uint64_t state = 0;
    explicit SplitMix64(uint64_t seed) : state(seed) {}
    uint64_t next();
    // next() % n (the tiny modulo bias is irrelevant at desk scale and keeps
    // the draw sequence trivially documentable)
    uint64_t bounded(uint64_t n);
};

struct GenSpec {
    std::string family = "random";  // random|tarhio|blum|periodic|fragments
    int m = 8;                      // word count (random/periodic/fragments)
    int len_lo = 3;                 // word length range (random/periodic) or
    int len_hi = 8;                 //   fragment length range (fragments)
    int alphabet = 3;               // alphabet size, letters 'a'..'z'
    int k = 3;                      // family parameter: block count (tarhio/
                                    //   blum), base-word length (periodic),
                                    //   genome length (fragments)
    uint64_t seed = 1;

    std::string to_json() const;
    static GenSpec from_json(const std::string& text);
};

// The raw word list, before substring-freeing.
std::vector<Word> generate_words(const GenSpec& spec);

// The substring-free instance the harness actually runs on.
Instance::Reduction generate(const GenSpec& spec);

}  // namespace ssp
