// SPDX-License-Identifier: Apache-2.0
#include "ssp/generate.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "ssp/errors.hpp"

namespace ssp {

uint64_t SplitMix64::next() {
    uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

uint64_t SplitMix64::bounded(uint64_t n) {
    if (n == 0) throw std::invalid_argument("bounded draw over empty range");
    return next() % n;
}

namespace {

void validate(const GenSpec& spec) {
    if (spec.m < 1) throw std::invalid_argument("word count must be positive");
    if (spec.len_lo < 1 || spec.len_hi < spec.len_lo)
        throw std::invalid_argument("bad word length range");
    if (spec.alphabet < 1 || spec.alphabet > 26)
        throw std::invalid_argument("alphabet size must be in 1..26");
    if (spec.k < 1) throw std::invalid_argument("family parameter must be positive");
}

Word random_word(SplitMix64& rng, int length, int alphabet) {
    Word s(length, 'a');
    for (char& ch : s)
        ch = static_cast<char>('a' + rng.bounded(alphabet));
    return s;
}

int draw_length(SplitMix64& rng, const GenSpec& spec) {
    return spec.len_lo +
           static_cast<int>(rng.bounded(spec.len_hi - spec.len_lo + 1));
}

std::vector<Word> family_random(const GenSpec& spec) {
    SplitMix64 rng(spec.seed);
    std::vector<Word> out;
    out.reserve(spec.m);
    for (int i = 0; i < spec.m; ++i)
        out.push_back(random_word(rng, draw_length(rng, spec), spec.alphabet));
    return out;
}

std::vector<Word> family_tarhio(const GenSpec& spec) {
    const std::string b(spec.k, 'b');
    return {"a" + b, b + "b", b + "a"};
}

std::vector<Word> family_blum(const GenSpec& spec) {
    std::string ab, ba;
    for (int i = 0; i < spec.k; ++i) {
        ab += "ab";
        ba += "ba";
    }
    return {"c" + ab, ba, ab + "c"};
}

std::vector<Word> family_periodic(const GenSpec& spec) {
    SplitMix64 rng(spec.seed);
    const Word base = random_word(rng, spec.k, spec.alphabet);
    std::vector<Word> out;
    out.reserve(spec.m);
    for (int i = 0; i < spec.m; ++i) {
        // |word| > 2|base| guarantees the sampled words can close Small
        // cycles; offsets land anywhere in the base period.
        const int len = std::max(draw_length(rng, spec), 2 * spec.k + 1);
        const int off = static_cast<int>(rng.bounded(spec.k));
        Word s(len, 'a');
        for (int p = 0; p < len; ++p) s[p] = base[(off + p) % spec.k];
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<Word> family_fragments(const GenSpec& spec) {
    SplitMix64 rng(spec.seed);
    const Word genome = random_word(rng, spec.k, spec.alphabet);
    std::vector<Word> out;
    out.reserve(spec.m);
    for (int i = 0; i < spec.m; ++i) {
        const int len = std::min(draw_length(rng, spec), spec.k);
        const int start = static_cast<int>(rng.bounded(spec.k - len + 1));
        out.push_back(genome.substr(start, len));
    }
    return out;
}

}  // namespace

std::vector<Word> generate_words(const GenSpec& spec) {
    validate(spec);
    if (spec.family == "random") return family_random(spec);
    if (spec.family == "tarhio") return family_tarhio(spec);
    if (spec.family == "blum") return family_blum(spec);
    if (spec.family == "periodic") return family_periodic(spec);
    if (spec.family == "fragments") return family_fragments(spec);
    throw std::invalid_argument("unknown family: " + spec.family);
}

Instance::Reduction generate(const GenSpec& spec) {
    return Instance::reduce(generate_words(spec));
}

std::string GenSpec::to_json() const {
    nlohmann::json j;
    j["family"] = family;
    j["m"] = m;
    j["len_lo"] = len_lo;
    j["len_hi"] = len_hi;
    j["alphabet"] = alphabet;
    j["k"] = k;
    j["seed"] = seed;
    return j.dump();
}

GenSpec GenSpec::from_json(const std::string& text) {
    try {
        const nlohmann::json j = nlohmann::json::parse(text);
        GenSpec spec;
        spec.family = j.at("family").get<std::string>();
        spec.m = j.at("m").get<int>();
        spec.len_lo = j.at("len_lo").get<int>();
        spec.len_hi = j.at("len_hi").get<int>();
        spec.alphabet = j.at("alphabet").get<int>();
        spec.k = j.at("k").get<int>();
        spec.seed = j.at("seed").get<uint64_t>();
        return spec;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad generator spec: ") + e.what());
    }
}

}  // namespace ssp
