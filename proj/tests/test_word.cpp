#include <doctest.h>

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "ssp/word.hpp"

using ssp::Word;

namespace {

std::vector<Word> binary_words_up_to(int max_len) {
    std::vector<Word> out;
    for (int len = 1; len <= max_len; ++len)
        for (int bits = 0; bits < (1 << len); ++bits) {
            Word w(len, 'a');
            for (int p = 0; p < len; ++p)
                if (bits & (1 << p)) w[p] = 'b';
            out.push_back(std::move(w));
        }
    return out;
}

}  // namespace

TEST_CASE("overlap frozen values") {
    CHECK(ssp::overlap("bababa", "ababab") == 5);
    CHECK(ssp::overlap("ababab", "bababa") == 5);
    CHECK(ssp::self_overlap("bababa") == 4);
    CHECK(ssp::overlap("abc", "cab") == 1);
    CHECK(ssp::overlap("abc", "bca") == 2);
    CHECK(ssp::overlap("abc", "xyz") == 0);
    CHECK(ssp::overlap("aaa", "aaaa") == 3);   // the whole word may overlap
    CHECK(ssp::overlap("aaaa", "aaa") == 3);   // capped at min length
    CHECK(ssp::self_overlap("aaaa") == 3);     // proper suffix only
    CHECK(ssp::self_overlap("abc") == 0);
    CHECK(ssp::distance("abc", "bca") == 1);
    CHECK(ssp::self_distance("aaaa") == 1);
}

TEST_CASE("overlap agrees with the quadratic reference") {
    const auto words = binary_words_up_to(6);
    for (const Word& s : words) {
        CHECK(ssp::self_overlap(s) == ssp::naive::self_overlap(s));
        for (const Word& t : words)
            CHECK(ssp::overlap(s, t) == ssp::naive::overlap(s, t));
    }
}

TEST_CASE("merging drops exactly the overlap") {
    CHECK(ssp::merge_prefix("abc", "bca") + Word("bca") == "abca");
    CHECK(ssp::merge_prefix("abc", "xyz") == "abc");
    const auto words = binary_words_up_to(5);
    for (const Word& s : words)
        for (const Word& t : words) {
            const Word merged = ssp::merge_prefix(s, t) + t;
            CHECK(static_cast<int>(merged.size()) ==
                  static_cast<int>(s.size()) + static_cast<int>(t.size()) -
                      ssp::overlap(s, t));
            CHECK(merged.substr(0, s.size()) == s);
            CHECK(merged.substr(merged.size() - t.size()) == t);
        }
}

TEST_CASE("periods and periodicities") {
    CHECK(ssp::period("ababab") == 2);
    CHECK(ssp::period("aab") == 3);
    CHECK(ssp::period("aaaa") == 1);
    CHECK(ssp::period_word("ababab") == "ab");
    CHECK(ssp::all_periodicities("ababab") == std::vector<int>{2, 4, 6});
    CHECK(ssp::has_periodicity("abcab", 3));
    CHECK_FALSE(ssp::has_periodicity("abcab", 2));
    CHECK(ssp::has_periodicity("abcab", 5));
    CHECK_THROWS_AS(static_cast<void>(ssp::has_periodicity("ab", 3)),
                    std::invalid_argument);

    // periodicity via self-overlap: a in periods(w) iff w overlaps itself
    // shifted by a
    for (const Word& w : binary_words_up_to(7)) {
        const auto periods = ssp::all_periodicities(w);
        CHECK(!periods.empty());
        CHECK(periods.back() == static_cast<int>(w.size()));
        CHECK(periods.front() == ssp::period(w));
        for (int a = 1; a <= static_cast<int>(w.size()); ++a) {
            const bool expect = w.substr(a) == w.substr(0, w.size() - a);
            CHECK(ssp::has_periodicity(w, a) == expect);
        }
    }
}

TEST_CASE("gcd law for compatible periodicities") {
    for (const Word& w : binary_words_up_to(9)) {
        const int len = static_cast<int>(w.size());
        for (int a = 1; a <= len; ++a) {
            if (!ssp::has_periodicity(w, a)) continue;
            for (int b = 1; b <= len; ++b) {
                if (!ssp::has_periodicity(w, b)) continue;
                if (a + b <= len)
                    CHECK(ssp::has_periodicity(w, std::gcd(a, b)));
            }
            if (2 * a <= len) CHECK(a % ssp::period(w) == 0);
        }
    }
}

TEST_CASE("rotation and equivalence") {
    CHECK(ssp::is_rotation("ab", "ba"));
    CHECK(ssp::is_rotation("abc", "cab"));
    CHECK_FALSE(ssp::is_rotation("abc", "acb"));
    CHECK_FALSE(ssp::is_rotation("ab", "abc"));
    CHECK(ssp::equivalent("abab", "baba"));
    CHECK(ssp::equivalent("ababa", "bab"));
    CHECK_FALSE(ssp::equivalent("abab", "aabb"));
    CHECK(ssp::equivalent("aaa", "a"));
}

TEST_CASE("power prefixes and common substrings") {
    CHECK(ssp::power_prefix("ab", 5) == "ababa");
    CHECK(ssp::power_prefix("abc", 3) == "abc");
    CHECK(ssp::power_prefix("a", 4) == "aaaa");
    CHECK(ssp::longest_common_substring("ababc", "babcd") == 4);  // "babc"
    CHECK(ssp::longest_common_substring("abc", "xyz") == 0);
    CHECK(ssp::longest_common_substring("abc", "abc") == 3);
}
