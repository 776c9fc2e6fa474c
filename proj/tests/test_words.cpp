#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "fll/word.hpp"
#include "testref.hpp"

using fll::Symbol;
using fll::Word;

namespace {
Word wd(const char* text, unsigned q = 2) { return Word::parse(text, q); }

std::vector<int> ref_segment_lengths(const Word& w) {
    std::vector<int> out;
    for (const testref::Seg& s : testref::maximal_alternating_substrings(w))
        out.push_back(static_cast<int>(s.end - s.begin + 1));
    return out;
}
}  // namespace

TEST_CASE("parsing and printing round-trip") {
    CHECK(wd("0101").str() == "0101");
    CHECK(wd("1120212", 3).str() == "1120212");
    CHECK(wd("").size() == 0);
    CHECK(wd("").str() == "");

    // Large alphabets use comma-separated symbol values.
    const Word big = Word::parse("0,11,3", 16);
    CHECK(big.size() == 3);
    CHECK(big[1] == 11);
    CHECK(big.str() == "0,11,3");
    CHECK(Word::parse(big.str(), 16) == big);

    CHECK_THROWS_AS(Word::parse("012", 2), std::invalid_argument);
    CHECK_THROWS_AS(Word::parse("0,17", 16), std::invalid_argument);
    CHECK_THROWS_AS(Word::parse("ab", 2), std::invalid_argument);
    CHECK_THROWS_AS(Word(1, {}), std::domain_error);
}

TEST_CASE("run counts") {
    CHECK(fll::runs(wd("1120212", 3)) == 6);
    CHECK(fll::runs(wd("0000000")) == 1);
    CHECK(fll::runs(wd("0101")) == 4);
    CHECK(fll::runs(wd("0")) == 1);
    CHECK_THROWS_AS(fll::runs(wd("")), std::domain_error);
}

TEST_CASE("alternating profile on handpicked words") {
    const auto p = fll::alternating_profile(wd("1120212", 3));
    CHECK(p.runs == 6);
    CHECK(p.segment_lengths == std::vector<int>{1, 2, 3, 3});
    CHECK(p.zeros_of_diff == 1);
    CHECK(p.length_sum() == 9);
    CHECK(p.length_square_sum() == 1 + 4 + 9 + 9);

    CHECK(fll::alternating_profile(wd("0101")).segment_lengths == std::vector<int>{4});
    CHECK(fll::alternating_profile(wd("0000")).segment_lengths ==
          std::vector<int>{1, 1, 1, 1});
    CHECK(fll::alternating_profile(wd("00110")).segment_lengths ==
          std::vector<int>{1, 2, 2});
    // Three pairwise-distinct consecutive symbols make adjacent segments
    // share a position.
    CHECK(fll::alternating_profile(wd("012", 3)).segment_lengths ==
          std::vector<int>{2, 2});
}

TEST_CASE("profile matches the definition-driven segment scan") {
    auto check_space = [](unsigned n, unsigned q) {
        for (const Word& w : testref::all_words(n, q)) {
            const auto p = fll::alternating_profile(w);
            REQUIRE(p.segment_lengths == ref_segment_lengths(w));
            REQUIRE(p.runs == fll::runs(w));
        }
    };
    for (unsigned n = 1; n <= 10; ++n) check_space(n, 2);
    for (unsigned n = 1; n <= 6; ++n) check_space(n, 3);
    for (unsigned n = 1; n <= 5; ++n) check_space(n, 4);
}

TEST_CASE("profile identities over whole spaces") {
    auto check_space = [](unsigned n, unsigned q) {
        for (const Word& w : testref::all_words(n, q)) {
            const auto p = fll::alternating_profile(w);
            const int A = p.segments();
            // Segment lengths sum to n plus one per overlapping junction;
            // junctions are exactly the nonzero gaps not separating runs.
            REQUIRE(p.runs == static_cast<int>(n) - p.zeros_of_diff);
            REQUIRE(p.length_sum() == static_cast<int>(n) + A - 1 - p.zeros_of_diff);
            if (q == 2) {
                REQUIRE(p.runs == static_cast<int>(n) + 1 - A);
                REQUIRE(p.length_sum() == static_cast<int>(n));
            }
        }
    };
    for (unsigned n = 1; n <= 10; ++n) check_space(n, 2);
    for (unsigned n = 1; n <= 6; ++n) check_space(n, 3);
    for (unsigned n = 1; n <= 5; ++n) check_space(n, 4);
}

TEST_CASE("difference vector") {
    const Word d = fll::difference_vector(wd("1120212", 3));
    CHECK(d == wd("011221", 3));
    CHECK(fll::difference_vector(wd("0101")) == wd("111"));
    CHECK(fll::difference_vector(wd("7", 8)).size() == 0);
    for (unsigned n = 1; n <= 6; ++n)
        for (const Word& w : testref::all_words(n, 3)) {
            const Word diff = fll::difference_vector(w);
            int zeros = 0;
            for (Symbol s : diff)
                if (s == 0) ++zeros;
            REQUIRE(fll::runs(w) == static_cast<int>(n) - zeros);
        }
}

TEST_CASE("constructors for the special words") {
    CHECK(fll::make_constant(2, 1, 4) == wd("1111"));
    CHECK(fll::make_alternating(2, 0, 1, 5) == wd("01010"));
    CHECK(fll::make_alternating(3, 2, 0, 4) == wd("2020", 3));
    CHECK(fll::make_cyclic(5, 2) == wd("01010"));
    CHECK(fll::make_cyclic(4, 3) == wd("0120", 3));
    CHECK(fll::make_cyclic(7, 3) == wd("0120120", 3));
    CHECK(fll::runs(fll::make_cyclic(5, 2)) == 5);
}

TEST_CASE("balanced words have the promised profile") {
    CHECK(fll::make_balanced(7, 3) == wd("0100110"));
    CHECK(fll::make_balanced(5, 2) == wd("01001"));
    CHECK(fll::make_balanced(4, 1) == wd("0101"));
    CHECK(fll::make_balanced(3, 3) == wd("000"));

    for (unsigned n = 1; n <= 30; ++n)
        for (int alpha = 1; alpha <= static_cast<int>(n); ++alpha) {
            const Word w = fll::make_balanced(n, alpha);
            REQUIRE(w.size() == n);
            REQUIRE(w[0] == 0);
            const auto p = fll::alternating_profile(w);
            REQUIRE(p.segments() == alpha);
            REQUIRE(p.length_sum() == static_cast<int>(n));
            const int c = static_cast<int>((n + alpha - 1) / alpha);
            const int k = static_cast<int>(((n - 1) % alpha) + 1);
            std::vector<int> expected(static_cast<std::size_t>(k), c);
            expected.resize(static_cast<std::size_t>(alpha), c - 1);
            REQUIRE(p.segment_lengths == expected);
        }
    CHECK_THROWS_AS(fll::make_balanced(4, 0), std::domain_error);
    CHECK_THROWS_AS(fll::make_balanced(4, 5), std::domain_error);
}

TEST_CASE("rank order and index round-trip") {
    CHECK(fll::word_index(wd("011")) == 3);
    CHECK(fll::word_index(wd("21", 3)) == 7);
    CHECK(fll::word_from_index(7, 2, 3) == wd("21", 3));

    for (unsigned q : {2u, 3u})
        for (unsigned n = 0; n <= (q == 2 ? 10u : 6u); ++n) {
            const auto words = testref::all_words(n, q);
            for (std::uint64_t i = 0; i < words.size(); ++i) {
                REQUIRE(fll::word_index(words[i]) == i);
                REQUIRE(fll::word_from_index(i, n, q) == words[i]);
                if (i > 0) REQUIRE(words[i - 1] < words[i]);
            }
        }
}

TEST_CASE("ordering groups by alphabet then length") {
    CHECK(wd("1") < wd("00"));           // shorter first
    CHECK(wd("11", 2) < wd("00", 3));    // alphabet first
    CHECK(wd("001") < wd("010"));
}
