#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "fll/errors.hpp"
#include "fll/metric.hpp"
#include "fll/setcodes.hpp"
#include "fll/word.hpp"
#include "testref.hpp"

using fll::Word;
using fll::WordSet;

namespace {

Word wd(const char* text, unsigned q = 2) { return Word::parse(text, q); }

WordSet ws(unsigned n, unsigned q, std::initializer_list<const char*> words) {
    WordSet out(n, q);
    for (const char* text : words) out.insert(Word::parse(text, q));
    return out;
}

// Canonical form for comparing collections of anticodes regardless of the
// order the search emitted them.
std::set<std::vector<Word>> canon(const std::vector<WordSet>& sets) {
    std::set<std::vector<Word>> out;
    for (const WordSet& s : sets) out.insert(s.words());
    return out;
}

bool has_suffix(const Word& w, std::initializer_list<fll::Symbol> suffix) {
    if (w.size() < suffix.size()) return false;
    std::size_t i = w.size() - suffix.size();
    for (fll::Symbol s : suffix)
        if (w[i++] != s) return false;
    return true;
}

Word drop_last(const Word& w) {
    std::vector<fll::Symbol> symbols(w.begin(), w.end() - 1);
    return Word(w.q(), std::move(symbols));
}

}  // namespace

TEST_CASE("word sets: insertion, lookup, validation") {
    WordSet s(3, 2);
    s.insert(wd("010"));
    s.insert(wd("000"));
    s.insert(wd("010"));
    CHECK(s.size() == 2);
    CHECK(s.words() == std::vector<Word>{wd("000"), wd("010")});
    CHECK(s.contains(wd("010")));
    CHECK_FALSE(s.contains(wd("111")));
    CHECK_THROWS_AS(s.insert(wd("01")), std::invalid_argument);
    CHECK_THROWS_AS(s.insert(wd("010", 3)), std::invalid_argument);
}

TEST_CASE("word set serialization") {
    const WordSet s = ws(3, 2, {"000", "001"});
    std::ostringstream out;
    s.write(out);
    CHECK(out.str() == "n=3 q=2\n000\n001\n");

    std::istringstream in(out.str());
    CHECK(WordSet::read(in) == s);

    std::istringstream bad("q=2 n=3\n000\n");
    CHECK_THROWS_AS(WordSet::read(bad), std::invalid_argument);

    // Round trip for a larger alphabet, where words serialize with commas.
    WordSet big(2, 12);
    big.insert(Word::parse("11,3", 12));
    big.insert(Word::parse("0,0", 12));
    std::ostringstream out2;
    big.write(out2);
    std::istringstream in2(out2.str());
    CHECK(WordSet::read(in2) == big);
}

TEST_CASE("diameter") {
    CHECK(fll::diameter(ws(3, 2, {"000", "001", "010", "100"})) == 1);
    CHECK(fll::diameter(ws(2, 2, {"00", "11"})) == 2);
    CHECK(fll::diameter(ws(2, 2, {"01"})) == 0);
    CHECK_THROWS_AS(fll::diameter(WordSet(2, 2)), std::domain_error);
}

TEST_CASE("maximality predicate") {
    CHECK(fll::is_maximal_anticode(ws(3, 2, {"000", "001", "010", "100"}), 1));
    CHECK(fll::is_maximal_anticode(ws(3, 2, {"011", "101", "110", "111"}), 1));
    CHECK_FALSE(fll::is_maximal_anticode(ws(3, 2, {"000", "001"}), 1));
    CHECK_THROWS_AS(fll::is_maximal_anticode(ws(2, 2, {"00", "11"}), 1),
                    std::domain_error);

    WordSet huge(21, 2);
    huge.insert(fll::make_constant(2, 0, 21));
    CHECK_THROWS_AS(fll::is_maximal_anticode(huge, 1), fll::resource_limit_error);
}

TEST_CASE("search finds exactly the six maximal anticodes of Z_2^3") {
    const fll::AnticodeSearchResult r = fll::search_maximal_anticodes(3, 2);
    CHECK(r.total_maximal == 6);
    CHECK(r.max_size == 4);
    CHECK(r.min_size == 4);
    const std::set<std::vector<Word>> expected{
        {wd("000"), wd("001"), wd("010"), wd("100")},
        {wd("001"), wd("010"), wd("011"), wd("101")},
        {wd("001"), wd("010"), wd("100"), wd("101")},
        {wd("010"), wd("011"), wd("101"), wd("110")},
        {wd("010"), wd("100"), wd("101"), wd("110")},
        {wd("011"), wd("101"), wd("110"), wd("111")}};
    CHECK(canon(r.max_witnesses) == expected);
    CHECK(canon(r.min_witnesses) == expected);
}

TEST_CASE("search statistics over small spaces") {
    struct Row {
        unsigned n, q;
        std::uint64_t total;
        std::size_t max, min;
    };
    // Includes the q=3, n=2 boundary where the general-alphabet pattern
    // n(q-1)+1 / 4 does not hold yet (6 and 5 instead of 5 and 4).
    const std::vector<Row> table{{3, 2, 6, 4, 4},   {4, 2, 20, 5, 4},
                                 {5, 2, 78, 6, 4},  {6, 2, 294, 7, 4},
                                 {2, 3, 4, 6, 5},   {3, 3, 69, 7, 4},
                                 {4, 3, 576, 9, 4}};
    for (const Row& row : table) {
        const auto r = fll::search_maximal_anticodes(row.n, row.q);
        REQUIRE(r.total_maximal == row.total);
        REQUIRE(r.max_size == row.max);
        REQUIRE(r.min_size == row.min);
    }
    CHECK_THROWS_AS(fll::search_maximal_anticodes(15, 2), fll::resource_limit_error);
}

TEST_CASE("every found clique passes the independent maximality predicate") {
    for (unsigned n = 2; n <= 5; ++n) {
        const auto r = fll::search_maximal_anticodes(n, 2);
        for (const WordSet& s : r.max_witnesses) REQUIRE(fll::is_maximal_anticode(s, 1));
        for (const WordSet& s : r.min_witnesses) REQUIRE(fll::is_maximal_anticode(s, 1));
    }
    for (const WordSet& s : fll::search_maximal_anticodes(3, 3).max_witnesses)
        REQUIRE(fll::is_maximal_anticode(s, 1));
}

TEST_CASE("binary collections are closed under complement") {
    for (unsigned n = 3; n <= 6; ++n) {
        const auto r = fll::search_maximal_anticodes(n, 2);
        // The extremes glue max_witnesses and min_witnesses together; rebuild
        // the full collection only through them when they cover everything.
        std::vector<WordSet> sets = r.max_witnesses;
        if (r.min_size != r.max_size)
            sets.insert(sets.end(), r.min_witnesses.begin(), r.min_witnesses.end());
        const auto known = canon(sets);
        for (const WordSet& s : sets) {
            WordSet flipped(n, 2);
            for (const Word& w : s) {
                std::vector<fll::Symbol> symbols;
                for (fll::Symbol sym : w) symbols.push_back(sym ^ 1);
                flipped.insert(Word(2, std::move(symbols)));
            }
            REQUIRE(known.contains(flipped.words()));
        }
    }
}

TEST_CASE("suffix structure of diameter-1 anticodes") {
    for (unsigned n = 3; n <= 7; ++n) {
        const auto r = fll::search_maximal_anticodes(n, 2);
        std::vector<WordSet> sets = r.max_witnesses;
        if (r.min_size != r.max_size)
            sets.insert(sets.end(), r.min_witnesses.begin(), r.min_witnesses.end());
        for (const WordSet& a : sets) {
            std::vector<Word> end00, end01;
            for (const Word& w : a) {
                if (has_suffix(w, {0, 0})) end00.push_back(w);
                if (has_suffix(w, {0, 1})) end01.push_back(w);
            }
            // Three words ending 00 leave room for at most one ending 01,
            // and vice versa.
            if (end00.size() >= 3) REQUIRE(end01.size() <= 1);
            if (end01.size() >= 3) REQUIRE(end00.size() <= 1);
            // At most one shared length-(n-1) prefix between the two groups.
            std::set<Word> p00, shared;
            for (const Word& w : end00) p00.insert(drop_last(w));
            for (const Word& w : end01)
                if (p00.contains(drop_last(w))) shared.insert(drop_last(w));
            REQUIRE(shared.size() <= 1);
        }
    }
}

TEST_CASE("puncturing behaves as promised on constrained anticodes") {
    CHECK(fll::puncture(ws(3, 2, {"000", "010"})) == ws(2, 2, {"00", "01"}));
    CHECK_THROWS_AS(fll::puncture(ws(1, 2, {"0"})), std::domain_error);

    for (unsigned n = 3; n <= 6; ++n) {
        const auto r = fll::search_maximal_anticodes(n, 2);
        std::vector<WordSet> sets = r.max_witnesses;
        if (r.min_size != r.max_size)
            sets.insert(sets.end(), r.min_witnesses.begin(), r.min_witnesses.end());
        for (const WordSet& a : sets) {
            for (fll::Symbol last : {fll::Symbol{0}, fll::Symbol{1}}) {
                WordSet fixed(n, 2);
                for (const Word& w : a)
                    if (w[n - 1] == last) fixed.insert(w);
                if (fixed.empty()) continue;
                const WordSet p = fll::puncture(fixed);
                REQUIRE(p.size() == fixed.size());
                REQUIRE(fll::diameter(p) <= 1);
            }
            WordSet alternating(n, 2);
            for (const Word& w : a)
                if (has_suffix(w, {0, 1}) || has_suffix(w, {1, 0}))
                    alternating.insert(w);
            if (!alternating.empty()) {
                const WordSet p = fll::puncture(alternating);
                REQUIRE(p.size() == alternating.size());
                REQUIRE(fll::diameter(p) <= 1);
            }
        }
    }
}

TEST_CASE("explicit extremal constructions") {
    const fll::AnticodePair p3 = fll::extremal_anticodes(3);
    CHECK(p3.large == ws(3, 2, {"000", "001", "010", "100"}));
    CHECK(p3.small == ws(3, 2, {"010", "011", "101", "110"}));

    const fll::AnticodePair p4 = fll::extremal_anticodes(4);
    CHECK(p4.large == ws(4, 2, {"0000", "0001", "0010", "0100", "1000"}));
    CHECK(p4.small == ws(4, 2, {"0010", "0011", "0101", "0110"}));

    for (unsigned n = 3; n <= 10; ++n) {
        const fll::AnticodePair p = fll::extremal_anticodes(n);
        REQUIRE(p.large.size() == n + 1);
        REQUIRE(p.small.size() == 4);
        REQUIRE(fll::diameter(p.large) == 1);
        REQUIRE(fll::diameter(p.small) == 1);
        REQUIRE(fll::is_maximal_anticode(p.large, 1));
        REQUIRE(fll::is_maximal_anticode(p.small, 1));
    }
    CHECK_THROWS_AS(fll::extremal_anticodes(2), std::domain_error);
}

TEST_CASE("correcting-code predicates on handpicked codes") {
    const WordSet repetition = ws(5, 2, {"00000", "11111"});
    CHECK(fll::is_deletion_correcting(repetition, 2));
    CHECK(fll::is_insertion_correcting(repetition, 2));
    CHECK(fll::is_di_correcting(repetition, 1, 1));
    CHECK(fll::is_deletion_correcting(repetition, 4));
    CHECK_FALSE(fll::is_deletion_correcting(repetition, 5));

    const WordSet close = ws(4, 2, {"0101", "0011"});
    CHECK_FALSE(fll::is_deletion_correcting(close, 1));
    CHECK_FALSE(fll::is_insertion_correcting(close, 1));

    CHECK(fll::is_deletion_correcting(ws(3, 2, {"010"}), 2));
}

TEST_CASE("equivalence harness on the repetition code") {
    const auto r = fll::equivalence_harness(ws(5, 2, {"00000", "11111"}), 1, 1);
    CHECK(r.di);
    CHECK(r.deletion);
    CHECK(r.insertion);
    CHECK(r.min_pairwise_distance == 5);
    CHECK(r.min_distance);
    REQUIRE(r.splits.size() == 3);
    for (const auto& [split, verdict] : r.splits) REQUIRE(verdict);
    CHECK(r.all_agree());
}

TEST_CASE("all characterizations agree on every two-word code") {
    const auto words = testref::all_words(5, 2);
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j) {
            WordSet code(5, 2);
            code.insert(words[i]);
            code.insert(words[j]);
            const int dist = fll::fll_distance(words[i], words[j]);
            for (unsigned s = 1; s <= 2; ++s) {
                const auto r = fll::equivalence_harness(code, s, 0);
                REQUIRE(r.all_agree());
                REQUIRE(r.di == (dist >= static_cast<int>(s) + 1));
            }
        }
}

TEST_CASE("all characterizations agree on random four-word codes") {
    std::mt19937 rng(987123);
    std::uniform_int_distribution<unsigned> pick(0, 63);
    for (int trial = 0; trial < 100; ++trial) {
        WordSet code(6, 2);
        while (code.size() < 4)
            code.insert(fll::word_from_index(pick(rng), 6, 2));
        for (unsigned s = 1; s <= 2; ++s)
            for (unsigned t1 = 0; t1 <= s; ++t1)
                REQUIRE(fll::equivalence_harness(code, t1, s - t1).all_agree());
    }
}

TEST_CASE("singleton and undersized codes are vacuously correcting") {
    const auto r = fll::equivalence_harness(ws(4, 2, {"0110"}), 1, 1);
    CHECK(r.all_agree());
    CHECK(r.di);
    CHECK(r.min_pairwise_distance == 5);
}
