#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fll {

using Symbol = std::uint16_t;

// A fixed-length word over the alphabet {0, ..., q-1}. The alphabet size is
// carried with the word because every operation on words is alphabet-aware
// (insertion spheres, ball sizes and parsing all depend on q, not just on the
// symbols that happen to occur).
class Word {
public:
    Word() : q_(2) {}
    Word(unsigned q, std::vector<Symbol> symbols);

    // Text form: a digit string for q <= 10 ("0120"), comma-separated symbol
    // values for larger alphabets ("0,11,3"). The empty string is the empty word.
    static Word parse(std::string_view text, unsigned q);
    std::string str() const;

    unsigned q() const { return q_; }
    std::size_t size() const { return symbols_.size(); }
    bool empty() const { return symbols_.empty(); }
    Symbol operator[](std::size_t i) const { return symbols_[i]; }
    const std::vector<Symbol>& symbols() const { return symbols_; }

    auto begin() const { return symbols_.begin(); }
    auto end() const { return symbols_.end(); }

    bool operator==(const Word&) const = default;
    // Orders by alphabet, then length, then symbols. Within one Z_q^n this is
    // exactly mixed-radix rank order; across lengths shorter words sort first,
    // which keeps variable-length balls grouped by word length.
    std::strong_ordering operator<=>(const Word& other) const;

private:
    unsigned q_;
    std::vector<Symbol> symbols_;
};

// Alternating-segment structure of a word: run count, the lengths of the
// maximal alternating segments in left-to-right order, and the number of zero
// entries of the difference vector. A maximal alternating segment is a maximal
// substring that alternates between exactly two distinct symbols; a single
// symbol with no alternating neighbour forms a segment of length 1. In binary
// words segments tile the word; for q >= 3 adjacent segments can share one
// position (that happens exactly where three consecutive symbols are pairwise
// distinct), so the segment lengths can sum to more than n.
struct SegmentProfile {
    int runs = 0;
    std::vector<int> segment_lengths;
    int zeros_of_diff = 0;

    int segments() const { return static_cast<int>(segment_lengths.size()); }
    std::int64_t length_sum() const;
    std::int64_t length_square_sum() const;
};

// Number of runs (maximal blocks of equal symbols). Undefined for the empty word.
int runs(const Word& w);

SegmentProfile alternating_profile(const Word& w);

// Componentwise successive differences mod q, length n-1.
Word difference_vector(const Word& w);

Word make_constant(unsigned q, Symbol symbol, std::size_t n);
Word make_alternating(unsigned q, Symbol a, Symbol b, std::size_t n);

// The cyclic word c(n): symbols 0,1,...,q-1 repeated, truncated to length n.
Word make_cyclic(std::size_t n, unsigned q);

// The canonical binary word with exactly alpha maximal alternating segments
// whose lengths differ by at most one: k = ((n-1) mod alpha) + 1 segments of
// length ceil(n/alpha) followed by alpha-k segments of length ceil(n/alpha)-1.
// Each segment starts by repeating the previous symbol (that repeat is what
// separates segments in a binary word) and the word starts with 0.
Word make_balanced(std::size_t n, int alpha);

// Mixed-radix rank of w within Z_q^n, first symbol most significant.
// Requires q^n <= 2^63; rank order equals the Word ordering within Z_q^n.
std::uint64_t word_index(const Word& w);
Word word_from_index(std::uint64_t index, std::size_t n, unsigned q);

}  // namespace fll
