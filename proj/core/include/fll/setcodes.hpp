#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "fll/word.hpp"

namespace fll {

// A deduplicated, sorted set of words of one common length over one alphabet.
// Serves as both anticode and code; the serialized form is a header line
// "n=<n> q=<q>" followed by one word per line in sorted order.
class WordSet {
public:
    WordSet(unsigned n, unsigned q);
    WordSet(unsigned n, unsigned q, std::vector<Word> words);

    void insert(Word w);
    bool contains(const Word& w) const;

    unsigned n() const { return n_; }
    unsigned q() const { return q_; }
    std::size_t size() const { return words_.size(); }
    bool empty() const { return words_.empty(); }
    const std::vector<Word>& words() const { return words_; }
    auto begin() const { return words_.begin(); }
    auto end() const { return words_.end(); }

    bool operator==(const WordSet&) const = default;

    void write(std::ostream& out) const;
    static WordSet read(std::istream& in);

private:
    unsigned n_;
    unsigned q_;
    std::vector<Word> words_;  // kept sorted
};

// Largest pairwise FLL distance; 0 for a singleton, error for an empty set.
int diameter(const WordSet& s);

// True iff no word outside s is within distance d of every member. Requires
// diameter(s) <= d.
bool is_maximal_anticode(const WordSet& s, int d);

struct AnticodeSearchResult {
    unsigned n = 0;
    unsigned q = 0;
    int diam = 1;
    std::uint64_t total_maximal = 0;
    std::size_t max_size = 0;
    std::size_t min_size = 0;
    std::vector<WordSet> max_witnesses;  // every maximal anticode of max_size
    std::vector<WordSet> min_witnesses;  // every maximal anticode of min_size
};

// Exhaustive enumeration of all maximal anticodes of the given diameter:
// maximal cliques of the graph on Z_q^n with edges at distance <= d, found by
// Bron-Kerbosch with pivoting (exact, no pruning that could miss cliques).
// Guarded to q^n <= 2^14 vertices.
AnticodeSearchResult search_maximal_anticodes(unsigned n, unsigned q, int d = 1);

// The two binary extremal diameter-1 anticodes: the weight-<=1 ball of size
// n+1 and the four-word set {0..010, 0..011, 0..0101, 0..0110} (the length-n
// binary expansions of 2, 3, 5, 6). Both are checked maximal before returning.
// Requires 3 <= n <= 20 (the maximality check scans Z_2^n).
struct AnticodePair {
    WordSet large;
    WordSet small;
};
AnticodePair extremal_anticodes(unsigned n);

// Deletes the last coordinate of every word, deduplicated. Requires n >= 2.
WordSet puncture(const WordSet& s);

// Correcting-code predicates: pairwise disjointness of the respective error
// spheres. The deletion-insertion ball applies t1 deletions then t2 insertions.
bool is_deletion_correcting(const WordSet& c, unsigned t);
bool is_insertion_correcting(const WordSet& c, unsigned t);
bool is_di_correcting(const WordSet& c, unsigned t1, unsigned t2);

// Evaluates the equivalent characterizations of a code correcting s = t1+t2
// total deletions/insertions: one verdict per (t1', t2') split of s, plus
// s-deletion, s-insertion, and the minimum-distance threshold
// min pairwise fll_distance >= s+1. All verdicts agree for equal-length codes.
struct EquivalenceReport {
    unsigned t1 = 0, t2 = 0;
    bool di = false;
    bool deletion = false;
    bool insertion = false;
    std::vector<std::pair<std::pair<unsigned, unsigned>, bool>> splits;
    int min_pairwise_distance = 0;  // n+1 when |C| < 2 (no pair to measure)
    bool min_distance = false;

    bool all_agree() const;
};
EquivalenceReport equivalence_harness(const WordSet& c, unsigned t1, unsigned t2);

}  // namespace fll
