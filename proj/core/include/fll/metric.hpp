#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "fll/word.hpp"

namespace fll {

// Length of a longest common subsequence. The inputs may have different
// lengths but must share an alphabet.
int lcs_length(const Word& x, const Word& y);

// Fixed-length Levenshtein distance between equal-length words: the minimum t
// such that y is reachable from x by t deletions plus t insertions. Equals
// n - lcs_length(x, y) and half the classic Levenshtein distance.
int fll_distance(const Word& x, const Word& y);

// Classic unit-cost deletion/insertion edit distance |x| + |y| - 2*LCS.
int levenshtein_distance(const Word& x, const Word& y);

// Number of differing coordinates; equal lengths required.
int hamming_distance(const Word& x, const Word& y);

// sum_{i<=t} C(n,i) (q-1)^i, the Hamming ball size.
std::uint64_t hamming_ball_size(unsigned n, unsigned q, unsigned t);

// All words reachable by exactly t deletions (length n-t), deduplicated.
std::set<Word> deletion_sphere(const Word& w, unsigned t);

// All words reachable by exactly t insertions (length n+t), deduplicated.
std::set<Word> insertion_sphere(const Word& w, unsigned t);

// sum_{i<=t} C(n+t,i) (q-1)^i: the insertion-sphere size, which depends only
// on (n, q, t), never on the word itself.
std::uint64_t insertion_sphere_size(unsigned n, unsigned q, unsigned t);

// D_q(n, t): the largest deletion-sphere size over all centers in Z_q^n,
// attained by the cyclic word c(n). Computed by the alphabet recursion
// D_q(n,t) = sum_i C(n-t,i) D_{q-1}(t, t-i) with D_1(m,s) = 1.
std::uint64_t max_deletion_sphere_size(unsigned n, unsigned q, unsigned t);

// The q=2 special case sum_{i<=t} C(n-t,i) in closed form, exposed separately
// so tests can cross-check it against the recursion.
std::uint64_t binary_max_deletion_sphere_closed(unsigned n, unsigned t);

// Lower and upper bounds on |D_t(w)| in terms of the run count:
// sum_{i<=t} C(rho-t,i) <= |D_t(w)| <= C(rho+t-1,t). Requires t <= rho.
std::pair<std::uint64_t, std::uint64_t> deletion_sphere_bounds(const Word& w, unsigned t);

struct BallReport {
    Word center;
    unsigned radius = 0;
    std::int64_t enumerated_size = 0;
    // Sorted; present unless the caller asked for size only.
    std::optional<std::vector<Word>> members;
};

// The fixed-length ball {y in Z_q^n : fll_distance(w, y) <= t}. Small spaces
// (q^n <= 2^24) are enumerated by distance filter; larger ones by composing
// insertion spheres over deletion spheres, which yields the same set.
BallReport fll_ball(const Word& w, unsigned t, bool keep_members = true);

// Same ball via the other strategy, for equality tests on the overlap.
BallReport fll_ball_by_filter(const Word& w, unsigned t, bool keep_members = true);
BallReport fll_ball_by_composition(const Word& w, unsigned t, bool keep_members = true);

// The variable-length ball {y : levenshtein_distance(w, y) <= t} for
// t in {1, 2}; its members have lengths n-t .. n+t and the decomposition into
// per-length components is disjoint. Other radii are unsupported.
std::set<Word> variable_length_ball(const Word& w, unsigned t);

// All words reachable by exactly t1 deletions followed by t2 insertions
// (length n - t1 + t2), deduplicated.
std::set<Word> deletion_insertion_ball(const Word& w, unsigned t1, unsigned t2);

}  // namespace fll
