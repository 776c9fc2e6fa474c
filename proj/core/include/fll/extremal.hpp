#pragma once

#include <cstdint>
#include <vector>

#include "fll/word.hpp"

namespace fll {

// Exact size of the radius-1 fixed-length ball around w, computed from the
// word's structure alone: rho*(n(q-1)-1) + 2 - sum (s_i-1)(s_i-2)/2 over the
// maximal alternating segment lengths s_i. The span overload is the
// allocation-free form the sweep engine drives.
std::int64_t l1_size_formula(const Word& w);
std::int64_t l1_size_formula(const Symbol* symbols, std::size_t n, unsigned q);

struct ExtremalResult {
    unsigned n = 0;
    unsigned q = 0;
    unsigned radius = 0;
    std::int64_t size = 0;
    // For the binary maximum: the optimal segment counts and the k of the
    // attained profile (k segments of length ceil(n/alpha), alpha-k one
    // shorter); empty/zero otherwise.
    std::vector<int> alpha_set;
    int k = 0;
    // Canonical words attaining the extreme (capped at 64 entries).
    std::vector<Word> witnesses;
};

// Minimum over all centers of |ball(w, t)|: the Hamming ball size
// sum C(n,i)(q-1)^i, attained exactly at the q constant words. Requires n > t.
ExtremalResult min_ball_size(unsigned n, unsigned q, unsigned t);

// Maximum radius-1 ball size for q >= 3: n^2(q-1) - n + 2, attained exactly at
// words with n runs and no repeat two positions apart. Refuses q = 2, whose
// maximum behaves differently (see max_ball_binary).
ExtremalResult max_ball_nonbinary(unsigned n, unsigned q);

// |L_1| of the canonical binary word with alpha balanced alternating segments.
std::int64_t balanced_ball_size(unsigned n, int alpha);

// balanced_ball_size(n, alpha) - balanced_ball_size(n, alpha-1); its sign
// equals the sign of n - 2*alpha*(alpha-1), with zero exactly at equality.
std::int64_t balanced_ball_diff(unsigned n, int alpha);

// The segment counts alpha >= 1 nearest to sqrt(1+2n)/2, decided by exact
// integer comparison of (2*alpha+-1)^2 against 1+2n; two elements exactly when
// n = 2*alpha*(alpha-1). Cross-checked internally against the window
// characterization 2*alpha*(alpha+1) >= n >= 2*(alpha-1)*alpha.
std::vector<int> optimal_alpha_set(unsigned n);

// Maximum radius-1 ball size over Z_2^n, with the attaining balanced words.
ExtremalResult max_ball_binary(unsigned n);

// Second-order estimate n^2 - sqrt(2) n^{3/2} of the binary maximum.
double max_ball_binary_asymptotic(unsigned n);

// True iff w is binary with exactly alpha maximal alternating segments, all of
// length ceil(n/alpha) or ceil(n/alpha)-1.
bool is_alpha_balanced(const Word& w, int alpha);

// True iff w attains the non-binary maximum: n runs and w[i] != w[i+2] for all i.
bool is_nonbinary_max_witness(const Word& w);

// All binary words satisfying is_alpha_balanced(w, alpha), in sorted order.
std::vector<Word> alpha_balanced_words(unsigned n, int alpha);

}  // namespace fll
