#pragma once

#include "fll/rational.hpp"

namespace fll {

// chi(s): the number of maximal alternating segments of length s summed over
// all words of Z_q^n. Requires n >= 2 and 1 <= s <= n.
BigInt chi(int s, int n, unsigned q);

// Refinement of chi(s) for interior lengths 2 <= s <= n-1 by how the
// alternation is broken at the two segment ends. An end is "closed" by a
// repeated symbol (or by the word boundary) or by a third symbol that starts
// an overlapping segment:
//   chi1: no third symbol on either end
//   chi2: third symbols on both ends
//   chi3: third symbol on the right end only
//   chi4: third symbol on the left end only (equals chi3 by symmetry)
struct ChiBreakdown {
    BigInt chi1, chi2, chi3, chi4;
    BigInt total() const { return chi1 + chi2 + chi3 + chi4; }
};
ChiBreakdown chi_breakdown(int s, int n, unsigned q);

// Closed-form expectations over a uniform word of Z_q^n, together with the
// exact chi-based counterparts for the segment-length sums. The closed forms
// for runs, segment count and length sum are exact; the closed form for the
// squared length sum differs from the exact value (see the delta accessors).
struct ExpectedStats {
    int n = 0;
    unsigned q = 0;
    Rational e_runs;           // E[rho]
    Rational e_segments;       // E[A]
    Rational e_sum_s;          // E[sum s_i], closed form
    Rational e_sum_s_exact;    // same, from chi sums
    Rational e_sum_s2_closed;  // E[sum s_i^2], closed form
    Rational e_sum_s2_exact;   // same, from chi sums

    Rational sum_s2_delta() const { return e_sum_s2_exact - e_sum_s2_closed; }
};
ExpectedStats expected_stats(int n, unsigned q);

// Average radius-1 ball size over Z_q^n. "closed" evaluates the closed-form
// expression; "exact" is the true average, computed by full enumeration for
// small spaces and otherwise from the expectation decomposition
// (nq-n-1) E[rho] + 2 - E[sum s_i^2]/2 + (3/2) E[sum s_i] - E[A]
// with the chi-based exact squared sum. The two exact routes agree; the
// closed form is off by delta() = 1/q^n.
struct AverageBallSize {
    int n = 0;
    unsigned q = 0;
    Rational closed;
    Rational exact;
    Rational delta() const { return closed - exact; }
};
AverageBallSize average_ball_size(int n, unsigned q);

// The individual routes, exposed so tests can compare them independently.
Rational average_ball_closed(int n, unsigned q);
Rational average_ball_exact_enumeration(int n, unsigned q);    // guard q^n <= 2^22
Rational average_ball_exact_decomposition(int n, unsigned q);  // chi-based, any n

}  // namespace fll
