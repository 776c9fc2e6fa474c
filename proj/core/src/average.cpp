#include "fll/average.hpp"

#include <stdexcept>
#include <vector>

#include "fll/combinatorics.hpp"
#include "fll/errors.hpp"
#include "fll/extremal.hpp"
#include "fll/word.hpp"

namespace fll {

namespace {

BigInt bpow(unsigned q, int e) {
    BigInt result = 1;
    for (int i = 0; i < e; ++i) result *= q;
    return result;
}

void check_nq(int n, unsigned q, int min_n, const char* op) {
    if (q < 2) throw std::domain_error(std::string(op) + ": alphabet size must be at least 2");
    if (n < min_n)
        throw std::domain_error(std::string(op) + ": n must be at least " + std::to_string(min_n));
}

}  // namespace

BigInt chi(int s, int n, unsigned q) {
    check_nq(n, q, 2, "chi");
    if (s < 1 || s > n) throw std::domain_error("chi: s must be in [1, n]");
    const BigInt Q = q;
    if (s == n) return Q * (q - 1);
    if (s == 1) return 2 * bpow(q, n - 1) + BigInt(n - 2) * bpow(q, n - 2);
    const BigInt qm1 = q - 1;
    return 2 * qm1 * qm1 * bpow(q, n - s) + BigInt(n - s - 1) * qm1 * qm1 * qm1 * bpow(q, n - s - 1);
}

ChiBreakdown chi_breakdown(int s, int n, unsigned q) {
    check_nq(n, q, 3, "chi_breakdown");
    if (s < 2 || s > n - 1) throw std::domain_error("chi_breakdown: s must be in [2, n-1]");
    const BigInt qm1 = q - 1;
    const BigInt qm2 = q - 2;
    const BigInt inner = n - s - 1;  // interior start positions beyond the two boundary ones
    const BigInt p = bpow(q, n - s);
    const BigInt p1 = bpow(q, n - s - 1);
    ChiBreakdown b;
    b.chi1 = 2 * qm1 * p + inner * qm1 * p1;
    b.chi2 = inner * qm1 * qm2 * qm2 * p1;
    b.chi3 = qm1 * qm2 * p + inner * qm1 * qm2 * p1;
    b.chi4 = b.chi3;
    return b;
}

ExpectedStats expected_stats(int n, unsigned q) {
    check_nq(n, q, 1, "expected_stats");
    ExpectedStats st;
    st.n = n;
    st.q = q;
    if (n == 1) {
        // A single symbol is one run and one segment of length 1.
        st.e_runs = st.e_segments = st.e_sum_s = st.e_sum_s_exact = 1;
        st.e_sum_s2_closed = st.e_sum_s2_exact = 1;
        return st;
    }
    const BigInt Q = q;
    const BigInt Q2 = Q * Q;
    const BigInt qn = bpow(q, n);
    st.e_runs = Rational(n) - Rational(n - 1, q);
    st.e_segments = 1 + Rational(BigInt(n - 2) * (q - 1) * (q - 2), Q2) + Rational(n - 1, q);
    st.e_sum_s = n + Rational(BigInt(n - 2) * (q - 1) * (q - 2), Q2);
    st.e_sum_s2_closed = Rational(BigInt(n) * (4 * Q2 - 3 * Q + 2), Q2) +
                         Rational(6 * Q - 4, Q2) - 4 -
                         Rational(2, q - 1) * (1 - Rational(1, qn));
    BigInt sum1 = 0, sum2 = 0;
    for (int s = 1; s <= n; ++s) {
        const BigInt c = chi(s, n, q);
        sum1 += s * c;
        sum2 += BigInt(s) * s * c;
    }
    st.e_sum_s_exact = Rational(sum1, qn);
    st.e_sum_s2_exact = Rational(sum2, qn);
    return st;
}

Rational average_ball_closed(int n, unsigned q) {
    check_nq(n, q, 1, "average_ball_closed");
    const BigInt Q = q;
    const BigInt Q2 = Q * Q;
    const BigInt qn = bpow(q, n);
    return Rational(BigInt(n) * n) * (Q + Rational(1, q) - 2) - Rational(n, q) -
           Rational((Q - 1) * (Q - 2), Q2) + 3 - Rational(3, q) + Rational(2, Q2) +
           Rational(qn - 1, qn * (Q - 1));
}

Rational average_ball_exact_enumeration(int n, unsigned q) {
    check_nq(n, q, 1, "average_ball_exact_enumeration");
    constexpr std::uint64_t kGuard = std::uint64_t(1) << 22;
    const std::uint64_t space = upow_capped(q, static_cast<unsigned>(n), kGuard);
    if (space == 0)
        throw resource_limit_error("average_ball_exact_enumeration: q^n exceeds the 2^22 guard");
    std::vector<Symbol> digits(n, 0);
    std::int64_t sum = 0;
    for (std::uint64_t index = 0; index < space; ++index) {
        sum += l1_size_formula(Word(q, digits));
        for (int pos = n; pos-- > 0;) {
            if (++digits[pos] < q) break;
            digits[pos] = 0;
        }
    }
    return Rational(BigInt(sum), bpow(q, n));
}

Rational average_ball_exact_decomposition(int n, unsigned q) {
    check_nq(n, q, 1, "average_ball_exact_decomposition");
    if (n == 1) return q;  // every radius-1 ball is the whole line
    const ExpectedStats st = expected_stats(n, q);
    return Rational(BigInt(n) * q - n - 1) * st.e_runs + 2 -
           st.e_sum_s2_exact / 2 + Rational(3, 2) * st.e_sum_s - st.e_segments;
}

AverageBallSize average_ball_size(int n, unsigned q) {
    check_nq(n, q, 1, "average_ball_size");
    AverageBallSize avg;
    avg.n = n;
    avg.q = q;
    avg.closed = average_ball_closed(n, q);
    avg.exact = upow_capped(q, static_cast<unsigned>(n), std::uint64_t(1) << 16) != 0
                    ? average_ball_exact_enumeration(n, q)
                    : average_ball_exact_decomposition(n, q);
    return avg;
}

}  // namespace fll
