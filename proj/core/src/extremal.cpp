#include "fll/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fll/metric.hpp"

namespace fll {

std::int64_t l1_size_formula(const Symbol* w, std::size_t n, unsigned q) {
    if (n == 0) throw std::domain_error("l1_size_formula: word must be nonempty");
    std::int64_t rho = 1;
    for (std::size_t i = 1; i < n; ++i)
        if (w[i] != w[i - 1]) ++rho;
    // Walk the maximal alternating segments without materializing them; only
    // the sum of (s-1)(s-2) is needed. Same scan as alternating_profile.
    std::int64_t correction = 0;
    std::size_t i = 0;
    while (true) {
        std::size_t j = i;
        if (j + 1 < n && w[j + 1] != w[j]) {
            ++j;
            while (j + 1 < n && w[j + 1] == w[j - 1]) ++j;
        }
        const std::int64_t s = static_cast<std::int64_t>(j - i + 1);
        correction += (s - 1) * (s - 2);
        if (j + 1 >= n) break;
        i = (w[j + 1] == w[j]) ? j + 1 : j;
    }
    return rho * (std::int64_t(n) * (q - 1) - 1) + 2 - correction / 2;
}

std::int64_t l1_size_formula(const Word& w) {
    return l1_size_formula(w.symbols().data(), w.size(), w.q());
}

ExtremalResult min_ball_size(unsigned n, unsigned q, unsigned t) {
    if (t >= n) throw std::domain_error("min_ball_size: requires n > t");
    ExtremalResult r;
    r.n = n;
    r.q = q;
    r.radius = t;
    r.size = static_cast<std::int64_t>(hamming_ball_size(n, q, t));
    for (unsigned s = 0; s < q && r.witnesses.size() < 64; ++s)
        r.witnesses.push_back(make_constant(q, static_cast<Symbol>(s), n));
    return r;
}

ExtremalResult max_ball_nonbinary(unsigned n, unsigned q) {
    if (q < 3)
        throw std::domain_error(
            "max_ball_nonbinary: defined for q >= 3; use max_ball_binary for q = 2");
    if (n == 0) throw std::domain_error("max_ball_nonbinary: n must be positive");
    ExtremalResult r;
    r.n = n;
    r.q = q;
    r.radius = 1;
    r.size = std::int64_t(n) * n * (q - 1) - n + 2;
    r.witnesses.push_back(make_cyclic(n, q));
    return r;
}

std::int64_t balanced_ball_size(unsigned n, int alpha) {
    if (n == 0) throw std::domain_error("balanced_ball_size: n must be positive");
    if (alpha < 1 || static_cast<unsigned>(alpha) > n)
        throw std::domain_error("balanced_ball_size: alpha must be in [1, n]");
    const std::int64_t a = alpha;
    const std::int64_t c = (n + a - 1) / a;    // ceil(n/alpha)
    const std::int64_t k = ((n - 1) % a) + 1;  // k = alpha exactly when alpha | n
    // Both products below pair consecutive integers, so the halves are exact.
    return std::int64_t(n + 1 - a) * (n - 1) + 2 - k * (c - 1) * (c - 2) / 2 -
           (a - k) * (c - 2) * (c - 3) / 2;
}

std::int64_t balanced_ball_diff(unsigned n, int alpha) {
    if (alpha < 2) throw std::domain_error("balanced_ball_diff: alpha must be at least 2");
    return balanced_ball_size(n, alpha) - balanced_ball_size(n, alpha - 1);
}

std::vector<int> optimal_alpha_set(unsigned n) {
    if (n == 0) throw std::domain_error("optimal_alpha_set: n must be positive");
    const std::int64_t m = 1 + 2 * std::int64_t(n);
    // Smallest alpha with (2*alpha+1)^2 >= 1+2n is the nearest integer to
    // sqrt(1+2n)/2; equality means a tie between alpha and alpha+1.
    std::int64_t a = 1;
    while ((2 * a + 1) * (2 * a + 1) < m) ++a;
    std::vector<int> argmin{static_cast<int>(a)};
    if ((2 * a + 1) * (2 * a + 1) == m) argmin.push_back(static_cast<int>(a + 1));

    // Independent route: the window 2a(a+1) >= n >= 2(a-1)a, scanned around a.
    std::vector<int> window;
    for (std::int64_t w = std::max<std::int64_t>(1, a - 2); w <= a + 2; ++w)
        if (2 * w * (w + 1) >= std::int64_t(n) && std::int64_t(n) >= 2 * (w - 1) * w)
            window.push_back(static_cast<int>(w));
    if (window != argmin)
        throw std::logic_error("optimal_alpha_set: argmin and window characterizations disagree");
    return argmin;
}

ExtremalResult max_ball_binary(unsigned n) {
    if (n == 0) throw std::domain_error("max_ball_binary: n must be positive");
    ExtremalResult r;
    r.n = n;
    r.q = 2;
    r.radius = 1;
    r.alpha_set = optimal_alpha_set(n);
    r.size = balanced_ball_size(n, r.alpha_set.front());
    for (int alpha : r.alpha_set) {
        if (balanced_ball_size(n, alpha) != r.size)
            throw std::logic_error("max_ball_binary: tied alpha values disagree on the size");
        r.witnesses.push_back(make_balanced(n, alpha));
    }
    r.k = static_cast<int>(((n - 1) % r.alpha_set.front()) + 1);
    return r;
}

double max_ball_binary_asymptotic(unsigned n) {
    const double nd = n;
    return nd * nd - std::numbers::sqrt2 * nd * std::sqrt(nd);
}

bool is_alpha_balanced(const Word& w, int alpha) {
    if (w.q() != 2) throw std::domain_error("is_alpha_balanced: defined for binary words");
    if (w.empty() || alpha < 1) return false;
    const SegmentProfile p = alternating_profile(w);
    if (p.segments() != alpha) return false;
    const int c = static_cast<int>((w.size() + alpha - 1) / alpha);
    return std::all_of(p.segment_lengths.begin(), p.segment_lengths.end(),
                       [c](int s) { return s == c || s == c - 1; });
}

bool is_nonbinary_max_witness(const Word& w) {
    if (w.empty()) return false;
    if (runs(w) != static_cast<int>(w.size())) return false;
    for (std::size_t i = 0; i + 2 < w.size(); ++i)
        if (w[i] == w[i + 2]) return false;
    return true;
}

std::vector<Word> alpha_balanced_words(unsigned n, int alpha) {
    if (n == 0) throw std::domain_error("alpha_balanced_words: n must be positive");
    if (alpha < 1 || static_cast<unsigned>(alpha) > n)
        throw std::domain_error("alpha_balanced_words: alpha must be in [1, n]");
    const int c = static_cast<int>((n + alpha - 1) / alpha);
    const int k = static_cast<int>(((n - 1) % alpha) + 1);
    std::vector<int> lengths;
    for (int i = 0; i < alpha - k; ++i) lengths.push_back(c - 1);
    for (int i = 0; i < k; ++i) lengths.push_back(c);
    std::vector<Word> out;
    do {
        for (Symbol start : {Symbol{0}, Symbol{1}}) {
            std::vector<Symbol> symbols;
            symbols.reserve(n);
            for (int len : lengths) {
                const Symbol first = symbols.empty() ? start : symbols.back();
                for (int i = 0; i < len; ++i)
                    symbols.push_back(i % 2 == 0 ? first : Symbol(1 - first));
            }
            out.emplace_back(2, std::move(symbols));
        }
    } while (std::next_permutation(lengths.begin(), lengths.end()));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace fll
