#include "fll/metric.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

#include "fll/combinatorics.hpp"
#include "fll/errors.hpp"

namespace fll {

namespace {

void check_same_alphabet(const Word& x, const Word& y, const char* op) {
    if (x.q() != y.q())
        throw std::invalid_argument(std::string(op) + ": alphabet mismatch (" +
                                    std::to_string(x.q()) + " vs " + std::to_string(y.q()) + ")");
}

// Two-row LCS kernel over raw symbol spans. Rows live on the stack for the
// common small case so the distance-filter loops do not allocate per word.
int lcs_span(const Symbol* x, std::size_t n, const Symbol* y, std::size_t m) {
    if (n == 0 || m == 0) return 0;
    std::array<int, 65> stack_prev{}, stack_cur{};
    std::vector<int> heap_prev, heap_cur;
    int* prev = stack_prev.data();
    int* cur = stack_cur.data();
    if (m + 1 > stack_prev.size()) {
        heap_prev.assign(m + 1, 0);
        heap_cur.assign(m + 1, 0);
        prev = heap_prev.data();
        cur = heap_cur.data();
    }
    for (std::size_t i = 1; i <= n; ++i) {
        cur[0] = 0;
        const Symbol xi = x[i - 1];
        for (std::size_t j = 1; j <= m; ++j)
            cur[j] = (xi == y[j - 1]) ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
        std::swap(prev, cur);
    }
    return prev[m];
}

constexpr std::uint64_t kFilterLimit = std::uint64_t(1) << 24;

}  // namespace

int lcs_length(const Word& x, const Word& y) {
    check_same_alphabet(x, y, "lcs_length");
    return lcs_span(x.symbols().data(), x.size(), y.symbols().data(), y.size());
}

int fll_distance(const Word& x, const Word& y) {
    check_same_alphabet(x, y, "fll_distance");
    if (x.size() != y.size())
        throw std::invalid_argument("fll_distance: words must have equal length");
    return static_cast<int>(x.size()) - lcs_length(x, y);
}

int levenshtein_distance(const Word& x, const Word& y) {
    check_same_alphabet(x, y, "levenshtein_distance");
    return static_cast<int>(x.size() + y.size()) - 2 * lcs_length(x, y);
}

int hamming_distance(const Word& x, const Word& y) {
    check_same_alphabet(x, y, "hamming_distance");
    if (x.size() != y.size())
        throw std::invalid_argument("hamming_distance: words must have equal length");
    int d = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != y[i]) ++d;
    return d;
}

std::uint64_t hamming_ball_size(unsigned n, unsigned q, unsigned t) {
    if (q < 2) throw std::domain_error("hamming_ball_size: alphabet size must be at least 2");
    if (t > n) throw std::domain_error("hamming_ball_size: radius exceeds length");
    std::uint64_t total = 0;
    std::uint64_t qm1_pow = 1;
    for (unsigned i = 0; i <= t; ++i) {
        total += binomial(n, i) * qm1_pow;
        qm1_pow *= q - 1;
    }
    return total;
}

std::set<Word> deletion_sphere(const Word& w, unsigned t) {
    if (t > w.size()) throw std::domain_error("deletion_sphere: more deletions than symbols");
    std::set<Word> level{w};
    for (unsigned step = 0; step < t; ++step) {
        std::set<Word> next;
        for (const Word& u : level) {
            std::vector<Symbol> buf(u.symbols());
            for (std::size_t i = 0; i < buf.size(); ++i) {
                Symbol removed = buf[i];
                buf.erase(buf.begin() + i);
                next.insert(Word(u.q(), buf));
                buf.insert(buf.begin() + i, removed);
            }
        }
        level = std::move(next);
    }
    return level;
}

std::set<Word> insertion_sphere(const Word& w, unsigned t) {
    std::set<Word> level{w};
    for (unsigned step = 0; step < t; ++step) {
        std::set<Word> next;
        for (const Word& u : level) {
            std::vector<Symbol> buf(u.symbols());
            for (std::size_t i = 0; i <= buf.size(); ++i) {
                buf.insert(buf.begin() + i, 0);
                for (unsigned s = 0; s < u.q(); ++s) {
                    buf[i] = static_cast<Symbol>(s);
                    next.insert(Word(u.q(), buf));
                }
                buf.erase(buf.begin() + i);
            }
        }
        level = std::move(next);
    }
    return level;
}

std::uint64_t insertion_sphere_size(unsigned n, unsigned q, unsigned t) {
    if (q < 2) throw std::domain_error("insertion_sphere_size: alphabet size must be at least 2");
    std::uint64_t total = 0;
    std::uint64_t qm1_pow = 1;
    for (unsigned i = 0; i <= t; ++i) {
        total += binomial(n + t, i) * qm1_pow;
        qm1_pow *= q - 1;
    }
    return total;
}

std::uint64_t max_deletion_sphere_size(unsigned n, unsigned q, unsigned t) {
    if (q < 1) throw std::domain_error("max_deletion_sphere_size: alphabet size must be positive");
    if (t > n) throw std::domain_error("max_deletion_sphere_size: more deletions than symbols");
    if (t == 0 || q == 1) return 1;
    std::uint64_t total = 0;
    for (unsigned i = 0; i <= t; ++i)
        total += binomial(n - t, i) * max_deletion_sphere_size(t, q - 1, t - i);
    return total;
}

std::uint64_t binary_max_deletion_sphere_closed(unsigned n, unsigned t) {
    if (t > n)
        throw std::domain_error("binary_max_deletion_sphere_closed: more deletions than symbols");
    std::uint64_t total = 0;
    for (unsigned i = 0; i <= t; ++i) total += binomial(n - t, i);
    return total;
}

std::pair<std::uint64_t, std::uint64_t> deletion_sphere_bounds(const Word& w, unsigned t) {
    const unsigned rho = static_cast<unsigned>(runs(w));
    if (t > rho) throw std::domain_error("deletion_sphere_bounds: radius exceeds run count");
    std::uint64_t lower = 0;
    for (unsigned i = 0; i <= t; ++i) lower += binomial(rho - t, i);
    return {lower, binomial(rho + t - 1, t)};
}

BallReport fll_ball_by_filter(const Word& w, unsigned t, bool keep_members) {
    if (t > w.size()) throw std::domain_error("fll_ball: radius exceeds length");
    const unsigned n = static_cast<unsigned>(w.size());
    const std::uint64_t space = upow_capped(w.q(), n, kFilterLimit);
    if (space == 0)
        throw resource_limit_error("fll_ball_by_filter: q^n exceeds the 2^24 filter guard");
    BallReport report;
    report.center = w;
    report.radius = t;
    if (keep_members) report.members.emplace();
    std::vector<Symbol> digits(n, 0);
    const int threshold = static_cast<int>(n - t);
    const Symbol* c = w.symbols().data();
    for (std::uint64_t index = 0; index < space; ++index) {
        if (lcs_span(c, n, digits.data(), n) >= threshold) {
            ++report.enumerated_size;
            if (keep_members) report.members->emplace_back(w.q(), digits);
        }
        for (std::size_t pos = n; pos-- > 0;) {  // odometer increment
            if (++digits[pos] < w.q()) break;
            digits[pos] = 0;
        }
    }
    return report;
}

BallReport fll_ball_by_composition(const Word& w, unsigned t, bool keep_members) {
    if (t > w.size()) throw std::domain_error("fll_ball: radius exceeds length");
    std::set<Word> members{w};
    for (unsigned tp = 1; tp <= t; ++tp)
        for (const Word& d : deletion_sphere(w, tp)) {
            auto filled = insertion_sphere(d, tp);
            members.insert(filled.begin(), filled.end());
        }
    BallReport report;
    report.center = w;
    report.radius = t;
    report.enumerated_size = static_cast<std::int64_t>(members.size());
    if (keep_members) report.members = std::vector<Word>(members.begin(), members.end());
    return report;
}

BallReport fll_ball(const Word& w, unsigned t, bool keep_members) {
    if (t > w.size()) throw std::domain_error("fll_ball: radius exceeds length");
    const std::uint64_t space = upow_capped(w.q(), static_cast<unsigned>(w.size()), kFilterLimit);
    return space != 0 ? fll_ball_by_filter(w, t, keep_members)
                      : fll_ball_by_composition(w, t, keep_members);
}

std::set<Word> variable_length_ball(const Word& w, unsigned t) {
    if (t != 1 && t != 2)
        throw std::domain_error("variable_length_ball: only radii 1 and 2 are supported");
    // t=1: D_1 u I_1 u {w}; t=2 additionally D_2, I_2 and the radius-1
    // fixed-length ball. Components of different lengths are disjoint.
    std::set<Word> out{w};
    for (unsigned tp = 1; tp <= t; ++tp) {
        if (tp <= w.size()) {
            auto ds = deletion_sphere(w, tp);
            out.insert(ds.begin(), ds.end());
        }
        auto is = insertion_sphere(w, tp);
        out.insert(is.begin(), is.end());
    }
    if (t == 2 && !w.empty()) {
        auto ball = fll_ball(w, 1, true);
        out.insert(ball.members->begin(), ball.members->end());
    }
    return out;
}

std::set<Word> deletion_insertion_ball(const Word& w, unsigned t1, unsigned t2) {
    if (t1 > w.size())
        throw std::domain_error("deletion_insertion_ball: more deletions than symbols");
    std::set<Word> out;
    for (const Word& d : deletion_sphere(w, t1)) {
        auto filled = insertion_sphere(d, t2);
        out.insert(filled.begin(), filled.end());
    }
    return out;
}

}  // namespace fll
