#include "fll/sweep.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <limits>
#include <stdexcept>
#include <thread>
#include <utility>

#include "fll/combinatorics.hpp"
#include "fll/errors.hpp"
#include "fll/extremal.hpp"
#include "fll/metric.hpp"

namespace fll {

std::string to_string(SweepOracle oracle) {
    switch (oracle) {
        case SweepOracle::formula: return "formula";
        case SweepOracle::enumeration: return "enumeration";
        case SweepOracle::both: return "both";
    }
    throw std::logic_error("to_string: bad SweepOracle value");
}

SweepOracle sweep_oracle_from_string(const std::string& name) {
    if (name == "formula") return SweepOracle::formula;
    if (name == "enumeration" || name == "enum") return SweepOracle::enumeration;
    if (name == "both") return SweepOracle::both;
    throw std::invalid_argument("unknown sweep oracle '" + name +
                                "' (expected formula, enumeration or both)");
}

unsigned default_worker_count() {
    if (const char* env = std::getenv("FLL_WORKERS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1 && v <= 4096)
            return static_cast<unsigned>(v);
        // Ignore garbage rather than failing a sweep over an env typo.
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

namespace {

// Aggregation state for one contiguous index range. Mergeable in range order;
// the identity element (min over empty range) uses the int64 extremes.
struct Partial {
    std::int64_t min = std::numeric_limits<std::int64_t>::max();
    std::int64_t max = std::numeric_limits<std::int64_t>::min();
    std::uint64_t min_count = 0;
    std::uint64_t max_count = 0;
    std::vector<Word> min_witnesses;
    std::vector<Word> max_witnesses;
    unsigned __int128 sum = 0;
    std::vector<SweepMismatch> mismatches;
    std::uint64_t mismatch_count = 0;
};

void append_capped(std::vector<Word>& dst, std::vector<Word>&& src, std::size_t cap) {
    for (Word& w : src) {
        if (dst.size() >= cap) break;
        dst.push_back(std::move(w));
    }
}

// a covers the earlier index range; fold b into it. Witness lists keep the
// first `cap` hits in global rank order because ranges are merged in order.
void merge_into(Partial& a, Partial&& b, std::size_t cap) {
    a.sum += b.sum;
    if (b.min < a.min) {
        a.min = b.min;
        a.min_count = b.min_count;
        a.min_witnesses = std::move(b.min_witnesses);
    } else if (b.min == a.min && b.min_count > 0) {
        a.min_count += b.min_count;
        append_capped(a.min_witnesses, std::move(b.min_witnesses), cap);
    }
    if (b.max > a.max) {
        a.max = b.max;
        a.max_count = b.max_count;
        a.max_witnesses = std::move(b.max_witnesses);
    } else if (b.max == a.max && b.max_count > 0) {
        a.max_count += b.max_count;
        append_capped(a.max_witnesses, std::move(b.max_witnesses), cap);
    }
    a.mismatch_count += b.mismatch_count;
    for (SweepMismatch& m : b.mismatches) {
        if (a.mismatches.size() >= cap) break;
        a.mismatches.push_back(std::move(m));
    }
}

void sweep_range(unsigned n, unsigned q, unsigned radius, SweepOracle oracle,
                 std::uint64_t lo, std::uint64_t hi, std::size_t cap, Partial& out) {
    std::vector<Symbol> digits(n);
    std::uint64_t rem = lo;
    for (std::size_t i = n; i-- > 0;) {
        digits[i] = static_cast<Symbol>(rem % q);
        rem /= q;
    }
    for (std::uint64_t index = lo; index < hi; ++index) {
        std::int64_t size = 0;
        if (oracle == SweepOracle::formula) {
            size = l1_size_formula(digits.data(), n, q);
        } else if (oracle == SweepOracle::enumeration) {
            size = fll_ball(Word(q, digits), radius, false).enumerated_size;
        } else {
            const std::int64_t formula_value = l1_size_formula(digits.data(), n, q);
            const std::int64_t oracle_value =
                fll_ball(Word(q, digits), radius, false).enumerated_size;
            if (formula_value != oracle_value) {
                ++out.mismatch_count;
                if (out.mismatches.size() < cap)
                    out.mismatches.push_back({Word(q, digits), formula_value, oracle_value});
            }
            // The enumerated value is authoritative when the routes disagree.
            size = oracle_value;
        }
        out.sum += static_cast<unsigned __int128>(size);
        if (size < out.min) {
            out.min = size;
            out.min_count = 0;
            out.min_witnesses.clear();
        }
        if (size == out.min) {
            ++out.min_count;
            if (out.min_witnesses.size() < cap) out.min_witnesses.emplace_back(q, digits);
        }
        if (size > out.max) {
            out.max = size;
            out.max_count = 0;
            out.max_witnesses.clear();
        }
        if (size == out.max) {
            ++out.max_count;
            if (out.max_witnesses.size() < cap) out.max_witnesses.emplace_back(q, digits);
        }
        // Odometer step to the next word in rank order.
        for (std::size_t i = n; i-- > 0;) {
            if (++digits[i] < q) break;
            digits[i] = 0;
        }
    }
}

BigInt int128_to_bigint(unsigned __int128 v) {
    const std::uint64_t hi = static_cast<std::uint64_t>(v >> 64);
    const std::uint64_t lo = static_cast<std::uint64_t>(v);
    BigInt out = hi;
    out <<= 64;
    out += lo;
    return out;
}

}  // namespace

SweepSummary sweep(unsigned n, unsigned q, unsigned radius, SweepOracle oracle,
                   const SweepOptions& options) {
    if (q < 2) throw std::domain_error("sweep: alphabet size must be at least 2");
    if (n == 0) throw std::domain_error("sweep: word length must be positive");
    if (radius > n) throw std::domain_error("sweep: radius cannot exceed the word length");
    if (oracle != SweepOracle::enumeration && radius != 1)
        throw std::domain_error("sweep: the formula oracle handles radius 1 only; "
                                "use the enumeration oracle for other radii");
    const std::uint64_t guard = oracle == SweepOracle::formula ? options.formula_guard
                                                               : options.enumeration_guard;
    const std::uint64_t space = upow_capped(q, n, guard);
    if (space == 0)
        throw resource_limit_error(
            "sweep: q^n = " + std::to_string(q) + "^" + std::to_string(n) +
            " exceeds the " +
            (oracle == SweepOracle::formula ? std::string("formula_guard")
                                            : std::string("enumeration_guard")) +
            " of " + std::to_string(guard) + "; raise the guard in SweepOptions to proceed");

    unsigned workers = options.workers > 0 ? options.workers : default_worker_count();
    workers = static_cast<unsigned>(
        std::min<std::uint64_t>(workers, std::max<std::uint64_t>(space, 1)));

    std::vector<Partial> partials(workers);
    if (workers == 1) {
        sweep_range(n, q, radius, oracle, 0, space, options.witness_cap, partials[0]);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(workers);
        pool.reserve(workers);
        const std::uint64_t chunk = space / workers;
        const std::uint64_t extra = space % workers;
        std::uint64_t lo = 0;
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t hi = lo + chunk + (w < extra ? 1 : 0);
            pool.emplace_back([&, w, lo, hi] {
                try {
                    sweep_range(n, q, radius, oracle, lo, hi, options.witness_cap,
                                partials[w]);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
            lo = hi;
        }
        for (std::thread& t : pool) t.join();
        for (const std::exception_ptr& e : errors)
            if (e) std::rethrow_exception(e);
    }

    Partial total = std::move(partials[0]);
    for (unsigned w = 1; w < workers; ++w)
        merge_into(total, std::move(partials[w]), options.witness_cap);

    SweepSummary s;
    s.n = n;
    s.q = q;
    s.radius = radius;
    s.count = space;
    s.min_size = total.min;
    s.max_size = total.max;
    s.sum_size = int128_to_bigint(total.sum);
    s.avg_size = Rational(s.sum_size, BigInt(space));
    s.argmin = std::move(total.min_witnesses);
    s.argmax = std::move(total.max_witnesses);
    s.argmin_count = total.min_count;
    s.argmax_count = total.max_count;
    s.mismatches = std::move(total.mismatches);
    s.mismatch_count = total.mismatch_count;
    return s;
}

}  // namespace fll
