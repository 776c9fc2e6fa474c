#pragma once

#include <cstdint>
#include <stdexcept>

namespace fll {

// C(n, k) in uint64, throwing on overflow rather than wrapping. Sizes at desk
// scale stay far below 2^64; hitting the guard means the caller asked for
// something outside the supported range.
constexpr std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // result * (n-k+i) / i is exact at every step (i consecutive factors).
        std::uint64_t factor = n - k + i;
        if (result > UINT64_MAX / factor)
            throw std::overflow_error("binomial: value exceeds 64 bits");
        result = result * factor / i;
    }
    return result;
}

// q^n in uint64, throwing on overflow.
constexpr std::uint64_t upow(std::uint64_t q, unsigned n) {
    std::uint64_t result = 1;
    for (unsigned i = 0; i < n; ++i) {
        if (result > UINT64_MAX / q) throw std::overflow_error("upow: value exceeds 64 bits");
        result *= q;
    }
    return result;
}

// q^n if it is at most cap, otherwise 0. Used by resource guards that only
// need "is the space at most this big" without risking overflow.
constexpr std::uint64_t upow_capped(std::uint64_t q, unsigned n, std::uint64_t cap) {
    std::uint64_t result = 1;
    for (unsigned i = 0; i < n; ++i) {
        if (result > cap / q) return 0;
        result *= q;
    }
    return result;
}

}  // namespace fll
