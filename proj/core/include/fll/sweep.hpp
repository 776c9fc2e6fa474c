#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fll/rational.hpp"
#include "fll/word.hpp"

namespace fll {

// Which per-word ball-size route the sweep runs: the structural radius-1
// formula, brute-force ball enumeration, or both with mismatch recording.
enum class SweepOracle { formula, enumeration, both };

std::string to_string(SweepOracle oracle);
SweepOracle sweep_oracle_from_string(const std::string& name);

struct SweepOptions {
    // 0 means "use the default": the FLL_WORKERS environment variable if set,
    // otherwise the hardware concurrency.
    unsigned workers = 0;
    // Guards on q^n, overridable by callers who accept the cost.
    std::uint64_t formula_guard = std::uint64_t(1) << 26;
    std::uint64_t enumeration_guard = std::uint64_t(1) << 20;
    // Cap on stored witness/mismatch lists; the counts stay exact.
    std::size_t witness_cap = 64;
};

struct SweepMismatch {
    Word word;
    std::int64_t formula_value = 0;
    std::int64_t oracle_value = 0;
    bool operator==(const SweepMismatch&) const = default;
};

struct SweepSummary {
    unsigned n = 0;
    unsigned q = 0;
    unsigned radius = 0;
    std::uint64_t count = 0;  // q^n
    std::int64_t min_size = 0;
    std::int64_t max_size = 0;
    BigInt sum_size;
    Rational avg_size;
    std::vector<Word> argmin;  // first witnesses in rank order, capped
    std::vector<Word> argmax;
    std::uint64_t argmin_count = 0;  // exact totals
    std::uint64_t argmax_count = 0;
    std::vector<SweepMismatch> mismatches;  // capped like the witnesses
    std::uint64_t mismatch_count = 0;

    bool operator==(const SweepSummary&) const = default;
};

// Visits every word of Z_q^n in mixed-radix rank order, computes its ball
// size with the selected oracle(s) and aggregates min/max/sum with witnesses.
// The index space splits into one contiguous range per worker and the merge
// is an associative fold in range order, so the result is identical for any
// worker count. The formula oracle requires radius 1.
SweepSummary sweep(unsigned n, unsigned q, unsigned radius, SweepOracle oracle,
                   const SweepOptions& options = {});

// Worker count the sweep uses when SweepOptions.workers == 0.
unsigned default_worker_count();

// Serialization. JSON carries every field; CSV carries the summary row
//   n,q,t,count,min,max,sum,avg_num,avg_den,mismatches
// (mismatches as a count), so a CSV round trip restores everything except
// witness and mismatch lists.
extern const char* const kSweepCsvHeader;
std::string sweep_summary_to_json(const SweepSummary& s);
SweepSummary sweep_summary_from_json(const std::string& text);
std::string sweep_summary_to_csv_row(const SweepSummary& s);
std::string sweep_summary_to_csv(const SweepSummary& s);  // header + row
SweepSummary sweep_summary_from_csv(const std::string& text);

// Field-wise equality on what the CSV row carries.
bool csv_fields_equal(const SweepSummary& a, const SweepSummary& b);

}  // namespace fll
