#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "fct/bigint.hpp"
#include "fct/strategies.hpp"

namespace fct {

enum class OutputFormat { csv, json, text };
std::optional<OutputFormat> output_format_from_string(const std::string& s);

struct BatchConfig {
    BigInt range_start = 2;
    std::uint64_t count = 1;
    std::uint32_t depth_m = 96;
    BigInt factor_limit = BigInt(1) << 24;
    std::size_t grid_size = 1026;   // 0 disables the sieve
    bool mordell_only = true;
    std::int64_t fx_max_k = 8;      // negative disables fx
    std::uint32_t worker_count = 1;
    OutputFormat format = OutputFormat::text;
    std::uint64_t seed = 1;
    bool omit_timing = false;       // zero per-record timing in emitted reports
};

struct BatchTiming {
    std::int64_t total_ns = 0;
    double median_per_prime_ns = 0.0;
    double median_out_of_sieve_ns = 0.0;  // 0 when every prime was sieve-resolved
};

struct BatchReport {
    std::vector<SolveRecord> records;  // in prime order
    std::uint64_t total_primes = 0;
    std::map<std::string, std::uint64_t> per_strategy_counts;
    std::map<std::uint32_t, std::uint64_t> depth_histogram;
    std::uint32_t max_depth_used = 0;
    std::vector<BigInt> failures;
    double sieve_hit_rate = 0.0;
    BatchTiming timing;
};

// p mod 840 in {1, 11^2, 13^2, 17^2, 19^2, 23^2}; residue test only,
// primality is a separate concern.
bool mordell_filter(const BigInt& p);

// Smallest prime > after in the filtered residue classes (the six Mordell
// classes mod 840, or p == 1 mod 4 when the filter is off).
BigInt next_candidate_prime(const BigInt& after, bool mordell_only, std::uint64_t seed = 1);

// Generates `count` consecutive filtered primes from range_start and solves
// each.  Results are merged in prime order, so worker scheduling cannot
// change the report.  An unverifiable triple aborts (logic_error); per-prime
// misses are recorded, not fatal.
BatchReport run_batch(const BatchConfig& config);

void emit_report(const BatchReport& report, OutputFormat format, std::ostream& out,
                 bool omit_timing = false);

// Inverse of the JSON emission, for round-trip checks.
BatchReport parse_json_report(std::istream& in);

struct CsvVerification {
    std::uint64_t rows = 0;
    std::uint64_t verified = 0;
    std::uint64_t failure_rows = 0;
    std::vector<std::string> errors;

    bool ok() const { return errors.empty(); }
};

// Re-verifies every solved row of a previously emitted CSV in exact
// arithmetic.
CsvVerification verify_csv(std::istream& in);

}  // namespace fct
