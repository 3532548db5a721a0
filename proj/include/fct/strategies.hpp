#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fct/bigint.hpp"
#include "fct/ceiling_cf.hpp"
#include "fct/factorization.hpp"

namespace fct {

enum class SourceKind { grid, f1, f2, f0, fx };

const char* to_string(SourceKind kind);
std::optional<SourceKind> source_kind_from_string(const std::string& s);

struct SourceLabel {
    SourceKind kind;
    std::uint64_t index;  // modulus m for grid, source i for f1/f2/f0, k_i for fx

    std::string to_string() const;  // "grid.8", "f2.6", ...
    bool operator==(const SourceLabel&) const = default;
};

/*
 * Sieve entries: for c1, c2 == 3 (mod 4) and m = c1*c2 - 1, every prime
 * p == -c1 or -c2 (mod m) has the three-term expansion of p/m with final
 * coefficient c1 resp. c2.  Entries are ordered by (m, c1) and looked up
 * first-match.
 */
struct CongruenceGrid {
    struct Entry {
        std::uint64_t modulus;
        std::array<std::uint64_t, 2> residues;  // (-c1) mod m, (-c2) mod m
        std::uint64_t c1, c2;
    };
    std::vector<Entry> entries;

    std::size_t size() const { return entries.size(); }
};

CongruenceGrid build_grid(std::size_t size_limit);

struct EgyptianTriple {
    BigInt p;
    BigInt fourk;
    BigInt x, y, z;  // ascending
    BigInt k;        // fourk / 4

    // 4xyz == p(yz + xz + xy), the cleared form of 4/p = 1/x + 1/y + 1/z.
    bool verifies() const;
};

struct Solution {
    SourceLabel source;
    BigInt witness_divisor;
    BigInt fourk;
    std::array<BigInt, 3> coefficients;
    EgyptianTriple triple;
    bool used_cofactor = false;
};

struct SolveRecord {
    BigInt p;
    std::optional<Solution> solution;  // empty = FAILURE, a first-class outcome
    std::uint32_t depth = 0;           // sources examined before success (0 = grid)
    std::int64_t elapsed_ns = 0;

    bool solved() const { return solution.has_value(); }
};

struct SolveConfig {
    std::uint32_t depth_m = 96;
    BigInt factor_limit = BigInt(1) << 24;
    std::int64_t fx_max_k = 8;  // negative disables the fx pass
};

// k*p0, k*p0*p1, k*p1*p with k = fourk/4; requires a three-term expansion.
// Verifies the identity exactly before returning.
EgyptianTriple construct_triple(const BigInt& p, const BigInt& fourk);

std::optional<Solution> grid_lookup(const BigInt& p, const CongruenceGrid& grid);
std::optional<Solution> solve_f1(const BigInt& p, const BigInt& limit);
std::optional<Solution> solve_f2(const BigInt& p, std::uint32_t max_depth, const BigInt& limit);
std::optional<Solution> solve_f0(const BigInt& p, std::uint32_t max_sources, const BigInt& limit);
std::optional<Solution> solve_fx(const BigInt& p, std::int64_t max_k, const BigInt& limit);

// Distinct values of ceil(p/4k) over 4 <= 4k <= 2p, ascending.  O(p) walk,
// meant for small p (tests, source-count statistics).
std::vector<std::uint64_t> distinct_sources(const BigInt& p);

// Grid sieve, then source scanning f1 -> consecutive f2 -> dispersed f0
// under a shared depth budget, then fx.  Misses come back as unsolved
// records, never exceptions.  Rejects composite or p != 1 (mod 4) input.
SolveRecord solve(const BigInt& p, const CongruenceGrid& grid, const SolveConfig& config);

// Same, for callers that have already established primality.
SolveRecord solve_unchecked(const BigInt& p, const CongruenceGrid& grid,
                            const SolveConfig& config);

}  // namespace fct
