#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fct/bigint.hpp"

namespace fct {

// Trial division stops here no matter how large the factor limit is; larger
// limits only widen the Pollard-rho window.  This bound also decides which
// divisors of a partially factored n are enumerable (see divisors_from).
inline constexpr std::uint32_t kTrialDivisionBound = 65536;

// Primes below kTrialDivisionBound, built once and shared read-only.
const std::vector<std::uint32_t>& small_primes();

struct PartialFactorization {
    BigInt n;
    std::vector<std::pair<BigInt, unsigned>> prime_powers;  // primes <= limit
    BigInt cofactor;  // 1 when fully factored; no factor <= trial bound otherwise
    BigInt limit;

    BigInt smooth_part() const;
    bool fully_factored() const { return cofactor == 1; }
};

// All prime factors <= limit (with exponents) found by trial division up to
// min(limit, kTrialDivisionBound) plus bounded Pollard rho on remaining
// composites <= limit^2; the rest stays in the cofactor.  Deterministic.
PartialFactorization factor_bounded(const BigInt& n, const BigInt& limit);

class DivisorCapOverflow : public std::runtime_error {
  public:
    DivisorCapOverflow()
        : std::runtime_error("divisor enumeration exceeds cap: over-smooth input") {}
};

inline constexpr std::size_t kDivisorCap = std::size_t{1} << 20;

struct ResidueFilter {
    std::uint32_t modulus;
    std::uint32_t residue;
};

// Divisors of n visible through the factored part: every divisor s of the
// smooth part with s <= min(limit, 2^16) is emitted together with its
// complement n/s.  For n below the square of the trial bound this is the
// complete divisor list; beyond it the enumeration reaches the large
// divisors whose complements are small, which is where the solution
// witnesses live (they routinely dwarf the factor limit).  Ascending, no
// duplicates.  Throws DivisorCapOverflow past kDivisorCap.
std::vector<BigInt> divisors_from(const PartialFactorization& pf,
                                  std::optional<ResidueFilter> filter = std::nullopt);

// Miller-Rabin: deterministic base set below 3.3e24, else 64 rounds with
// bases derived deterministically from (n, seed).
bool is_probable_prime(const BigInt& n, std::uint64_t seed = 0);

}  // namespace fct
