#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "fct/bigint.hpp"

namespace fct {

/*
 * Ceiling continued fractions.
 *
 * The expansion of a/b uses the Euclidean algorithm with the ceiling
 * function: c = ceil(a/b), r = c*b - a, recurse on (b, r) until r = 0.
 * Convergents follow the negative recurrence
 *
 *     p_i = c_i * p_{i-1} - p_{i-2},   q_i = c_i * q_{i-1} - q_{i-2}
 *
 * seeded with (p_{-1}, q_{-1}) = (1, 0) and q_0 = 1, so that the final
 * convergent equals the (reduced) input fraction.  All coefficients are
 * >= 1, and >= 2 from index 1 on.
 */
struct CeilingCF {
    std::vector<BigInt> coefficients;
    std::vector<BigInt> conv_num;
    std::vector<BigInt> conv_den;

    std::size_t size() const { return coefficients.size(); }
};

// Reciprocal of an expanded value as a sum of unit fractions
// (denominators p0, p0*p1, p1*p2, ...).
struct UnitFractionSum {
    std::vector<BigInt> terms;
    Rational value;  // the exact sum, equal to den/num of the expanded num/den

    bool strictly_increasing() const;
};

class ExpansionOverflow : public std::runtime_error {
  public:
    explicit ExpansionOverflow(std::size_t cap)
        : std::runtime_error("ceiling expansion exceeded " + std::to_string(cap) +
                             " coefficients; input treated as malformed") {}
};

// Cap on coefficient count.  Expansions of p/4k relevant to the solver have
// at most 3 terms; anything longer than this default indicates a bad input
// on solver paths.  Callers exercising general fractions pass a larger cap
// (ceiling expansions of n/(n-1) have n-1 coefficients).
inline constexpr std::size_t kDefaultExpansionCap = 64;

CeilingCF fct_expand(const BigInt& num, const BigInt& den,
                     std::size_t max_coefficients = kDefaultExpansionCap);

UnitFractionSum sum_by_pairs(const CeilingCF& cf);

// Coefficient triple (c0, c1, c2) iff the expansion of p/4k has exactly
// three terms; equivalently r0 | 4k+1 with r0 = c0*4k - p > 1.  Computed
// directly from the inner congruence, no expansion loop.
std::optional<std::array<BigInt, 3>> three_term_check(const BigInt& p, const BigInt& fourk);

// 4/p = 1/x + 1/y for p == 3 (mod 4): x = (p+1)/4, y = p(p+1)/4,
// straight from the two-coefficient expansion of p/(p+1).
std::pair<BigInt, BigInt> two_term_split(const BigInt& p);

}  // namespace fct
