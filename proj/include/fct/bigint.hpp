#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fct {

// Exact arbitrary-precision arithmetic for everything the solver touches.
// Floating point is confined to the failure model (model.hpp).
using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt ceil_div(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline BigInt floor_sqrt(const BigInt& n) {
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

// n mod m for a word-sized modulus, without allocating.
inline std::uint64_t mod_u64(const BigInt& n, std::uint64_t m) {
    return mpz_fdiv_ui(n.get_mpz_t(), m);
}

inline bool fits_u64(const BigInt& n) {
    return mpz_fits_ulong_p(n.get_mpz_t()) != 0;
}

inline std::uint64_t to_u64(const BigInt& n) { return mpz_get_ui(n.get_mpz_t()); }

inline BigInt parse_bigint(const std::string& text) {
    BigInt v;
    if (text.empty() || mpz_set_str(v.get_mpz_t(), text.c_str(), 10) != 0) {
        throw std::invalid_argument("not a decimal integer: '" + text + "'");
    }
    return v;
}

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace fct
