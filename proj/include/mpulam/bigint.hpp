#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace mpulam {

// Exact arithmetic backing every counting result. The multipermutation
// space n!/(r!)^(n/r) passes 2^64 around n = 21, so counts and bounds are
// arbitrary precision throughout; no floating point enters any reported
// value.
using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt big_factorial(unsigned long n) {
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

inline BigInt big_pow(const BigInt& base, unsigned long exp) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

inline BigInt floor_div(const BigInt& num, const BigInt& den) {
    BigInt out;
    mpz_fdiv_q(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return out;
}

inline BigInt ceil_div(const BigInt& num, const BigInt& den) {
    BigInt out;
    mpz_cdiv_q(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return out;
}

inline std::string to_decimal(const BigInt& v) { return v.get_str(); }

// Reduced "p/q" (plain "p" when the denominator is 1).
inline std::string to_fraction(const Rational& q) {
    Rational reduced = q;
    reduced.canonicalize();
    return reduced.get_str();
}

inline bool fits_u64(const BigInt& v) { return v >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64; }

inline std::uint64_t to_u64(const BigInt& v) {
    BigInt lo = v & BigInt(0xffffffffUL);
    BigInt hi = v >> 32;
    return (static_cast<std::uint64_t>(mpz_get_ui(hi.get_mpz_t())) << 32) |
           static_cast<std::uint64_t>(mpz_get_ui(lo.get_mpz_t()));
}

}  // namespace mpulam
