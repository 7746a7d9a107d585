#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "rfg/kernels.hpp"

namespace rfg {

using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigInt u128_to_mpz(kernels::u128 v) {
  BigInt hi(std::uint64_t(v >> 64));
  BigInt lo(std::uint64_t(v));
  return (hi << 64) + lo;
}

inline double u128_to_double(kernels::u128 v) {
  return double(std::uint64_t(v >> 64)) * 0x1.0p64 + double(std::uint64_t(v));
}

inline std::string rat_str(const BigRat& q) { return q.get_str(); }

/// floor(t^{4/3}) computed exactly as floor(cbrt(t^4)).
inline BigInt floor_pow_4_3(const BigInt& t) {
  BigInt t4;
  mpz_pow_ui(t4.get_mpz_t(), t.get_mpz_t(), 4);
  BigInt r;
  mpz_root(r.get_mpz_t(), t4.get_mpz_t(), 3);
  return r;
}

}  // namespace rfg
