#pragma once

// Checked 128-bit signed arithmetic. Every operation throws Errc::Overflow
// instead of wrapping.

#include <cstdint>
#include <string>

#include "similitude/error.hpp"

namespace similitude {

using i128 = __int128;

inline i128 add_checked(i128 a, i128 b) {
  i128 r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(Errc::Overflow, "128-bit addition overflow");
  return r;
}

inline i128 sub_checked(i128 a, i128 b) {
  i128 r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(Errc::Overflow, "128-bit subtraction overflow");
  return r;
}

inline i128 mul_checked(i128 a, i128 b) {
  i128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(Errc::Overflow, "128-bit multiplication overflow");
  return r;
}

inline i128 abs128(i128 a) {
  if (a < 0) return sub_checked(0, a);
  return a;
}

inline i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Floor division (rounds toward negative infinity); b must be nonzero.
inline i128 floor_div(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Nonnegative remainder for b > 0.
inline i128 mod_pos(i128 a, i128 b) {
  i128 r = a % b;
  return r < 0 ? r + b : r;
}

inline i128 pow_checked(i128 base, unsigned exp) {
  i128 r = 1;
  for (unsigned k = 0; k < exp; ++k) r = mul_checked(r, base);
  return r;
}

// Largest s with s*s <= n, for n >= 0.
i128 isqrt(i128 n);

std::string to_string(i128 v);

// Narrowing used at API boundaries.
std::int64_t to_int64(i128 v);

}  // namespace similitude
