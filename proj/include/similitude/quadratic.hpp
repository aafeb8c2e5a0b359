#pragma once

// Exact arithmetic in Z, Z[tau] (tau = (1+sqrt5)/2) and Z[sqrt2].

#include <cstdint>
#include <string>

#include "similitude/int128.hpp"

namespace similitude {

enum class RingId { RationalInt, GoldenInt, Sqrt2Int };

enum class PrimeClass { Ramified, Split, Inert };

const char* ring_name(RingId ring) noexcept;
const char* prime_class_name(PrimeClass c) noexcept;

// a + b*omega, omega = tau for GoldenInt, sqrt2 for Sqrt2Int, absent for
// RationalInt (b is always 0 there).
class QuadInt {
 public:
  QuadInt() : QuadInt(RingId::RationalInt) {}
  explicit QuadInt(RingId ring, i128 a = 0, i128 b = 0);

  static QuadInt omega(RingId ring);

  RingId ring() const noexcept { return ring_; }
  i128 a() const noexcept { return a_; }
  i128 b() const noexcept { return b_; }
  bool is_zero() const noexcept { return a_ == 0 && b_ == 0; }

  friend bool operator==(const QuadInt&, const QuadInt&) = default;

  friend QuadInt operator+(const QuadInt& x, const QuadInt& y);
  friend QuadInt operator-(const QuadInt& x, const QuadInt& y);
  friend QuadInt operator*(const QuadInt& x, const QuadInt& y);
  friend QuadInt operator*(const QuadInt& x, i128 k);
  friend QuadInt operator*(i128 k, const QuadInt& x) { return x * k; }
  QuadInt operator-() const;

  // Lexicographic on (a, b); only meaningful inside one ring.
  friend bool operator<(const QuadInt& x, const QuadInt& y) {
    return x.a_ != y.a_ ? x.a_ < y.a_ : x.b_ < y.b_;
  }

  std::string to_string() const;

 private:
  RingId ring_;
  i128 a_;
  i128 b_;
};

// Signed field norm x * x'.
i128 norm(const QuadInt& x);

QuadInt conjugate(const QuadInt& x);

// Exact sign of x under the identity real embedding (tau > 0, sqrt2 > 0).
int sign(const QuadInt& x);

bool is_unit(const QuadInt& x);

// tau for GoldenInt, 1+sqrt2 for Sqrt2Int.
QuadInt fundamental_unit(RingId ring);

// x / y when the quotient lies in the ring; empty otherwise.
bool divides(const QuadInt& y, const QuadInt& x);
QuadInt exact_quotient(const QuadInt& x, const QuadInt& y);

// Euclidean division x = q*y + r with |N(r)| < |N(y)|.
QuadInt euclid_quotient(const QuadInt& x, const QuadInt& y);

// Canonical generator of the ideal (x, y); zero only when both are zero.
QuadInt gcd(const QuadInt& x, const QuadInt& y);

PrimeClass prime_class(std::uint64_t p, RingId ring);

bool is_representable_index(std::uint64_t m, RingId ring);

// The unique associate y of x with y > 0 and 1 <= y/|y'| < eps^2 (eps the
// fundamental unit); |x| for RationalInt. Units map to 1.
QuadInt canonical_associate(const QuadInt& x);

}  // namespace similitude
