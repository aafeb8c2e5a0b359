#pragma once

// Exact quaternions over Q, Q(tau) and Q(sqrt2) in the basis 1, i, j, k.

#include <array>
#include <string>

#include "similitude/quadratic.hpp"

namespace similitude {

// Field element num/den with den > 0 and gcd(num.a, num.b, den) = 1.
class Scalar {
 public:
  explicit Scalar(RingId ring = RingId::RationalInt) : num_(ring), den_(1) {}
  Scalar(QuadInt num, i128 den = 1);
  static Scalar integer(RingId ring, i128 a, i128 b = 0) { return Scalar(QuadInt(ring, a, b)); }

  RingId ring() const noexcept { return num_.ring(); }
  const QuadInt& num() const noexcept { return num_; }
  i128 den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_integral() const noexcept { return den_ == 1; }

  friend bool operator==(const Scalar&, const Scalar&) = default;
  friend Scalar operator+(const Scalar& x, const Scalar& y);
  friend Scalar operator-(const Scalar& x, const Scalar& y);
  friend Scalar operator*(const Scalar& x, const Scalar& y);
  friend Scalar operator/(const Scalar& x, const Scalar& y) { return x * y.inverse(); }
  Scalar operator-() const { return Scalar(-num_, den_); }
  Scalar inverse() const;

  std::string to_string() const;

 private:
  QuadInt num_;
  i128 den_;
};

Scalar conjugate(const Scalar& x);
// Field norm N(x) as a rational number.
Scalar field_norm(const Scalar& x);
int sign(const Scalar& x);

// Quaternion with one common positive denominator, always reduced.
class Quat {
 public:
  explicit Quat(RingId ring = RingId::RationalInt);
  Quat(RingId ring, std::array<QuadInt, 4> num, i128 den = 1);
  Quat(const std::array<Scalar, 4>& coords);
  static Quat from_ints(std::array<i128, 4> num, i128 den = 1);
  static Quat scalar(const Scalar& s);
  static Quat basis(RingId ring, int index);  // 1, i, j, k for index 0..3

  RingId ring() const noexcept { return ring_; }
  const std::array<QuadInt, 4>& num() const noexcept { return num_; }
  i128 den() const noexcept { return den_; }
  Scalar coord(int index) const { return Scalar(num_[index], den_); }
  bool is_zero() const noexcept;

  friend bool operator==(const Quat&, const Quat&) = default;
  friend bool operator<(const Quat& x, const Quat& y);

  friend Quat operator+(const Quat& x, const Quat& y);
  friend Quat operator-(const Quat& x, const Quat& y);
  friend Quat operator*(const Quat& x, const Quat& y);
  friend Quat operator*(const Quat& x, const Scalar& s);
  friend Quat operator*(const Scalar& s, const Quat& x) { return x * s; }
  Quat operator-() const { return Quat(ring_, {-num_[0], -num_[1], -num_[2], -num_[3]}, den_); }

  Quat conj() const;
  Quat inverse() const;
  // Coordinatewise Galois conjugation (tau -> 1 - tau, sqrt2 -> -sqrt2).
  Quat galois() const;

  std::string to_string() const;

 private:
  void reduce();

  RingId ring_;
  std::array<QuadInt, 4> num_;
  i128 den_;
};

Scalar reduced_norm(const Quat& x);

inline Quat quat_mul(const Quat& x, const Quat& y) { return x * y; }
inline Quat quat_conj(const Quat& x) { return x.conj(); }

using Matrix4 = std::array<std::array<Scalar, 4>, 4>;

// Matrix of x -> q1 * x * conj(q2) acting on coordinate columns.
Matrix4 similarity_matrix(const Quat& q1, const Quat& q2);

Scalar determinant(const Matrix4& m);
Matrix4 transpose(const Matrix4& m);
Matrix4 multiply(const Matrix4& x, const Matrix4& y);
std::array<Scalar, 4> apply(const Matrix4& m, const std::array<Scalar, 4>& v);

}  // namespace similitude
