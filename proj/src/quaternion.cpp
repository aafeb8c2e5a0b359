#include "similitude/quaternion.hpp"

#include <tuple>

namespace similitude {
namespace {

i128 lcm128(i128 a, i128 b) { return mul_checked(a / gcd128(a, b), b); }

i128 content_gcd(const QuadInt& q, i128 g) { return gcd128(gcd128(g, q.a()), q.b()); }

QuadInt div_exact(const QuadInt& q, i128 k) { return QuadInt(q.ring(), q.a() / k, q.b() / k); }

}  // namespace

Scalar::Scalar(QuadInt num, i128 den) : num_(num), den_(den) {
  if (den_ == 0) throw Error(Errc::ZeroElement, "zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  i128 g = content_gcd(num_, den_);
  if (g > 1) {
    num_ = div_exact(num_, g);
    den_ /= g;
  }
}

Scalar operator+(const Scalar& x, const Scalar& y) {
  return Scalar(x.num_ * y.den_ + y.num_ * x.den_, mul_checked(x.den_, y.den_));
}

Scalar operator-(const Scalar& x, const Scalar& y) {
  return Scalar(x.num_ * y.den_ - y.num_ * x.den_, mul_checked(x.den_, y.den_));
}

Scalar operator*(const Scalar& x, const Scalar& y) {
  return Scalar(x.num_ * y.num_, mul_checked(x.den_, y.den_));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(Errc::ZeroElement, "inverse of zero");
  if (ring() == RingId::RationalInt) return Scalar(QuadInt(ring(), den_), num_.a());
  return Scalar(conjugate(num_) * den_, norm(num_));
}

std::string Scalar::to_string() const {
  std::string n = num_.to_string();
  if (den_ == 1) return n;
  bool compound = num_.a() != 0 && num_.b() != 0;
  return (compound ? "(" + n + ")" : n) + "/" + similitude::to_string(den_);
}

Scalar conjugate(const Scalar& x) { return Scalar(conjugate(x.num()), x.den()); }

Scalar field_norm(const Scalar& x) {
  if (x.ring() == RingId::RationalInt) return x;
  return Scalar(QuadInt(RingId::RationalInt, norm(x.num())), mul_checked(x.den(), x.den()));
}

int sign(const Scalar& x) { return sign(x.num()); }

Quat::Quat(RingId ring) : ring_(ring), num_{QuadInt(ring), QuadInt(ring), QuadInt(ring), QuadInt(ring)}, den_(1) {}

Quat::Quat(RingId ring, std::array<QuadInt, 4> num, i128 den) : ring_(ring), num_(num), den_(den) {
  for (const auto& c : num_) {
    if (c.ring() != ring_) throw Error(Errc::RingMismatch, "quaternion coordinate from another ring");
  }
  reduce();
}

Quat::Quat(const std::array<Scalar, 4>& coords) : ring_(coords[0].ring()), num_{}, den_(1) {
  i128 d = 1;
  for (const auto& c : coords) {
    if (c.ring() != ring_) throw Error(Errc::RingMismatch, "quaternion coordinate from another ring");
    d = lcm128(d, c.den());
  }
  for (int k = 0; k < 4; ++k) num_[k] = coords[k].num() * (d / coords[k].den());
  den_ = d;
  reduce();
}

Quat Quat::from_ints(std::array<i128, 4> num, i128 den) {
  const RingId r = RingId::RationalInt;
  return Quat(r, {QuadInt(r, num[0]), QuadInt(r, num[1]), QuadInt(r, num[2]), QuadInt(r, num[3])}, den);
}

Quat Quat::scalar(const Scalar& s) {
  Quat q(s.ring());
  q.num_[0] = s.num();
  q.den_ = s.den();
  return q;
}

Quat Quat::basis(RingId ring, int index) {
  Quat q(ring);
  q.num_[index] = QuadInt(ring, 1);
  return q;
}

void Quat::reduce() {
  if (den_ == 0) throw Error(Errc::ZeroElement, "zero denominator");
  if (den_ < 0) {
    for (auto& c : num_) c = -c;
    den_ = -den_;
  }
  if (is_zero()) {
    den_ = 1;
    return;
  }
  i128 g = den_;
  for (const auto& c : num_) g = content_gcd(c, g);
  if (g > 1) {
    for (auto& c : num_) c = div_exact(c, g);
    den_ /= g;
  }
}

bool Quat::is_zero() const noexcept {
  for (const auto& c : num_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool operator<(const Quat& x, const Quat& y) {
  auto key = [](const Quat& q) {
    return std::tie(q.den_, q.num_[0], q.num_[1], q.num_[2], q.num_[3]);
  };
  return key(x) < key(y);
}

Quat operator+(const Quat& x, const Quat& y) {
  if (x.ring_ != y.ring_) throw Error(Errc::RingMismatch, "quaternions over different fields");
  std::array<QuadInt, 4> n;
  for (int k = 0; k < 4; ++k) n[k] = x.num_[k] * y.den_ + y.num_[k] * x.den_;
  return Quat(x.ring_, n, mul_checked(x.den_, y.den_));
}

Quat operator-(const Quat& x, const Quat& y) { return x + (-y); }

Quat operator*(const Quat& x, const Quat& y) {
  if (x.ring_ != y.ring_) throw Error(Errc::RingMismatch, "quaternions over different fields");
  const auto& [a1, b1, c1, d1] = x.num_;
  const auto& [a2, b2, c2, d2] = y.num_;
  std::array<QuadInt, 4> n{
      a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
      a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
      a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
      a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
  };
  return Quat(x.ring_, n, mul_checked(x.den_, y.den_));
}

Quat operator*(const Quat& x, const Scalar& s) {
  if (x.ring_ != s.ring()) throw Error(Errc::RingMismatch, "scalar from another field");
  std::array<QuadInt, 4> n;
  for (int k = 0; k < 4; ++k) n[k] = x.num_[k] * s.num();
  return Quat(x.ring_, n, mul_checked(x.den_, s.den()));
}

Quat Quat::conj() const { return Quat(ring_, {num_[0], -num_[1], -num_[2], -num_[3]}, den_); }

Quat Quat::inverse() const {
  if (is_zero()) throw Error(Errc::ZeroElement, "inverse of zero quaternion");
  return conj() * reduced_norm(*this).inverse();
}

Quat Quat::galois() const {
  std::array<QuadInt, 4> n;
  for (int k = 0; k < 4; ++k) n[k] = conjugate(num_[k]);
  return Quat(ring_, n, den_);
}

std::string Quat::to_string() const {
  std::string out = "(";
  for (int k = 0; k < 4; ++k) {
    if (k) out += ", ";
    out += num_[k].to_string();
  }
  out += ")";
  if (den_ != 1) out += "/" + similitude::to_string(den_);
  return out;
}

Scalar reduced_norm(const Quat& x) {
  QuadInt s(x.ring());
  for (const auto& c : x.num()) s = s + c * c;
  return Scalar(s, mul_checked(x.den(), x.den()));
}

Matrix4 similarity_matrix(const Quat& q1, const Quat& q2) {
  if (q1.ring() != q2.ring()) throw Error(Errc::RingMismatch, "quaternions over different fields");
  const Scalar a = q1.coord(0), b = q1.coord(1), c = q1.coord(2), d = q1.coord(3);
  const Scalar t = q2.coord(0), u = q2.coord(1), v = q2.coord(2), w = q2.coord(3);
  return Matrix4{{
      {a * t + b * u + c * v + d * w, -(b * t) + a * u + d * v - c * w, -(c * t) - d * u + a * v + b * w,
       -(d * t) + c * u - b * v + a * w},
      {b * t - a * u + d * v - c * w, a * t + b * u - c * v - d * w, -(d * t) + c * u + b * v - a * w,
       c * t + d * u + a * v + b * w},
      {c * t - d * u - a * v + b * w, d * t + c * u + b * v + a * w, a * t - b * u + c * v - d * w,
       -(b * t) - a * u + d * v + c * w},
      {d * t + c * u - b * v - a * w, -(c * t) + d * u - a * v + b * w, b * t + a * u + d * v + c * w,
       a * t - b * u - c * v + d * w},
  }};
}

Scalar determinant(const Matrix4& m) {
  // Gaussian elimination over the field.
  Matrix4 a = m;
  const RingId ring = m[0][0].ring();
  Scalar det = Scalar::integer(ring, 1);
  for (int col = 0; col < 4; ++col) {
    int pivot = -1;
    for (int r = col; r < 4; ++r) {
      if (!a[r][col].is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return Scalar(ring);
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det = det * a[col][col];
    const Scalar inv = a[col][col].inverse();
    for (int r = col + 1; r < 4; ++r) {
      if (a[r][col].is_zero()) continue;
      const Scalar f = a[r][col] * inv;
      for (int c = col; c < 4; ++c) a[r][c] = a[r][c] - f * a[col][c];
    }
  }
  return det;
}

Matrix4 transpose(const Matrix4& m) {
  Matrix4 t = m;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) t[r][c] = m[c][r];
  return t;
}

Matrix4 multiply(const Matrix4& x, const Matrix4& y) {
  Matrix4 out = x;
  const RingId ring = x[0][0].ring();
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      Scalar s(ring);
      for (int k = 0; k < 4; ++k) s = s + x[r][k] * y[k][c];
      out[r][c] = s;
    }
  return out;
}

std::array<Scalar, 4> apply(const Matrix4& m, const std::array<Scalar, 4>& v) {
  const RingId ring = m[0][0].ring();
  std::array<Scalar, 4> out{Scalar(ring), Scalar(ring), Scalar(ring), Scalar(ring)};
  for (int r = 0; r < 4; ++r)
    for (int k = 0; k < 4; ++k) out[r] = out[r] + m[r][k] * v[k];
  return out;
}

}  // namespace similitude
