#include "similitude/quadratic.hpp"

#include "similitude/primes.hpp"

namespace similitude {
namespace {

void require_same(const QuadInt& x, const QuadInt& y) {
  if (x.ring() != y.ring())
    throw Error(Errc::RingMismatch, std::string("ring mismatch: ") + ring_name(x.ring()) + " vs " + ring_name(y.ring()));
}

// sign of p + q*sqrt(d)
int sign_surd(i128 p, i128 q, i128 d) {
  if (p >= 0 && q >= 0) return (p == 0 && q == 0) ? 0 : 1;
  if (p <= 0 && q <= 0) return -1;
  i128 lhs = mul_checked(p, p);
  i128 rhs = mul_checked(mul_checked(q, q), d);
  int cmp = lhs > rhs ? 1 : (lhs < rhs ? -1 : 0);
  return p > 0 ? cmp : -cmp;
}

// Nearest integer to num/den, den > 0, ties rounded up.
i128 round_div(i128 num, i128 den) {
  return floor_div(add_checked(mul_checked(num, 2), den), mul_checked(den, 2));
}

}  // namespace

const char* ring_name(RingId ring) noexcept {
  switch (ring) {
    case RingId::RationalInt: return "Z";
    case RingId::GoldenInt: return "Z[tau]";
    case RingId::Sqrt2Int: return "Z[sqrt2]";
  }
  return "?";
}

const char* prime_class_name(PrimeClass c) noexcept {
  switch (c) {
    case PrimeClass::Ramified: return "Ramified";
    case PrimeClass::Split: return "Split";
    case PrimeClass::Inert: return "Inert";
  }
  return "?";
}

QuadInt::QuadInt(RingId ring, i128 a, i128 b) : ring_(ring), a_(a), b_(b) {
  if (ring == RingId::RationalInt && b != 0)
    throw Error(Errc::InvalidArgument, "rational integers have no omega component");
}

QuadInt QuadInt::omega(RingId ring) {
  if (ring == RingId::RationalInt) throw Error(Errc::UnsupportedRing, "Z has no omega");
  return QuadInt(ring, 0, 1);
}

QuadInt operator+(const QuadInt& x, const QuadInt& y) {
  require_same(x, y);
  return QuadInt(x.ring_, add_checked(x.a_, y.a_), add_checked(x.b_, y.b_));
}

QuadInt operator-(const QuadInt& x, const QuadInt& y) {
  require_same(x, y);
  return QuadInt(x.ring_, sub_checked(x.a_, y.a_), sub_checked(x.b_, y.b_));
}

QuadInt QuadInt::operator-() const { return QuadInt(ring_, sub_checked(0, a_), sub_checked(0, b_)); }

QuadInt operator*(const QuadInt& x, i128 k) {
  return QuadInt(x.ring_, mul_checked(x.a_, k), mul_checked(x.b_, k));
}

QuadInt operator*(const QuadInt& x, const QuadInt& y) {
  require_same(x, y);
  i128 ac = mul_checked(x.a_, y.a_);
  i128 bd = mul_checked(x.b_, y.b_);
  i128 cross = add_checked(mul_checked(x.a_, y.b_), mul_checked(x.b_, y.a_));
  switch (x.ring_) {
    case RingId::RationalInt:
      return QuadInt(x.ring_, ac, 0);
    case RingId::GoldenInt:
      // tau^2 = tau + 1
      return QuadInt(x.ring_, add_checked(ac, bd), add_checked(cross, bd));
    case RingId::Sqrt2Int:
      return QuadInt(x.ring_, add_checked(ac, mul_checked(bd, 2)), cross);
  }
  throw Error(Errc::Internal, "bad ring");
}

std::string QuadInt::to_string() const {
  if (ring_ == RingId::RationalInt || b_ == 0) return similitude::to_string(a_);
  const char* w = ring_ == RingId::GoldenInt ? "t" : "r2";
  std::string out;
  if (a_ != 0) out = similitude::to_string(a_);
  if (b_ < 0) {
    out += "-";
  } else if (a_ != 0) {
    out += "+";
  }
  i128 ab = abs128(b_);
  if (ab != 1) out += similitude::to_string(ab) + "*";
  return out + w;
}

i128 norm(const QuadInt& x) {
  switch (x.ring()) {
    case RingId::RationalInt:
      return x.a();
    case RingId::GoldenInt:
      return sub_checked(add_checked(mul_checked(x.a(), x.a()), mul_checked(x.a(), x.b())), mul_checked(x.b(), x.b()));
    case RingId::Sqrt2Int:
      return sub_checked(mul_checked(x.a(), x.a()), mul_checked(mul_checked(x.b(), x.b()), 2));
  }
  throw Error(Errc::Internal, "bad ring");
}

QuadInt conjugate(const QuadInt& x) {
  switch (x.ring()) {
    case RingId::RationalInt:
      return x;
    case RingId::GoldenInt:
      // tau' = 1 - tau
      return QuadInt(x.ring(), add_checked(x.a(), x.b()), sub_checked(0, x.b()));
    case RingId::Sqrt2Int:
      return QuadInt(x.ring(), x.a(), sub_checked(0, x.b()));
  }
  throw Error(Errc::Internal, "bad ring");
}

int sign(const QuadInt& x) {
  switch (x.ring()) {
    case RingId::RationalInt:
      return x.a() > 0 ? 1 : (x.a() < 0 ? -1 : 0);
    case RingId::GoldenInt:
      // a + b*tau = ((2a + b) + b*sqrt5) / 2
      return sign_surd(add_checked(mul_checked(x.a(), 2), x.b()), x.b(), 5);
    case RingId::Sqrt2Int:
      return sign_surd(x.a(), x.b(), 2);
  }
  throw Error(Errc::Internal, "bad ring");
}

bool is_unit(const QuadInt& x) { return abs128(norm(x)) == 1; }

QuadInt fundamental_unit(RingId ring) {
  switch (ring) {
    case RingId::GoldenInt: return QuadInt(ring, 0, 1);
    case RingId::Sqrt2Int: return QuadInt(ring, 1, 1);
    case RingId::RationalInt: break;
  }
  throw Error(Errc::UnsupportedRing, "Z has no fundamental unit of infinite order");
}

bool divides(const QuadInt& y, const QuadInt& x) {
  require_same(x, y);
  if (y.is_zero()) return x.is_zero();
  if (x.ring() == RingId::RationalInt) return x.a() % y.a() == 0;
  i128 n = norm(y);
  QuadInt t = x * conjugate(y);
  return t.a() % n == 0 && t.b() % n == 0;
}

QuadInt exact_quotient(const QuadInt& x, const QuadInt& y) {
  require_same(x, y);
  if (y.is_zero()) throw Error(Errc::ZeroElement, "division by zero");
  if (x.ring() == RingId::RationalInt) {
    if (x.a() % y.a() != 0) throw Error(Errc::DomainError, x.to_string() + " is not divisible by " + y.to_string());
    return QuadInt(x.ring(), x.a() / y.a(), 0);
  }
  i128 n = norm(y);
  QuadInt t = x * conjugate(y);
  if (t.a() % n != 0 || t.b() % n != 0)
    throw Error(Errc::DomainError, x.to_string() + " is not divisible by " + y.to_string());
  return QuadInt(x.ring(), t.a() / n, t.b() / n);
}

QuadInt euclid_quotient(const QuadInt& x, const QuadInt& y) {
  require_same(x, y);
  if (y.is_zero()) throw Error(Errc::ZeroElement, "division by zero");
  if (x.ring() == RingId::RationalInt) return QuadInt(x.ring(), round_div(x.a(), y.a()), 0);
  i128 n = norm(y);
  QuadInt t = x * conjugate(y);
  if (n < 0) {
    n = -n;
    t = -t;
  }
  return QuadInt(x.ring(), round_div(t.a(), n), round_div(t.b(), n));
}

QuadInt gcd(const QuadInt& x, const QuadInt& y) {
  require_same(x, y);
  QuadInt u = x;
  QuadInt v = y;
  while (!v.is_zero()) {
    QuadInt r = u - euclid_quotient(u, v) * v;
    u = v;
    v = r;
  }
  if (u.is_zero()) return u;
  return canonical_associate(u);
}

PrimeClass prime_class(std::uint64_t p, RingId ring) {
  if (ring == RingId::RationalInt) throw Error(Errc::UnsupportedRing, "prime classes are defined for Z[tau] and Z[sqrt2]");
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (ring == RingId::GoldenInt) {
    if (p == 5) return PrimeClass::Ramified;
    std::uint64_t r = p % 5;
    return (r == 1 || r == 4) ? PrimeClass::Split : PrimeClass::Inert;
  }
  if (p == 2) return PrimeClass::Ramified;
  std::uint64_t r = p % 8;
  return (r == 1 || r == 7) ? PrimeClass::Split : PrimeClass::Inert;
}

bool is_representable_index(std::uint64_t m, RingId ring) {
  if (m == 0) throw Error(Errc::DomainError, "index must be positive");
  if (ring == RingId::RationalInt) return true;
  for (const auto& [p, e] : factorize(m)) {
    if (e % 2 == 1 && prime_class(p, ring) == PrimeClass::Inert) return false;
  }
  return true;
}

QuadInt canonical_associate(const QuadInt& x) {
  if (x.is_zero()) throw Error(Errc::ZeroElement, "zero has no canonical associate");
  QuadInt y = sign(x) < 0 ? -x : x;
  if (x.ring() == RingId::RationalInt) return y;

  const QuadInt eps = fundamental_unit(x.ring());
  const QuadInt eps_inv = -conjugate(eps);  // both units have norm -1
  const QuadInt eps_sq = eps * eps;
  auto abs_conj = [](const QuadInt& v) {
    QuadInt c = conjugate(v);
    return sign(c) < 0 ? -c : c;
  };
  // Each step scales y/|y'| by eps^{+-2}; stop once it lies in [1, eps^2).
  while (sign(y - abs_conj(y)) < 0) y = y * eps;
  while (sign(eps_sq * abs_conj(y) - y) <= 0) y = y * eps_inv;
  return y;
}

}  // namespace similitude
