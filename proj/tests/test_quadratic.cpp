#include <doctest.h>

#include <random>

#include "similitude/error.hpp"
#include "similitude/primes.hpp"
#include "similitude/quadratic.hpp"

using namespace similitude;

namespace {

const RingId G = RingId::GoldenInt;
const RingId S = RingId::Sqrt2Int;
const RingId Z = RingId::RationalInt;

QuadInt random_element(std::mt19937_64& rng, RingId ring, int range) {
  std::uniform_int_distribution<int> d(-range, range);
  return QuadInt(ring, d(rng), ring == Z ? 0 : d(rng));
}

}  // namespace

TEST_CASE("norms") {
  CHECK(norm(QuadInt(G, 0, 1)) == -1);
  CHECK(norm(QuadInt(S, 1, 1)) == -1);
  CHECK(norm(QuadInt(S, 2, 1)) == 2);
  CHECK(norm(QuadInt(G, 3, 2)) == 9 + 6 - 4);
  CHECK(norm(QuadInt(Z, -7)) == -7);
}

TEST_CASE("conjugation") {
  CHECK(conjugate(QuadInt(G, 0, 1)) == QuadInt(G, 1, -1));
  CHECK(conjugate(QuadInt(Z, 3)) == QuadInt(Z, 3));
  CHECK(conjugate(QuadInt(S, 2, -3)) == QuadInt(S, 2, 3));
}

TEST_CASE("norm is multiplicative and conjugation is a homomorphism") {
  std::mt19937_64 rng(20240601);
  for (RingId ring : {Z, G, S}) {
    for (int n = 0; n < 10'000; ++n) {
      const QuadInt x = random_element(rng, ring, 1000);
      const QuadInt y = random_element(rng, ring, 1000);
      REQUIRE(norm(x * y) == norm(x) * norm(y));
      REQUIRE(conjugate(x * y) == conjugate(x) * conjugate(y));
      REQUIRE(conjugate(conjugate(x)) == x);
    }
  }
}

TEST_CASE("units of Z[tau] are +-tau^k") {
  QuadInt p(G, 1, 0);
  const QuadInt tau(G, 0, 1);
  const QuadInt tau_inv = -conjugate(tau);
  QuadInt q(G, 1, 0);
  for (int k = 0; k <= 10; ++k) {
    CHECK(is_unit(p));
    CHECK(is_unit(-q));
    CHECK(canonical_associate(p) == QuadInt(G, 1));
    CHECK(canonical_associate(-q) == QuadInt(G, 1));
    p = p * tau;
    q = q * tau_inv;
  }
  CHECK_FALSE(is_unit(QuadInt(G, 2, 0)));
  CHECK_FALSE(is_unit(QuadInt(S, 2, 1)));
  // every element of unit norm in a box is a power of tau up to sign
  for (int a = -30; a <= 30; ++a) {
    for (int b = -30; b <= 30; ++b) {
      const QuadInt x(G, a, b);
      if (!is_unit(x)) continue;
      QuadInt y = sign(x) < 0 ? -x : x;
      int steps = 0;
      while (!(y == QuadInt(G, 1)) && steps < 40) {
        y = sign(y - QuadInt(G, 1)) > 0 ? y * tau_inv : y * tau;
        ++steps;
      }
      CHECK(y == QuadInt(G, 1));
    }
  }
}

TEST_CASE("prime classes") {
  CHECK(prime_class(11, G) == PrimeClass::Split);
  CHECK(prime_class(5, G) == PrimeClass::Ramified);
  CHECK(prime_class(2, G) == PrimeClass::Inert);
  CHECK(prime_class(7, S) == PrimeClass::Split);
  CHECK(prime_class(2, S) == PrimeClass::Ramified);
  CHECK(prime_class(3, S) == PrimeClass::Inert);
  CHECK_THROWS_AS(prime_class(9, G), Error);
  try {
    prime_class(9, G);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotPrime);
  }
  try {
    prime_class(7, Z);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnsupportedRing);
  }
}

TEST_CASE("split and inert primes have density one half each") {
  for (RingId ring : {G, S}) {
    int split = 0, inert = 0;
    for (std::uint64_t p = 3; p < 1000; ++p) {
      if (!is_prime(p) || prime_class(p, ring) == PrimeClass::Ramified) continue;
      (prime_class(p, ring) == PrimeClass::Split ? split : inert)++;
    }
    const double frac = static_cast<double>(split) / (split + inert);
    CHECK(frac > 0.45);
    CHECK(frac < 0.55);
  }
}

TEST_CASE("split primes are norms, inert primes are not") {
  // brute force over a box that is large enough for p < 200
  for (RingId ring : {G, S}) {
    for (std::uint64_t p = 2; p < 200; ++p) {
      if (!is_prime(p)) continue;
      bool found = false;
      for (int a = -40; a <= 40 && !found; ++a)
        for (int b = -40; b <= 40 && !found; ++b) {
          const i128 n = norm(QuadInt(ring, a, b));
          found = n == static_cast<i128>(p) || n == -static_cast<i128>(p);
        }
      CHECK(found == (prime_class(p, ring) != PrimeClass::Inert));
    }
  }
}

TEST_CASE("representable indices") {
  CHECK_FALSE(is_representable_index(3, G));
  CHECK(is_representable_index(9, G));
  CHECK(is_representable_index(7, S));
  CHECK_FALSE(is_representable_index(3, S));
  CHECK(is_representable_index(6, Z));
}

TEST_CASE("canonical associates") {
  CHECK(canonical_associate(QuadInt(Z, -3)) == QuadInt(Z, 3));
  CHECK(canonical_associate(QuadInt(G, 1, 1)) == QuadInt(G, 1));
  CHECK(canonical_associate(QuadInt(G, -1, 2)) == canonical_associate(QuadInt(G, 1, -2)));
  CHECK_THROWS_AS(canonical_associate(QuadInt(G)), Error);

  std::mt19937_64 rng(7);
  for (RingId ring : {G, S}) {
    const QuadInt eps = fundamental_unit(ring);
    for (int n = 0; n < 2000; ++n) {
      const QuadInt x = random_element(rng, ring, 200);
      if (x.is_zero()) continue;
      const QuadInt c = canonical_associate(x);
      REQUIRE(canonical_associate(c) == c);
      REQUIRE(sign(c) > 0);
      REQUIRE(divides(c, x));
      REQUIRE(is_unit(exact_quotient(x, c)));
      // associates share the canonical form
      const QuadInt y = n % 2 ? -(x * eps * eps * eps) : x * conjugate(eps);
      REQUIRE(canonical_associate(y) == c);
    }
  }
}

TEST_CASE("gcd and Euclidean division") {
  std::mt19937_64 rng(11);
  for (RingId ring : {Z, G, S}) {
    for (int n = 0; n < 2000; ++n) {
      const QuadInt x = random_element(rng, ring, 500);
      const QuadInt y = random_element(rng, ring, 500);
      if (y.is_zero()) continue;
      const QuadInt q = euclid_quotient(x, y);
      const QuadInt r = x - q * y;
      REQUIRE(abs128(norm(r)) < abs128(norm(y)));
      const QuadInt g = gcd(x, y);
      REQUIRE(divides(g, x));
      REQUIRE(divides(g, y));
      REQUIRE(canonical_associate(g) == g);
      const QuadInt z = random_element(rng, ring, 50);
      if (z.is_zero()) continue;
      REQUIRE(divides(g * z, gcd(x * z, y * z)));
      REQUIRE(divides(gcd(x * z, y * z), g * z));
    }
  }
}

TEST_CASE("overflow is reported, not wrapped") {
  const i128 big = static_cast<i128>(1) << 100;
  const QuadInt x(G, big, big);
  try {
    (void)(x * x);
    FAIL("expected overflow");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Overflow);
  }
}

TEST_CASE("primality and factorization") {
  const auto& sieve = small_primes();
  std::size_t idx = 0;
  for (std::uint64_t n = 0; n < 20'000; ++n) {
    const bool listed = idx < sieve.size() && sieve[idx] == n;
    if (listed) ++idx;
    REQUIRE(is_prime(n) == listed);
  }
  CHECK(is_prime(18446744073709551557ULL));
  CHECK_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
  std::mt19937_64 rng(3);
  for (int n = 0; n < 500; ++n) {
    const std::uint64_t m = rng() % 1'000'000'000'000ULL + 1;
    std::uint64_t back = 1;
    for (const auto& [p, e] : factorize(m)) {
      REQUIRE(is_prime(p));
      for (unsigned k = 0; k < e; ++k) back *= p;
    }
    REQUIRE(back == m);
  }
}
