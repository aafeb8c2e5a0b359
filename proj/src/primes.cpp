#include "similitude/primes.hpp"

#include "similitude/error.hpp"

namespace similitude {
namespace {

constexpr std::uint32_t kSieveLimit = 1'000'000;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

std::vector<std::uint32_t> build_sieve() {
  std::vector<bool> composite(kSieveLimit + 1, false);
  std::vector<std::uint32_t> primes;
  for (std::uint32_t i = 2; i <= kSieveLimit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j <= kSieveLimit; j += i) composite[j] = true;
  }
  return primes;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = build_sieve();
  return primes;
}

std::vector<PrimePower> factorize(std::uint64_t n) {
  if (n == 0) throw Error(Errc::DomainError, "cannot factorize 0");
  std::vector<PrimePower> out;
  for (std::uint64_t p : small_primes()) {
    if (p * p > n) break;
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) {
    // Beyond the sieve: finish by plain trial division over odd candidates.
    std::uint64_t start = static_cast<std::uint64_t>(kSieveLimit) + 1;
    if (start % 2 == 0) ++start;
    for (std::uint64_t p = start; p <= n / p; p += 2) {
      if (n % p != 0) continue;
      unsigned e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.push_back({p, e});
    }
    if (n > 1) out.push_back({n, 1});
  }
  return out;
}

std::vector<std::uint32_t> smallest_prime_factors(std::uint32_t n) {
  std::vector<std::uint32_t> spf(static_cast<std::size_t>(n) + 1, 0);
  for (std::uint32_t i = 2; i <= n; ++i) {
    if (spf[i] != 0) continue;
    for (std::uint64_t j = i; j <= n; j += i) {
      if (spf[j] == 0) spf[j] = i;
    }
  }
  return spf;
}

}  // namespace similitude
