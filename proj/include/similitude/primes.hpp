#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace similitude {

// Deterministic Miller-Rabin, valid for every 64-bit input.
bool is_prime(std::uint64_t n);

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
  bool operator==(const PrimePower&) const = default;
};

// Trial division against a shared sieve of primes below 10^6; the sieve is
// built once on first use and is read-only afterwards.
std::vector<PrimePower> factorize(std::uint64_t n);

const std::vector<std::uint32_t>& small_primes();

// Smallest-prime-factor table for 0..n (entries 0 and 1 are 0).
std::vector<std::uint32_t> smallest_prime_factors(std::uint32_t n);

}  // namespace similitude
