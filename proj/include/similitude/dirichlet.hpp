#pragma once

// Truncated Dirichlet series as coefficient sequences a(1..N).

#include <cstdint>
#include <functional>
#include <vector>

#include "similitude/int128.hpp"

namespace similitude {

class CoeffSeq {
 public:
  // All-zero sequence of length n (n >= 1).
  explicit CoeffSeq(std::size_t n);
  explicit CoeffSeq(std::vector<i128> values);

  static CoeffSeq epsilon(std::size_t n);
  static CoeffSeq ones(std::size_t n);
  // Sparse polynomial in m^{-s}: coefficient c at index m for each (m, c).
  static CoeffSeq from_terms(std::size_t n, std::initializer_list<std::pair<std::uint64_t, i128>> terms);

  std::size_t size() const noexcept { return values_.size(); }
  // 1-based access.
  i128 operator[](std::uint64_t m) const { return values_[m - 1]; }
  i128& operator[](std::uint64_t m) { return values_[m - 1]; }
  const std::vector<i128>& values() const noexcept { return values_; }

  friend bool operator==(const CoeffSeq&, const CoeffSeq&) = default;

 private:
  std::vector<i128> values_;
};

CoeffSeq convolve(const CoeffSeq& x, const CoeffSeq& y);
CoeffSeq add(const CoeffSeq& x, const CoeffSeq& y);
CoeffSeq dirichlet_inverse(const CoeffSeq& x);
// b(m^k) = a(m), zero off the k-th powers.
CoeffSeq dilate(const CoeffSeq& x, unsigned k);
// b(m) = m a(m).
CoeffSeq shift(const CoeffSeq& x);

using PrimePowerRule = std::function<i128(std::uint64_t p, unsigned r)>;
CoeffSeq from_multiplicative(const PrimePowerRule& rule, std::size_t n);

bool is_multiplicative(const CoeffSeq& x);
// First index m <= size() with a coprime split m = uv breaking
// a(m) = a(u) a(v); 0 when none.
std::uint64_t first_multiplicativity_failure(const CoeffSeq& x);
// Sum of a(m) for m <= x (clamped to the sequence length).
i128 partial_sum(const CoeffSeq& a, std::uint64_t x);

}  // namespace similitude
