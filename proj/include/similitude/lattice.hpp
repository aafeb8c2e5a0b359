#pragma once

// Integer lattices identified by their column-style Hermite normal form.

#include <compare>
#include <string>
#include <vector>

#include "similitude/int128.hpp"

namespace similitude {

using IntVector = std::vector<i128>;

// Lower-triangular HNF whose columns form a basis of a full-rank sublattice
// of Z^rank. Diagonal entries are positive and every entry left of the
// diagonal lies in [0, diagonal of its row). index = product of diagonal.
class LatticeKey {
 public:
  LatticeKey() = default;
  // Takes an already reduced HNF; validates the shape and normalization.
  LatticeKey(int rank, std::vector<i128> entries);

  int rank() const noexcept { return rank_; }
  i128 index() const noexcept { return index_; }
  i128 at(int row, int col) const { return entries_[static_cast<std::size_t>(row * rank_ + col)]; }
  const std::vector<i128>& entries() const noexcept { return entries_; }
  IntVector column(int col) const;

  bool contains(const IntVector& v) const;

  friend bool operator==(const LatticeKey&, const LatticeKey&) = default;
  friend auto operator<=>(const LatticeKey& x, const LatticeKey& y) {
    if (auto c = x.rank_ <=> y.rank_; c != 0) return c;
    return x.entries_ <=> y.entries_;
  }

  std::string to_string() const;

 private:
  int rank_ = 0;
  std::vector<i128> entries_;
  i128 index_ = 0;
};

// Exact determinant by fraction-free (Bareiss) elimination.
i128 determinant(std::vector<IntVector> rows);

// HNF of the lattice spanned by the given generators (each of length rank).
// The generators must span a full-rank lattice.
LatticeKey hnf_key(const std::vector<IntVector>& generators, int rank);

LatticeKey identity_key(int rank);

}  // namespace similitude
