#include "similitude/lattice.hpp"

#include <utility>

namespace similitude {
namespace {

struct Xgcd {
  i128 g, s, t;
};

// g = s*a + t*b, g >= 0
Xgcd xgcd(i128 a, i128 b) {
  i128 old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    i128 q = old_r / r;
    old_r = std::exchange(r, sub_checked(old_r, mul_checked(q, r)));
    old_s = std::exchange(s, sub_checked(old_s, mul_checked(q, s)));
    old_t = std::exchange(t, sub_checked(old_t, mul_checked(q, t)));
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

// Columns are stored as vectors; cols[j][i] is row i of column j.
using Columns = std::vector<IntVector>;

void reduce_mod(IntVector& col, i128 modulus) {
  for (auto& x : col) x = mod_pos(x, modulus);
}

// Column-style HNF. The caller guarantees that modulus is a multiple of the
// lattice index; all arithmetic runs modulo a shrinking multiple R of the
// remaining index (Hermite reduction modulo D).
std::vector<i128> hnf_columns(Columns cols, int rank, i128 modulus) {
  const std::size_t k = cols.size();
  i128 big_r = modulus;
  for (auto& c : cols) reduce_mod(c, big_r);
  for (int r = 0; r < rank; ++r) {
    std::size_t piv = static_cast<std::size_t>(r);
    while (piv < k && cols[piv][r] == 0) ++piv;
    if (piv == k) piv = static_cast<std::size_t>(r);
    std::swap(cols[static_cast<std::size_t>(r)], cols[piv]);
    IntVector& pc = cols[static_cast<std::size_t>(r)];
    for (std::size_t j = static_cast<std::size_t>(r) + 1; j < k; ++j) {
      IntVector& cj = cols[j];
      if (cj[r] == 0) continue;
      const i128 a = pc[r], b = cj[r];
      const auto [g, s, t] = xgcd(a, b);
      const i128 ag = a / g, bg = b / g;
      for (int i = r; i < rank; ++i) {
        const i128 x = pc[i], y = cj[i];
        pc[i] = add_checked(mul_checked(s, x), mul_checked(t, y));
        cj[i] = sub_checked(mul_checked(ag, y), mul_checked(bg, x));
      }
      reduce_mod(pc, big_r);
      reduce_mod(cj, big_r);
    }
    // fold in big_r * e_r, which lies in the lattice
    const auto [d, u, v] = xgcd(pc[r], big_r);
    (void)v;
    for (int i = r; i < rank; ++i) pc[i] = mod_pos(mul_checked(u, pc[i]), big_r);
    for (int i = 0; i < r; ++i) pc[i] = 0;
    pc[r] = d;
    big_r /= d;
  }
  // reduce entries left of the diagonal, top row first
  for (int i = 1; i < rank; ++i) {
    const i128 d = cols[static_cast<std::size_t>(i)][i];
    for (int j = 0; j < i; ++j) {
      IntVector& cj = cols[static_cast<std::size_t>(j)];
      const i128 q = floor_div(cj[i], d);
      if (q == 0) continue;
      const IntVector& ci = cols[static_cast<std::size_t>(i)];
      for (int row = i; row < rank; ++row) {
        cj[row] = sub_checked(cj[row], mul_checked(q, ci[row]));
        // modulus * e_row lies in the lattice, so this keeps entries bounded
        if (row > i) cj[row] = mod_pos(cj[row], modulus);
      }
    }
  }
  std::vector<i128> out(static_cast<std::size_t>(rank * rank), 0);
  for (int j = 0; j < rank; ++j)
    for (int i = 0; i < rank; ++i) out[static_cast<std::size_t>(i * rank + j)] = cols[static_cast<std::size_t>(j)][i];
  return out;
}

// Greedy maximal linearly independent subset, by elimination on rows
// divided through by their content.
std::vector<IntVector> independent_subset(const std::vector<IntVector>& gens, int rank) {
  std::vector<IntVector> chosen, echelon;
  std::vector<int> pivots;
  for (const auto& g : gens) {
    IntVector v = g;
    for (std::size_t e = 0; e < echelon.size(); ++e) {
      const int p = pivots[e];
      if (v[p] == 0) continue;
      const i128 a = echelon[e][p], b = v[p], d = gcd128(a, b);
      for (int i = 0; i < rank; ++i) v[i] = sub_checked(mul_checked(a / d, v[i]), mul_checked(b / d, echelon[e][i]));
      i128 c = 0;
      for (const auto x : v) c = gcd128(c, x);
      if (c > 1)
        for (auto& x : v) x /= c;
    }
    int p = 0;
    while (p < rank && v[p] == 0) ++p;
    if (p == rank) continue;
    echelon.push_back(std::move(v));
    pivots.push_back(p);
    chosen.push_back(g);
    if (chosen.size() == static_cast<std::size_t>(rank)) break;
  }
  return chosen;
}

}  // namespace

LatticeKey::LatticeKey(int rank, std::vector<i128> entries) : rank_(rank), entries_(std::move(entries)), index_(1) {
  if (rank <= 0 || entries_.size() != static_cast<std::size_t>(rank * rank))
    throw Error(Errc::InvalidArgument, "HNF shape does not match rank");
  for (int i = 0; i < rank; ++i) {
    const i128 d = at(i, i);
    if (d <= 0) throw Error(Errc::InvalidArgument, "HNF diagonal must be positive");
    for (int j = 0; j < rank; ++j) {
      const i128 x = at(i, j);
      if (j > i && x != 0) throw Error(Errc::InvalidArgument, "HNF must be lower triangular");
      if (j < i && (x < 0 || x >= d)) throw Error(Errc::InvalidArgument, "HNF entry not reduced modulo its diagonal");
    }
    index_ = mul_checked(index_, d);
  }
}

IntVector LatticeKey::column(int col) const {
  IntVector c(static_cast<std::size_t>(rank_));
  for (int i = 0; i < rank_; ++i) c[static_cast<std::size_t>(i)] = at(i, col);
  return c;
}

bool LatticeKey::contains(const IntVector& v) const {
  if (v.size() != static_cast<std::size_t>(rank_)) throw Error(Errc::InvalidArgument, "vector length does not match rank");
  IntVector w = v;
  for (int j = 0; j < rank_; ++j) {
    const i128 d = at(j, j);
    if (w[static_cast<std::size_t>(j)] % d != 0) return false;
    const i128 y = w[static_cast<std::size_t>(j)] / d;
    if (y == 0) continue;
    for (int i = j; i < rank_; ++i)
      w[static_cast<std::size_t>(i)] = sub_checked(w[static_cast<std::size_t>(i)], mul_checked(y, at(i, j)));
  }
  return true;
}

std::string LatticeKey::to_string() const {
  std::string out = "[";
  for (int i = 0; i < rank_; ++i) {
    if (i) out += "; ";
    for (int j = 0; j <= i; ++j) {
      if (j) out += " ";
      out += similitude::to_string(at(i, j));
    }
  }
  return out + "]";
}

i128 determinant(std::vector<IntVector> a) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw Error(Errc::InvalidArgument, "determinant needs a square matrix");
  if (n == 0) return 1;
  i128 sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = sub_checked(mul_checked(a[i][j], a[k][k]), mul_checked(a[i][k], a[k][j])) / prev;
    prev = a[k][k];
  }
  return mul_checked(sign, a[n - 1][n - 1]);
}

LatticeKey hnf_key(const std::vector<IntVector>& generators, int rank) {
  for (const auto& g : generators)
    if (g.size() != static_cast<std::size_t>(rank)) throw Error(Errc::InvalidArgument, "generator length does not match rank");
  // The determinant of any full-rank subset is a multiple of the index.
  const std::vector<IntVector> subset = independent_subset(generators, rank);
  if (subset.size() != static_cast<std::size_t>(rank))
    throw Error(Errc::InvalidArgument, "generators do not span a full-rank lattice");
  const i128 modulus = abs128(determinant(subset));
  return LatticeKey(rank, hnf_columns(generators, rank, modulus));
}

LatticeKey identity_key(int rank) {
  std::vector<i128> e(static_cast<std::size_t>(rank * rank), 0);
  for (int i = 0; i < rank; ++i) e[static_cast<std::size_t>(i * rank + i)] = 1;
  return LatticeKey(rank, std::move(e));
}

}  // namespace similitude
