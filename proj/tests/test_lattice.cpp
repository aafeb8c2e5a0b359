#include <doctest.h>

#include <random>

#include "similitude/error.hpp"
#include "similitude/lattice.hpp"

using namespace similitude;

namespace {

std::vector<IntVector> random_basis(std::mt19937_64& rng, int rank) {
  std::uniform_int_distribution<int> d(-6, 6);
  while (true) {
    std::vector<IntVector> b(static_cast<std::size_t>(rank), IntVector(static_cast<std::size_t>(rank)));
    for (auto& v : b)
      for (auto& x : v) x = d(rng);
    if (determinant(b) != 0) return b;
  }
}

// Random unimodular change of generators: elementary column operations.
std::vector<IntVector> scramble(std::mt19937_64& rng, std::vector<IntVector> b) {
  std::uniform_int_distribution<std::size_t> pick(0, b.size() - 1);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int step = 0; step < 20; ++step) {
    const std::size_t i = pick(rng), j = pick(rng);
    if (i == j) {
      for (auto& x : b[i]) x = -x;
      continue;
    }
    const int c = coef(rng);
    for (std::size_t k = 0; k < b[i].size(); ++k) b[i][k] += c * b[j][k];
  }
  return b;
}

}  // namespace

TEST_CASE("determinant") {
  CHECK(determinant({{2, 0}, {0, 3}}) == 6);
  CHECK(determinant({{0, 1}, {1, 0}}) == -1);
  CHECK(determinant({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == 0);
  CHECK(determinant({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}) == 4);
}

TEST_CASE("key shape is validated") {
  CHECK_NOTHROW(LatticeKey(2, {2, 0, 1, 3}));
  CHECK_THROWS_AS(LatticeKey(2, {2, 1, 1, 3}), Error);  // not lower triangular
  CHECK_THROWS_AS(LatticeKey(2, {2, 0, 3, 3}), Error);  // entry not reduced
  CHECK_THROWS_AS(LatticeKey(2, {0, 0, 1, 3}), Error);  // zero diagonal
}

TEST_CASE("HNF is independent of the chosen generators") {
  std::mt19937_64 rng(99);
  for (int rank : {2, 4, 8}) {
    for (int n = 0; n < 200; ++n) {
      const auto b = random_basis(rng, rank);
      const LatticeKey k1 = hnf_key(b, rank);
      const LatticeKey k2 = hnf_key(scramble(rng, b), rank);
      REQUIRE(k1 == k2);
      REQUIRE(k1.index() == abs128(determinant(b)));
      for (const auto& v : b) REQUIRE(k1.contains(v));
      // the non-square path (redundant generators) agrees with the modular one
      auto extra = b;
      IntVector sum(static_cast<std::size_t>(rank), 0);
      for (const auto& v : b)
        for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += v[k];
      extra.push_back(sum);
      REQUIRE(hnf_key(extra, rank) == k1);
    }
  }
}

TEST_CASE("containment") {
  const LatticeKey k = hnf_key({{2, 0, 0, 0}, {0, 2, 0, 0}, {1, 1, 1, 0}, {0, 0, 0, 3}}, 4);
  CHECK(k.index() == 12);
  CHECK(k.contains({1, 1, 1, 0}));
  CHECK(k.contains({3, 1, 1, 3}));
  CHECK_FALSE(k.contains({1, 0, 0, 0}));
  CHECK_FALSE(k.contains({0, 0, 0, 1}));
  CHECK(identity_key(4).index() == 1);
  CHECK_THROWS_AS(hnf_key({{1, 0}, {2, 0}}, 2), Error);
}
