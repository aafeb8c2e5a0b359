#include <doctest.h>

#include <algorithm>
#include <random>

#include "similitude/counting.hpp"
#include "similitude/dirichlet.hpp"
#include "similitude/error.hpp"
#include "similitude/oracle.hpp"
#include "similitude/orders.hpp"

using namespace similitude;

namespace {

// zeta(s) zeta(s-1) zeta(s-2) zeta(s-3) counts all sublattices of Z^4 by index.
CoeffSeq sublattice_counts(std::size_t n) {
  const CoeffSeq one = CoeffSeq::ones(n);
  const CoeffSeq s1 = shift(one), s2 = shift(s1), s3 = shift(s2);
  return convolve(convolve(one, s1), convolve(s2, s3));
}

template <class F>
void expect_error(Errc code, F&& f) {
  try {
    f();
    FAIL("expected " << errc_name(code));
  } catch (const Error& e) {
    CHECK(e.code() == code);
  }
}

}  // namespace

TEST_CASE("sublattice enumeration is complete") {
  const CoeffSeq expect = sublattice_counts(49);
  for (AmbientId id : {AmbientId::Z4, AmbientId::D4star}) {
    const AmbientLattice& lat = ambient_lattice(id);
    for (std::uint64_t n : {1u, 2u, 3u, 4u, 6u, 9u, 16u}) {
      const auto keys = enumerate_sublattices(lat, n);
      INFO(lat.name << " index " << n);
      CHECK(static_cast<i128>(keys.size()) == expect[n]);
      CHECK(std::is_sorted(keys.begin(), keys.end()));
      CHECK(std::adjacent_find(keys.begin(), keys.end()) == keys.end());
      for (const auto& k : keys) REQUIRE(k.index() == static_cast<i128>(n));
    }
  }
  CHECK(static_cast<i128>(enumerate_sublattices(ambient_lattice(AmbientId::Z4), 36).size()) == expect[36]);
  expect_error(Errc::BoundExceeded, [] { enumerate_sublattices(ambient_lattice(AmbientId::Z4), 50); });
}

TEST_CASE("ambient lattices") {
  const auto& z4 = ambient_lattice(AmbientId::Z4);
  const auto& d4 = ambient_lattice(AmbientId::D4star);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(z4.gram[i][j] == (i == j ? 1 : 0));
  // D4* has determinant 1/4; scaled by 2 the Gram determinant is 4.
  std::vector<IntVector> g(4, IntVector(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) g[i][j] = d4.gram[i][j];
  CHECK(determinant(g) == 4);
}

TEST_CASE("similarity of explicit sublattices") {
  const auto& z4 = ambient_lattice(AmbientId::Z4);
  // (1+i) Z^4 as a quaternion multiple: index 4, similar
  const LatticeKey a = hnf_key({{1, 1, 0, 0}, {-1, 1, 0, 0}, {0, 0, 1, 1}, {0, 0, -1, 1}}, 4);
  CHECK(a.index() == 4);
  CHECK(is_similar_sublattice(a, z4));
  CHECK(match_scaled_basis(a, z4, 2));
  // diag(1,1,2,2) has index 4 but is not similar
  const LatticeKey b = hnf_key({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}}, 4);
  CHECK_FALSE(is_similar_sublattice(b, z4));
  CHECK(is_similar_sublattice(hnf_key({{3, 0, 0, 0}, {0, 3, 0, 0}, {0, 0, 3, 0}, {0, 0, 0, 3}}, 4), z4));
  expect_error(Errc::NotASublattice, [&] { is_similar_sublattice(identity_key(3), z4); });
}

TEST_CASE("non-square indices never carry similar sublattices") {
  for (AmbientId id : {AmbientId::Z4, AmbientId::D4star}) {
    const auto& lat = ambient_lattice(id);
    for (std::uint64_t n : {2u, 3u, 5u, 6u, 7u, 8u}) {
      const auto keys = enumerate_sublattices(lat, n);
      const auto lo = static_cast<std::uint64_t>(isqrt(n));
      for (const auto& k : keys) {
        REQUIRE_FALSE(match_scaled_basis(k, lat, lo));
        REQUIRE_FALSE(match_scaled_basis(k, lat, lo + 1));
      }
      expect_error(Errc::NonSquareIndex, [&] { is_similar_sublattice(keys.front(), lat); });
    }
  }
}

TEST_CASE("similarity is invariant under signed permutations") {
  const auto& z4 = ambient_lattice(AmbientId::Z4);
  std::vector<LatticeKey> pool = enumerate_sublattices(z4, 4);
  const auto nine = enumerate_sublattices(z4, 9);
  pool.insert(pool.end(), nine.begin(), nine.end());
  std::mt19937_64 rng(99);
  int similar = 0;
  for (int t = 0; t < 100; ++t) {
    const LatticeKey& k = pool[rng() % pool.size()];
    std::array<int, 4> perm{0, 1, 2, 3};
    std::shuffle(perm.begin(), perm.end(), rng);
    // a fixed sign per coordinate keeps this a lattice automorphism
    std::array<int, 4> sg{};
    for (auto& s : sg) s = rng() & 1 ? -1 : 1;
    std::vector<IntVector> gens(4, IntVector(4));
    for (int c = 0; c < 4; ++c) {
      const IntVector col = k.column(c);
      for (int i = 0; i < 4; ++i) gens[c][perm[i]] = sg[i] * col[i];
    }
    const LatticeKey image = hnf_key(gens, 4);
    CHECK(image.index() == k.index());
    const bool s = is_similar_sublattice(k, z4);
    CHECK(is_similar_sublattice(image, z4) == s);
    similar += s;
  }
  CHECK(similar > 0);
}

TEST_CASE("brute-force counts agree with the closed forms") {
  for (std::uint64_t m = 1; m <= 4; ++m) {
    CHECK(static_cast<i128>(count_ssl_bruteforce(ambient_lattice(AmbientId::Z4), m)) == ssm_count(TargetId::Z4, m));
    CHECK(static_cast<i128>(count_ssl_bruteforce(ambient_lattice(AmbientId::D4star), m)) ==
          ssm_count(TargetId::HurwitzJ, m));
  }
  expect_error(Errc::BoundExceeded, [] { count_ssl_bruteforce(ambient_lattice(AmbientId::Z4), 8); });
}

TEST_CASE("brute force is deterministic across thread counts") {
  const auto& z4 = ambient_lattice(AmbientId::Z4);
  const std::uint64_t one = count_ssl_bruteforce(z4, 3, 1);
  CHECK(count_ssl_bruteforce(z4, 3, 4) == one);
  CHECK(count_ssl_bruteforce(z4, 3, 8) == one);
}

TEST_CASE("icosian submodules") {
  const auto units = unit_group(OrderId::Icosian).size();
  const IcosianOracleResult r1 = enumerate_ssm_icosian(1);
  REQUIRE(r1.modules.size() == 1);
  CHECK(r1.modules[0].kind == SsmKind::TwoSided);
  CHECK(r1.modules[0].key == identity_key(8));

  const IcosianOracleResult r4 = enumerate_ssm_icosian(4, 2);
  CHECK(static_cast<i128>(r4.modules.size()) == ssm_count(TargetId::IcosianI, 4));
  CHECK(r4.count(SsmKind::LeftIdeal) == 5);
  CHECK(r4.count(SsmKind::RightIdeal) == 5);
  CHECK(r4.count(SsmKind::TwoSided) == 0);
  CHECK(r4.count(SsmKind::Generic) == 0);
  for (const auto& mod : r4.modules) {
    CHECK(mod.pair_count % units == 0);
    CHECK(mod.key.index() == 16);
  }
  const IcosianOracleResult again = enumerate_ssm_icosian(4, 1);
  REQUIRE(again.modules.size() == r4.modules.size());
  for (std::size_t i = 0; i < again.modules.size(); ++i) CHECK(again.modules[i].key == r4.modules[i].key);

  const IcosianOracleResult r5 = enumerate_ssm_icosian(5);
  CHECK(static_cast<i128>(r5.modules.size()) == ssm_count(TargetId::IcosianI, 5));

  expect_error(Errc::NotRepresentable, [] { enumerate_ssm_icosian(2); });
  expect_error(Errc::BoundExceeded, [] { enumerate_ssm_icosian(29); });
}

TEST_CASE("kind names") {
  CHECK(std::string(ssm_kind_name(SsmKind::TwoSided)) == "two-sided");
  CHECK(std::string(ssm_kind_name(SsmKind::Generic)) == "generic");
}
