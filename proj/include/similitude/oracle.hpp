#pragma once

// Brute-force verification: sublattice enumeration with Gram matching, and a
// direct search for similarity submodules of the icosian ring.

#include <array>
#include <cstdint>
#include <vector>

#include "similitude/lattice.hpp"

namespace similitude {

inline constexpr std::uint64_t kSublatticeIndexBound = 49;
inline constexpr std::uint64_t kIcosianIndexBound = 25;

enum class AmbientId { Z4, D4star };

// basis2 holds twice the basis vectors (rows); gram = scale * basis * basis^t
// with scale 1 for Z4 and 2 for D4*, so both are integral.
struct AmbientLattice {
  AmbientId id;
  const char* name;
  std::array<std::array<std::int64_t, 4>, 4> basis2;
  std::array<std::array<std::int64_t, 4>, 4> gram;
  std::int64_t scale;
};

const AmbientLattice& ambient_lattice(AmbientId id);

// Every sublattice of Z^4 (in ambient basis coordinates) of the given index,
// sorted by key.
std::vector<LatticeKey> enumerate_sublattices(const AmbientLattice& lattice, std::uint64_t index,
                                              std::uint64_t bound = kSublatticeIndexBound);

// True iff the sublattice has a basis with Gram matrix s * gram(L).
bool match_scaled_basis(const LatticeKey& key, const AmbientLattice& lattice, std::uint64_t s);
// True iff key = alpha R(L) for some similarity; the index must be a square.
bool is_similar_sublattice(const LatticeKey& key, const AmbientLattice& lattice);

std::uint64_t count_ssl_bruteforce(const AmbientLattice& lattice, std::uint64_t m, unsigned threads = 1,
                                   std::uint64_t bound = kSublatticeIndexBound);

enum class SsmKind { LeftIdeal, RightIdeal, TwoSided, Generic };
const char* ssm_kind_name(SsmKind kind) noexcept;

struct IcosianSsm {
  LatticeKey key;
  SsmKind kind;
  // Number of enumerated pairs (a, b) with a I b equal to this module.
  std::uint64_t pair_count;
};

struct IcosianOracleResult {
  std::uint64_t m = 0;
  std::vector<IcosianSsm> modules;  // sorted by key
  std::uint64_t elements = 0;       // icosians found by the coordinate search
  std::uint64_t count(SsmKind kind) const;
};

IcosianOracleResult enumerate_ssm_icosian(std::uint64_t m, unsigned threads = 1,
                                          std::uint64_t bound = kIcosianIndexBound);

}  // namespace similitude
