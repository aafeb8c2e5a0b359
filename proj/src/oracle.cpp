#include "similitude/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "parallel.hpp"
#include "similitude/error.hpp"
#include "similitude/orders.hpp"
#include "similitude/primes.hpp"

namespace similitude {

namespace {

using Vec4 = std::array<i128, 4>;

AmbientLattice make_z4() {
  AmbientLattice l{AmbientId::Z4, "Z4", {}, {}, 1};
  for (int i = 0; i < 4; ++i) {
    l.basis2[i][i] = 2;
    l.gram[i][i] = 1;
  }
  return l;
}

// Basis e1, e2, e3, (1,1,1,1)/2.
AmbientLattice make_d4star() {
  AmbientLattice l{AmbientId::D4star, "D4star", {}, {}, 2};
  for (int i = 0; i < 3; ++i) l.basis2[i][i] = 2;
  l.basis2[3] = {1, 1, 1, 1};
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      std::int64_t dot = 0;
      for (int k = 0; k < 4; ++k) dot += l.basis2[r][k] * l.basis2[c][k];
      l.gram[r][c] = dot * l.scale / 4;
    }
  }
  return l;
}

i128 form(const AmbientLattice& l, const Vec4& x, const Vec4& y) {
  i128 s = 0;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) s += x[r] * l.gram[r][c] * y[c];
  return s;
}

// All x in Z^4 with x^t G x = t, using x_i^2 det(G) <= t adj(G)_ii.
std::vector<Vec4> vectors_of_norm(const AmbientLattice& l, i128 t) {
  std::vector<IntVector> g(4, IntVector(4));
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) g[r][c] = l.gram[r][c];
  const i128 det = determinant(g);
  std::array<i128, 4> box{};
  for (int i = 0; i < 4; ++i) {
    std::vector<IntVector> minor;
    for (int r = 0; r < 4; ++r) {
      if (r == i) continue;
      IntVector row;
      for (int c = 0; c < 4; ++c)
        if (c != i) row.push_back(g[r][c]);
      minor.push_back(row);
    }
    const i128 limit = t * determinant(minor);
    i128 b = 0;
    while ((b + 1) * (b + 1) * det <= limit) ++b;
    box[i] = b;
  }
  std::vector<Vec4> out;
  Vec4 x{};
  for (x[0] = -box[0]; x[0] <= box[0]; ++x[0])
    for (x[1] = -box[1]; x[1] <= box[1]; ++x[1])
      for (x[2] = -box[2]; x[2] <= box[2]; ++x[2])
        for (x[3] = -box[3]; x[3] <= box[3]; ++x[3])
          if (form(l, x, x) == t) out.push_back(x);
  return out;
}

using CandidateLists = std::array<std::vector<Vec4>, 4>;

CandidateLists candidates_for_scale(const AmbientLattice& l, std::uint64_t s) {
  CandidateLists lists;
  std::map<i128, std::vector<Vec4>> by_norm;
  for (int i = 0; i < 4; ++i) {
    const i128 t = static_cast<i128>(s) * l.gram[i][i];
    auto it = by_norm.find(t);
    if (it == by_norm.end()) it = by_norm.emplace(t, vectors_of_norm(l, t)).first;
    lists[i] = it->second;
  }
  return lists;
}

bool is_leading_positive(const Vec4& v) {
  for (auto x : v)
    if (x != 0) return x > 0;
  return false;
}

bool match_with(const LatticeKey& key, const AmbientLattice& l, std::uint64_t s, const CandidateLists& all) {
  if (key.index() != static_cast<i128>(s) * static_cast<i128>(s)) return false;
  CandidateLists in;
  for (int i = 0; i < 4; ++i) {
    for (const auto& v : all[i])
      if (key.contains(IntVector(v.begin(), v.end()))) in[i].push_back(v);
    if (in[i].empty()) return false;
  }
  const i128 sc = static_cast<i128>(s);
  std::array<Vec4, 4> chosen;
  // Depth-first over positions; the overall sign of a solution is free, so
  // the first vector is taken with a positive leading coordinate.
  auto search = [&](auto&& self, int depth) -> bool {
    if (depth == 4) {
      std::vector<IntVector> rows;
      for (const auto& v : chosen) rows.emplace_back(v.begin(), v.end());
      return abs128(determinant(rows)) == key.index();
    }
    for (const auto& v : in[depth]) {
      if (depth == 0 && !is_leading_positive(v)) continue;
      bool ok = true;
      for (int j = 0; j < depth && ok; ++j) ok = form(l, chosen[j], v) == sc * l.gram[j][depth];
      if (!ok) continue;
      chosen[depth] = v;
      if (self(self, depth + 1)) return true;
    }
    return false;
  };
  return search(search, 0);
}

void check_sublattice(const LatticeKey& key) {
  if (key.rank() != 4) throw Error(Errc::NotASublattice, "expected a rank-4 sublattice key");
}

std::uint64_t exact_sqrt(i128 n) {
  const i128 r = isqrt(n);
  return r * r == n ? static_cast<std::uint64_t>(r) : 0;
}

}  // namespace

const AmbientLattice& ambient_lattice(AmbientId id) {
  static const AmbientLattice z4 = make_z4();
  static const AmbientLattice d4 = make_d4star();
  return id == AmbientId::Z4 ? z4 : d4;
}

std::vector<LatticeKey> enumerate_sublattices(const AmbientLattice&, std::uint64_t index, std::uint64_t bound) {
  if (index == 0) throw Error(Errc::InvalidArgument, "index must be positive");
  if (index > bound) throw Error(Errc::BoundExceeded, "index " + std::to_string(index) + " exceeds the bound " + std::to_string(bound));
  std::vector<LatticeKey> out;
  std::array<i128, 4> diag{};
  auto fill = [&](std::vector<i128>& e, int pos, auto&& self) -> void {
    if (pos == 16) {
      out.emplace_back(4, e);
      return;
    }
    const int r = pos / 4;
    const int c = pos % 4;
    if (c > r) {
      self(e, pos + 1, self);
      return;
    }
    if (c == r) {
      e[pos] = diag[r];
      self(e, pos + 1, self);
      return;
    }
    for (i128 v = 0; v < diag[r]; ++v) {
      e[pos] = v;
      self(e, pos + 1, self);
    }
  };
  auto choose = [&](int r, std::uint64_t rest, auto&& self) -> void {
    if (r == 3) {
      diag[3] = rest;
      std::vector<i128> e(16, 0);
      fill(e, 0, fill);
      return;
    }
    for (std::uint64_t d = 1; d <= rest; ++d) {
      if (rest % d != 0) continue;
      diag[r] = d;
      self(r + 1, rest / d, self);
    }
  };
  choose(0, index, choose);
  std::sort(out.begin(), out.end());
  return out;
}

bool match_scaled_basis(const LatticeKey& key, const AmbientLattice& lattice, std::uint64_t s) {
  check_sublattice(key);
  if (s == 0) throw Error(Errc::InvalidArgument, "scale must be positive");
  return match_with(key, lattice, s, candidates_for_scale(lattice, s));
}

bool is_similar_sublattice(const LatticeKey& key, const AmbientLattice& lattice) {
  check_sublattice(key);
  const std::uint64_t m = exact_sqrt(key.index());
  if (m == 0) throw Error(Errc::NonSquareIndex, "index " + to_string(key.index()) + " is not a square");
  return match_scaled_basis(key, lattice, m);
}

std::uint64_t count_ssl_bruteforce(const AmbientLattice& lattice, std::uint64_t m, unsigned threads,
                                   std::uint64_t bound) {
  if (m == 0) throw Error(Errc::InvalidArgument, "m must be positive");
  if (m > bound || m * m > bound) throw Error(Errc::BoundExceeded, "m^2 = " + std::to_string(m * m) + " exceeds the bound " + std::to_string(bound));
  const auto keys = enumerate_sublattices(lattice, m * m, bound);
  const CandidateLists lists = candidates_for_scale(lattice, m);
  std::vector<char> hit(keys.size(), 0);
  detail::parallel_for(keys.size(), threads, [&](std::size_t i) { hit[i] = match_with(keys[i], lattice, m, lists); });
  return static_cast<std::uint64_t>(std::count(hit.begin(), hit.end(), 1));
}

const char* ssm_kind_name(SsmKind kind) noexcept {
  switch (kind) {
    case SsmKind::LeftIdeal: return "left";
    case SsmKind::RightIdeal: return "right";
    case SsmKind::TwoSided: return "two-sided";
    case SsmKind::Generic: return "generic";
  }
  return "?";
}

std::uint64_t IcosianOracleResult::count(SsmKind kind) const {
  return static_cast<std::uint64_t>(
      std::count_if(modules.begin(), modules.end(), [&](const IcosianSsm& s) { return s.kind == kind; }));
}

namespace {

const RingId kG = RingId::GoldenInt;

// Icosians a with N(|a|^2) <= m whose norm x = |a|^2 is normalized by the
// totally positive units tau^{2k} to 1 <= x / x' < tau^4. Then
// x < tau^2 sqrt(m) and x' <= sqrt(m), so every coordinate v = 2 a_i and
// every partial sum P of the v_i^2 satisfies P^2 <= 16 tau^4 m and
// P'^2 <= 16 m.
std::vector<Quat> search_icosians(std::uint64_t m, unsigned threads) {
  const i128 mm = static_cast<i128>(m);
  const QuadInt upper(kG, 32 * mm, 48 * mm);  // 16 tau^4 m
  const QuadInt upper_conj(kG, 16 * mm, 0);   // compared in the conjugate embedding
  auto within = [&](const QuadInt& p) {
    const QuadInt sq = p * p;
    return sign(upper - sq) >= 0 && sign(conjugate(upper_conj - sq)) >= 0;
  };
  i128 r = 1;
  while (r * r * r * r < mm) ++r;
  std::vector<QuadInt> values;
  for (i128 q = -3 * r; q <= 3 * r; ++q) {
    for (i128 p = -9 * r; p <= 9 * r; ++p) {
      const QuadInt v(kG, p, q);
      if (within(v * v)) values.push_back(v);
    }
  }
  const QuadInt tau4(kG, 2, 3);
  std::vector<std::vector<Quat>> found(values.size());
  detail::parallel_for(values.size(), threads, [&](std::size_t i0) {
    const QuadInt& v0 = values[i0];
    const QuadInt s0 = v0 * v0;
    for (const auto& v1 : values) {
      const QuadInt s1 = s0 + v1 * v1;
      if (!within(s1)) continue;
      for (const auto& v2 : values) {
        const QuadInt s2 = s1 + v2 * v2;
        if (!within(s2)) continue;
        for (const auto& v3 : values) {
          const QuadInt s3 = s2 + v3 * v3;
          if (s3.is_zero() || !within(s3)) continue;
          // s3 = 4 |a|^2
          const QuadInt s3c = conjugate(s3);
          if (sign(s3 - s3c) < 0 || sign(tau4 * s3c - s3) <= 0) continue;
          const Quat a(kG, {v0, v1, v2, v3}, 2);
          if (!in_order(OrderId::Icosian, a)) continue;
          const Scalar n = field_norm(reduced_norm(a));
          if (n.num().a() > mm || mm % n.num().a() != 0) continue;
          found[i0].push_back(a);
        }
      }
    }
  });
  std::vector<Quat> out;
  for (auto& f : found) out.insert(out.end(), f.begin(), f.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t norm_of(const Quat& a) { return static_cast<std::uint64_t>(field_norm(reduced_norm(a)).num().a()); }

struct IdealClass {
  Quat rep;
  std::uint64_t norm;
  std::uint64_t size;
};

// Groups elements by the one-sided ideal they generate (right: a I, left: I a).
std::vector<IdealClass> group_ideals(const std::vector<Quat>& elems, bool right, unsigned threads) {
  const Quat one(kG, {QuadInt(kG, 1), QuadInt(kG), QuadInt(kG), QuadInt(kG)}, 1);
  std::vector<LatticeKey> keys(elems.size());
  detail::parallel_for(elems.size(), threads, [&](std::size_t i) {
    const OrderElement a(OrderId::Icosian, elems[i]);
    const OrderElement u(OrderId::Icosian, one);
    keys[i] = right ? module_lattice(a, u) : module_lattice(u, a);
  });
  std::map<LatticeKey, IdealClass> classes;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    auto [it, fresh] = classes.try_emplace(keys[i], IdealClass{elems[i], norm_of(elems[i]), 0});
    ++it->second.size;
  }
  std::vector<IdealClass> out;
  for (auto& [k, c] : classes) out.push_back(c);
  return out;
}

}  // namespace

IcosianOracleResult enumerate_ssm_icosian(std::uint64_t m, unsigned threads, std::uint64_t bound) {
  if (m == 0) throw Error(Errc::InvalidArgument, "m must be positive");
  if (m > bound) throw Error(Errc::BoundExceeded, "m = " + std::to_string(m) + " exceeds the bound " + std::to_string(bound));
  if (!is_representable_index(m, kG)) throw Error(Errc::NotRepresentable, "m = " + std::to_string(m) + " is not a norm from Z[tau]");

  const std::vector<Quat> elems = search_icosians(m, threads);
  const auto rights = group_ideals(elems, true, threads);
  const auto lefts = group_ideals(elems, false, threads);

  struct Job {
    const IdealClass* a;
    const IdealClass* b;
  };
  std::vector<Job> jobs;
  for (const auto& a : rights)
    for (const auto& b : lefts)
      if (a.norm * b.norm == m) jobs.push_back({&a, &b});
  std::vector<LatticeKey> keys(jobs.size());
  detail::parallel_for(jobs.size(), threads, [&](std::size_t i) {
    const auto [ca, cb] = canonicalize_pair(jobs[i].a->rep, jobs[i].b->rep, OrderId::Icosian);
    keys[i] = module_lattice(ca, cb);
    const LatticeKey direct =
        module_lattice(OrderElement(OrderId::Icosian, jobs[i].a->rep), OrderElement(OrderId::Icosian, jobs[i].b->rep));
    if (direct != keys[i]) throw Error(Errc::Internal, "canonical pair changed the module");
  });

  std::set<LatticeKey> right_ideals, left_ideals;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    if (jobs[i].b->norm == 1) right_ideals.insert(keys[i]);
    if (jobs[i].a->norm == 1) left_ideals.insert(keys[i]);
  }
  std::map<LatticeKey, std::uint64_t> pairs;
  for (std::size_t i = 0; i < jobs.size(); ++i) pairs[keys[i]] += jobs[i].a->size * jobs[i].b->size;

  IcosianOracleResult result;
  result.m = m;
  result.elements = elems.size();
  for (const auto& [key, count] : pairs) {
    const bool l = left_ideals.count(key) != 0;
    const bool r = right_ideals.count(key) != 0;
    const SsmKind kind = l && r ? SsmKind::TwoSided : l ? SsmKind::LeftIdeal : r ? SsmKind::RightIdeal : SsmKind::Generic;
    result.modules.push_back({key, kind, count});
  }
  return result;
}

}  // namespace similitude
