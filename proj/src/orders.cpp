#include "similitude/orders.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace similitude {
namespace {

constexpr std::size_t kUnitClosureCap = 10'000;

QuadInt qi(RingId r, i128 a, i128 b = 0) { return QuadInt(r, a, b); }

Quat quat(RingId r, std::array<std::pair<i128, i128>, 4> c, i128 den) {
  return Quat(r, {qi(r, c[0].first, c[0].second), qi(r, c[1].first, c[1].second), qi(r, c[2].first, c[2].second),
                  qi(r, c[3].first, c[3].second)},
              den);
}

// Triangular Z[tau]-basis of the icosian ring, obtained by Hermite-reducing
// the Z[tau]-span of the 120 units (see scalar_hermite_basis) and frozen so
// that lattice keys are reproducible. Entries are (a, b) for a + b*tau.
std::array<Quat, 4> icosian_basis() {
  const RingId g = RingId::GoldenInt;
  return {
      quat(g, {{{1, 0}, {1, 0}, {1, 0}, {1, 0}}}, 2),
      quat(g, {{{0, 0}, {1, 0}, {-2, 1}, {-1, 1}}}, 2),
      quat(g, {{{0, 0}, {0, 0}, {1, 0}, {0, 0}}}, 1),
      quat(g, {{{0, 0}, {0, 0}, {0, 0}, {1, 0}}}, 1),
  };
}

std::array<Quat, 4> hurwitz_basis() {
  const RingId z = RingId::RationalInt;
  return {
      quat(z, {{{1, 0}, {0, 0}, {0, 0}, {0, 0}}}, 1),
      quat(z, {{{0, 0}, {1, 0}, {0, 0}, {0, 0}}}, 1),
      quat(z, {{{0, 0}, {0, 0}, {1, 0}, {0, 0}}}, 1),
      quat(z, {{{1, 0}, {1, 0}, {1, 0}, {1, 0}}}, 2),
  };
}

// {1, (1+i)/sqrt2, (1+j)/sqrt2, (1+i+j+k)/2}
std::array<Quat, 4> cubian_basis() {
  const RingId s = RingId::Sqrt2Int;
  return {
      quat(s, {{{1, 0}, {0, 0}, {0, 0}, {0, 0}}}, 1),
      quat(s, {{{0, 1}, {0, 1}, {0, 0}, {0, 0}}}, 2),
      quat(s, {{{0, 1}, {0, 0}, {0, 1}, {0, 0}}}, 2),
      quat(s, {{{1, 0}, {1, 0}, {1, 0}, {1, 0}}}, 2),
  };
}

using ScalarMatrix = std::array<std::array<Scalar, 4>, 4>;

ScalarMatrix invert(const ScalarMatrix& m) {
  const RingId ring = m[0][0].ring();
  ScalarMatrix a = m;
  ScalarMatrix inv;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) inv[r][c] = Scalar::integer(ring, r == c ? 1 : 0);
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    while (piv < 4 && a[piv][col].is_zero()) ++piv;
    if (piv == 4) throw Error(Errc::Internal, "order basis is singular");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const Scalar p = a[col][col].inverse();
    for (int c = 0; c < 4; ++c) {
      a[col][c] = a[col][c] * p;
      inv[col][c] = inv[col][c] * p;
    }
    for (int r = 0; r < 4; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const Scalar f = a[r][col];
      for (int c = 0; c < 4; ++c) {
        a[r][c] = a[r][c] - f * a[col][c];
        inv[r][c] = inv[r][c] - f * inv[col][c];
      }
    }
  }
  return inv;
}

struct OrderData {
  std::array<Quat, 4> basis;
  ScalarMatrix inverse;  // coords(q) = q * inverse (row vector)
};

OrderData make_data(std::array<Quat, 4> basis) {
  ScalarMatrix m;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m[r][c] = basis[r].coord(c);
  return {basis, invert(m)};
}

const OrderData& data(OrderId order) {
  static const OrderData hurwitz = make_data(hurwitz_basis());
  static const OrderData icosian = make_data(icosian_basis());
  static const OrderData cubian = make_data(cubian_basis());
  switch (order) {
    case OrderId::Hurwitz: return hurwitz;
    case OrderId::Icosian: return icosian;
    case OrderId::Cubian: return cubian;
  }
  throw Error(Errc::Internal, "bad order");
}

void require_ring(OrderId order, const Quat& q) {
  if (q.ring() != order_ring(order))
    throw Error(Errc::RingMismatch, std::string("quaternion is not over the field of ") + order_name(order));
}

std::vector<std::array<int, 4>> even_permutations() {
  std::vector<std::array<int, 4>> out;
  std::array<int, 4> p{0, 1, 2, 3};
  do {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) inversions += p[i] > p[j];
    if (inversions % 2 == 0) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// All sign flips and even permutations of the coordinates of q (as
// numerators over den).
std::vector<Quat> orbit_even_signed(RingId ring, std::array<QuadInt, 4> num, i128 den) {
  std::vector<Quat> out;
  for (const auto& perm : even_permutations()) {
    for (int signs = 0; signs < 16; ++signs) {
      std::array<QuadInt, 4> n;
      for (int k = 0; k < 4; ++k) {
        n[perm[k]] = (signs >> k) & 1 ? -num[k] : num[k];
      }
      out.emplace_back(ring, n, den);
    }
  }
  return out;
}

std::vector<Quat> unit_generators(OrderId order) {
  const RingId ring = order_ring(order);
  auto q = [&](std::array<std::pair<i128, i128>, 4> c, i128 den) { return quat(ring, c, den); };
  std::vector<Quat> gens;
  switch (order) {
    case OrderId::Hurwitz: {
      // (+-1,0,0,0) and permutations, (+-1,+-1,+-1,+-1)/2
      for (int k = 0; k < 4; ++k) {
        gens.push_back(Quat::basis(ring, k));
        gens.push_back(-Quat::basis(ring, k));
      }
      for (const auto& u : orbit_even_signed(ring, {qi(ring, 1), qi(ring, 1), qi(ring, 1), qi(ring, 1)}, 2))
        gens.push_back(u);
      break;
    }
    case OrderId::Icosian: {
      // (1,0,0,0), (1,1,1,1)/2, (tau,1,-1/tau,0)/2 with even permutations
      // and sign flips; -1/tau = 1 - tau.
      for (const auto& u : orbit_even_signed(ring, {qi(ring, 1), qi(ring, 0), qi(ring, 0), qi(ring, 0)}, 1))
        gens.push_back(u);
      for (const auto& u : orbit_even_signed(ring, {qi(ring, 1), qi(ring, 1), qi(ring, 1), qi(ring, 1)}, 2))
        gens.push_back(u);
      for (const auto& u : orbit_even_signed(ring, {qi(ring, 0, 1), qi(ring, 1), qi(ring, 1, -1), qi(ring, 0)}, 2))
        gens.push_back(u);
      break;
    }
    case OrderId::Cubian: {
      // (1+i)/sqrt2, (1+j)/sqrt2, (1+i+j+k)/2
      gens.push_back(q({{{0, 1}, {0, 1}, {0, 0}, {0, 0}}}, 2));
      gens.push_back(q({{{0, 1}, {0, 0}, {0, 1}, {0, 0}}}, 2));
      gens.push_back(q({{{1, 0}, {1, 0}, {1, 0}, {1, 0}}}, 2));
      break;
    }
  }
  return gens;
}

std::vector<Quat> close_under_multiplication(const std::vector<Quat>& gens) {
  std::set<Quat> seen(gens.begin(), gens.end());
  std::deque<Quat> queue(seen.begin(), seen.end());
  while (!queue.empty()) {
    const Quat x = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      Quat y = x * g;
      if (seen.insert(y).second) {
        if (seen.size() > kUnitClosureCap) throw Error(Errc::Internal, "unit group closure exceeded its cap");
        queue.push_back(std::move(y));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<OrderElement> build_unit_group(OrderId order) {
  std::vector<OrderElement> out;
  for (const auto& u : close_under_multiplication(unit_generators(order))) out.emplace_back(order, u);
  return out;
}

}  // namespace

const char* order_name(OrderId order) noexcept {
  switch (order) {
    case OrderId::Hurwitz: return "Hurwitz";
    case OrderId::Icosian: return "Icosian";
    case OrderId::Cubian: return "Cubian";
  }
  return "?";
}

RingId order_ring(OrderId order) noexcept {
  switch (order) {
    case OrderId::Hurwitz: return RingId::RationalInt;
    case OrderId::Icosian: return RingId::GoldenInt;
    case OrderId::Cubian: return RingId::Sqrt2Int;
  }
  return RingId::RationalInt;
}

int order_rank(OrderId order) noexcept { return order == OrderId::Hurwitz ? 4 : 8; }

const std::array<Quat, 4>& order_basis(OrderId order) { return data(order).basis; }

std::array<Scalar, 4> field_coords(OrderId order, const Quat& q) {
  require_ring(order, q);
  const auto& inv = data(order).inverse;
  const RingId ring = q.ring();
  std::array<Scalar, 4> out{Scalar(ring), Scalar(ring), Scalar(ring), Scalar(ring)};
  for (int c = 0; c < 4; ++c)
    for (int k = 0; k < 4; ++k) out[c] = out[c] + q.coord(k) * inv[k][c];
  return out;
}

std::optional<std::array<QuadInt, 4>> order_coords(OrderId order, const Quat& q) {
  const auto f = field_coords(order, q);
  std::array<QuadInt, 4> out;
  for (int c = 0; c < 4; ++c) {
    if (!f[c].is_integral()) return std::nullopt;
    out[c] = f[c].num();
  }
  return out;
}

bool in_order(OrderId order, const Quat& q) { return order_coords(order, q).has_value(); }

IntVector z_coords(OrderId order, const Quat& q) {
  const auto c = order_coords(order, q);
  if (!c) throw Error(Errc::InvalidArgument, q.to_string() + " is not in the " + order_name(order) + " order");
  IntVector out;
  for (const auto& x : *c) {
    out.push_back(x.a());
    if (order != OrderId::Hurwitz) out.push_back(x.b());
  }
  return out;
}

std::vector<Quat> z_basis(OrderId order) {
  std::vector<Quat> out;
  for (const auto& f : order_basis(order)) {
    out.push_back(f);
    if (order != OrderId::Hurwitz) out.push_back(f * Scalar(QuadInt::omega(order_ring(order))));
  }
  return out;
}

OrderElement::OrderElement(OrderId order, Quat q) : order_(order), q_(std::move(q)), coords_{} {
  const auto c = order_coords(order_, q_);
  if (!c) throw Error(Errc::InvalidArgument, q_.to_string() + " is not in the " + order_name(order_) + " order");
  coords_ = *c;
}

const std::vector<OrderElement>& unit_group(OrderId order) {
  static const std::vector<OrderElement> hurwitz = build_unit_group(OrderId::Hurwitz);
  static const std::vector<OrderElement> icosian = build_unit_group(OrderId::Icosian);
  static const std::vector<OrderElement> cubian = build_unit_group(OrderId::Cubian);
  switch (order) {
    case OrderId::Hurwitz: return hurwitz;
    case OrderId::Icosian: return icosian;
    case OrderId::Cubian: return cubian;
  }
  throw Error(Errc::Internal, "bad order");
}

QuadInt content(const OrderElement& a) {
  if (a.is_zero()) throw Error(Errc::ZeroElement, "content of zero");
  QuadInt g(order_ring(a.order()));
  for (const auto& c : a.basis_coords()) g = gcd(g, c);
  return g;
}

bool is_primitive(const OrderElement& a) { return is_unit(content(a)); }

bool is_odd(const OrderElement& a) {
  if (a.is_zero()) throw Error(Errc::ZeroElement, "parity of zero");
  if (a.order() != OrderId::Hurwitz) throw Error(Errc::UnsupportedOrder, "parity is defined for the Hurwitz order only");
  const Scalar n = reduced_norm(a.q());
  return n.num().a() % 2 != 0;
}

LatticeKey module_lattice(const OrderElement& a, const OrderElement& b) {
  if (a.order() != b.order()) throw Error(Errc::RingMismatch, "elements of different orders");
  if (a.is_zero() || b.is_zero()) throw Error(Errc::ZeroElement, "module of a zero element");
  const OrderId order = a.order();
  const int rank = order_rank(order);
  std::vector<IntVector> gens;
  for (const auto& e : z_basis(order)) gens.push_back(z_coords(order, a.q() * e * b.q()));
  LatticeKey key = hnf_key(gens, rank);
  const Scalar n = field_norm(reduced_norm(a.q()) * reduced_norm(b.q()));
  if (!n.is_integral() || key.index() != mul_checked(n.num().a(), n.num().a()))
    throw Error(Errc::Internal, "module index disagrees with the norm formula");
  return key;
}

std::pair<OrderElement, OrderElement> canonicalize_pair(const Quat& a, const Quat& b, OrderId order) {
  require_ring(order, a);
  require_ring(order, b);
  if (a.is_zero() || b.is_zero()) throw Error(Errc::ZeroElement, "canonical form of a zero pair");
  for (const auto& e : z_basis(order)) {
    if (!in_order(order, a * e * b)) throw Error(Errc::NotSubmodule, "a*O*b is not contained in O");
  }
  const RingId ring = order_ring(order);
  // Clearing the common denominator puts a into ring^4, which lies in O.
  Scalar r(QuadInt(ring, a.den()));
  Quat a1 = a * r;
  Quat b1 = b * r.inverse();
  const Scalar c(content(OrderElement(order, a1)));
  a1 = a1 * c.inverse();
  b1 = b1 * c;
  if (order == OrderId::Hurwitz && !is_odd(OrderElement(order, a1))) {
    // a1 lies in (1+i)J = J(1+i); move that factor across.
    const Quat x = Quat::from_ints({1, 1, 0, 0});
    a1 = a1 * x.inverse();
    b1 = x * b1;
  }
  if (!in_order(order, b1)) throw Error(Errc::Internal, "canonical b left the order");
  return {OrderElement(order, a1), OrderElement(order, b1)};
}

std::array<Quat, 4> scalar_hermite_basis(const std::vector<Quat>& generators) {
  if (generators.empty()) throw Error(Errc::InvalidArgument, "no generators");
  const RingId ring = generators.front().ring();
  i128 den = 1;
  for (const auto& g : generators) den = mul_checked(den / gcd128(den, g.den()), g.den());
  std::vector<std::array<QuadInt, 4>> rows;
  for (const auto& g : generators) {
    std::array<QuadInt, 4> row;
    for (int k = 0; k < 4; ++k) row[k] = g.num()[k] * (den / g.den());
    rows.push_back(row);
  }
  auto combine = [](std::array<QuadInt, 4>& x, const std::array<QuadInt, 4>& y, const QuadInt& q) {
    for (int k = 0; k < 4; ++k) x[k] = x[k] - q * y[k];
  };
  std::array<Quat, 4> out;
  std::size_t top = 0;
  for (int col = 0; col < 4; ++col) {
    // Euclid across the remaining rows until one nonzero entry survives.
    while (true) {
      std::size_t piv = rows.size();
      for (std::size_t r = top; r < rows.size(); ++r) {
        if (rows[r][col].is_zero()) continue;
        if (piv == rows.size() || abs128(norm(rows[r][col])) < abs128(norm(rows[piv][col]))) piv = r;
      }
      if (piv == rows.size()) throw Error(Errc::InvalidArgument, "generators do not span a rank-4 module");
      std::swap(rows[top], rows[piv]);
      bool done = true;
      for (std::size_t r = top + 1; r < rows.size(); ++r) {
        if (rows[r][col].is_zero()) continue;
        combine(rows[r], rows[top], euclid_quotient(rows[r][col], rows[top][col]));
        if (!rows[r][col].is_zero()) done = false;
      }
      if (done) break;
    }
    const QuadInt p = rows[top][col];
    const QuadInt unit = exact_quotient(canonical_associate(p), p);
    for (auto& x : rows[top]) x = x * unit;
    out[col] = Quat(ring, rows[top], den);
    ++top;
  }
  return out;
}

}  // namespace similitude
