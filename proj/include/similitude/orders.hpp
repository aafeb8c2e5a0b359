#pragma once

// The maximal orders J (Hurwitz), I (icosian) and K (cubian).

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "similitude/lattice.hpp"
#include "similitude/quaternion.hpp"

namespace similitude {

enum class OrderId { Hurwitz, Icosian, Cubian };

const char* order_name(OrderId order) noexcept;
RingId order_ring(OrderId order) noexcept;
// Z-rank of the order: 4 for J, 8 for I and K.
int order_rank(OrderId order) noexcept;

// Fixed basis of the order as a free module over its ring of scalars.
const std::array<Quat, 4>& order_basis(OrderId order);

// Coordinates of q in order_basis(order); empty when q is not in the order.
std::optional<std::array<QuadInt, 4>> order_coords(OrderId order, const Quat& q);

// Rational coordinates in order_basis(order); always defined.
std::array<Scalar, 4> field_coords(OrderId order, const Quat& q);

bool in_order(OrderId order, const Quat& q);

// Integer coordinates w.r.t. the Z-basis {f0, w*f0, f1, w*f1, ...} (just
// {f0..f3} for J). q must lie in the order.
IntVector z_coords(OrderId order, const Quat& q);

// The Z-basis matching z_coords.
std::vector<Quat> z_basis(OrderId order);

class OrderElement {
 public:
  // Throws InvalidArgument if q is not in the order.
  OrderElement(OrderId order, Quat q);

  OrderId order() const noexcept { return order_; }
  const Quat& q() const noexcept { return q_; }
  const std::array<QuadInt, 4>& basis_coords() const noexcept { return coords_; }
  bool is_zero() const noexcept { return q_.is_zero(); }

  friend bool operator==(const OrderElement& x, const OrderElement& y) { return x.order_ == y.order_ && x.q_ == y.q_; }

 private:
  OrderId order_;
  Quat q_;
  std::array<QuadInt, 4> coords_;
};

// Finite group of reduced-norm-1 units, sorted; computed once per order.
const std::vector<OrderElement>& unit_group(OrderId order);

// Canonical generator of the scalar ideal A(a)^{-1}.
QuadInt content(const OrderElement& a);
bool is_primitive(const OrderElement& a);
// Hurwitz only: odd reduced norm.
bool is_odd(const OrderElement& a);

// The Z-module a*O*b in order coordinates.
LatticeKey module_lattice(const OrderElement& a, const OrderElement& b);

// Rewrites a*O*b as a'*O*b' with a' primitive (and odd for J) and b' in O.
std::pair<OrderElement, OrderElement> canonicalize_pair(const Quat& a, const Quat& b, OrderId order);

// Hermite reduction over the ring of scalars: a triangular basis (as a
// module over Z, Z[tau] or Z[sqrt2]) of the span of the given quaternions.
std::array<Quat, 4> scalar_hermite_basis(const std::vector<Quat>& generators);

}  // namespace similitude
