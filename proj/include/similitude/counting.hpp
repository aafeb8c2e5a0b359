#pragma once

// Closed-form coefficient rules for the order zeta functions and the
// similarity counting functions, plus their engine-side constructions.

#include <cstdint>
#include <optional>
#include <string_view>

#include "similitude/dirichlet.hpp"
#include "similitude/orders.hpp"
#include "similitude/quadratic.hpp"

namespace similitude {

enum class TargetId {
  HurwitzJ,
  Z4,
  IcosianI,
  CubianK,
  ZetaJ,
  ZetaI,
  ZetaK,
  DedekindTau,
  DedekindSqrt2,
  RiemannZ,
};

inline constexpr TargetId kAllTargets[] = {
    TargetId::HurwitzJ, TargetId::Z4,          TargetId::IcosianI,      TargetId::CubianK,  TargetId::ZetaJ,
    TargetId::ZetaI,    TargetId::ZetaK,       TargetId::DedekindTau,   TargetId::DedekindSqrt2, TargetId::RiemannZ,
};

// Index of the m-th coefficient: m^2 for the order series, m for the
// Dedekind and Riemann series.
enum class IndexKind { Square, Linear };

// Short names used on the command line: f_j, f_z4, f_i, f_k, zeta_j,
// zeta_i, zeta_k, dedekind_tau, dedekind_sqrt2, riemann.
const char* target_name(TargetId target) noexcept;
std::optional<TargetId> parse_target(std::string_view name);
IndexKind index_kind(TargetId target) noexcept;
bool is_ssm_target(TargetId target) noexcept;

// g(n, r) = (r+1) n^r + 2 (1 - (r+1) n^r + r n^{r+1}) / (n-1)^2.
i128 g(i128 n, int r);

i128 dedekind_coeff(RingId ring, std::uint64_t m);
// Number of left ideals of index m^2.
i128 order_zeta_coeff(OrderId order, std::uint64_t m);
// Number of similarity sublattices / submodules of index m^2.
i128 ssm_count(TargetId target, std::uint64_t m);

// Value of the closed form at a prime power; nullopt for ZetaK, which has no
// prime-power formula of its own.
std::optional<i128> prime_power_value(TargetId target, std::uint64_t p, unsigned r);
// Closed-form coefficient at m for any target.
i128 closed_form_coeff(TargetId target, std::uint64_t m);

// Prime-power values of a_K predicted by analogy with a_I (2 ramified,
// +-3 mod 8 inert, +-1 mod 8 split). Not used for counting.
i128 cubian_zeta_analogue(std::uint64_t p, unsigned r);

CoeffSeq closed_form_series(TargetId target, std::size_t n);
// Built only from convolution, inversion, dilation and shifts of the
// Riemann zeta, the characters mod 5 and mod 8, and finite Euler factors.
CoeffSeq engine_series(TargetId target, std::size_t n);
// Both constructions, compared; throws CrossCheckFailure on disagreement.
CoeffSeq series(TargetId target, std::size_t n);

}  // namespace similitude
