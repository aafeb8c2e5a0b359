#include "similitude/counting.hpp"

#include <array>

#include "similitude/error.hpp"
#include "similitude/primes.hpp"

namespace similitude {

namespace {

struct TargetInfo {
  TargetId id;
  const char* name;
};

constexpr std::array<TargetInfo, 10> kTargetNames{{
    {TargetId::HurwitzJ, "f_j"},
    {TargetId::Z4, "f_z4"},
    {TargetId::IcosianI, "f_i"},
    {TargetId::CubianK, "f_k"},
    {TargetId::ZetaJ, "zeta_j"},
    {TargetId::ZetaI, "zeta_i"},
    {TargetId::ZetaK, "zeta_k"},
    {TargetId::DedekindTau, "dedekind_tau"},
    {TargetId::DedekindSqrt2, "dedekind_sqrt2"},
    {TargetId::RiemannZ, "riemann"},
}};

// (p^{r+1} - 1) / (p - 1) = 1 + p + ... + p^r
i128 geometric(i128 p, int r) {
  i128 s = 0;
  i128 t = 1;
  for (int i = 0; i <= r; ++i) {
    s = add_checked(s, t);
    if (i < r) t = mul_checked(t, p);
  }
  return s;
}

i128 dedekind_pp(RingId ring, std::uint64_t p, unsigned r) {
  if (ring == RingId::RationalInt) return 1;
  switch (prime_class(p, ring)) {
    case PrimeClass::Ramified: return 1;
    case PrimeClass::Split: return r + 1;
    case PrimeClass::Inert: return r % 2 == 0 ? 1 : 0;
  }
  return 0;
}

// Shared shape of a_I and the a_K analogue.
i128 order_zeta_pp(RingId ring, std::uint64_t p, unsigned r) {
  const i128 q = static_cast<i128>(p);
  switch (prime_class(p, ring)) {
    case PrimeClass::Ramified: return geometric(q, static_cast<int>(r));
    case PrimeClass::Inert: return r % 2 == 0 ? geometric(mul_checked(q, q), static_cast<int>(r / 2)) : 0;
    case PrimeClass::Split: {
      i128 s = 0;
      for (unsigned l = 0; l <= r; ++l)
        s = add_checked(s, mul_checked(static_cast<i128>((l + 1) * (r - l + 1)), pow_checked(q, l)));
      return s;
    }
  }
  return 0;
}

// The common shape of f_I and f_K.
i128 ssm_module_pp(RingId ring, std::uint64_t p, unsigned r) {
  const i128 q = static_cast<i128>(p);
  switch (prime_class(p, ring)) {
    case PrimeClass::Ramified: return g(q, static_cast<int>(r));
    case PrimeClass::Inert: return r % 2 == 0 ? g(mul_checked(q, q), static_cast<int>(r / 2)) : 0;
    case PrimeClass::Split: {
      i128 s = 0;
      for (unsigned t = 0; t <= r; ++t)
        s = add_checked(s, mul_checked(g(q, static_cast<int>(t)), g(q, static_cast<int>(r - t))));
      return s;
    }
  }
  return 0;
}

i128 multiplicative_value(TargetId target, std::uint64_t m) {
  if (m == 0) throw Error(Errc::InvalidArgument, "index must be positive");
  i128 v = 1;
  for (const auto& pp : factorize(m)) {
    v = mul_checked(v, *prime_power_value(target, pp.prime, pp.exponent));
    if (v == 0) break;
  }
  return v;
}

// sum over d e = m of D(d) D(e) e
i128 cubian_zeta_divisor_sum(std::uint64_t m) {
  i128 s = 0;
  for (std::uint64_t d = 1; d * d <= m; ++d) {
    if (m % d != 0) continue;
    const std::uint64_t e = m / d;
    const i128 dd = dedekind_coeff(RingId::Sqrt2Int, d);
    const i128 de = dedekind_coeff(RingId::Sqrt2Int, e);
    if (dd == 0 || de == 0) continue;
    s = add_checked(s, mul_checked(mul_checked(dd, de), static_cast<i128>(e)));
    if (d != e) s = add_checked(s, mul_checked(mul_checked(dd, de), static_cast<i128>(d)));
  }
  return s;
}

CoeffSeq character(std::size_t n, std::uint64_t modulus) {
  CoeffSeq chi(n);
  for (std::uint64_t m = 1; m <= n; ++m) {
    const std::uint64_t r = m % modulus;
    if (modulus == 5) chi[m] = (r == 1 || r == 4) ? 1 : (r == 2 || r == 3) ? -1 : 0;
    else chi[m] = (r == 1 || r == 7) ? 1 : (r == 3 || r == 5) ? -1 : 0;
  }
  return chi;
}

CoeffSeq riemann_engine(std::size_t n) {
  // zeta = 1 / prod (1 - p^{-s})
  const CoeffSeq mobius = from_multiplicative([](std::uint64_t, unsigned r) -> i128 { return r == 0 ? 1 : r == 1 ? -1 : 0; }, n);
  return dirichlet_inverse(mobius);
}

CoeffSeq dedekind_engine(std::size_t n, std::uint64_t modulus) {
  return convolve(riemann_engine(n), character(n, modulus));
}

// zeta_K(2s) zeta_K(2s - 1), m-indexed
CoeffSeq module_zeta_engine(std::size_t n, std::uint64_t modulus) {
  const CoeffSeq d = dedekind_engine(n, modulus);
  return convolve(d, shift(d));
}

CoeffSeq hurwitz_zeta_engine(std::size_t n) {
  const CoeffSeq ones = riemann_engine(n);
  return convolve(convolve(CoeffSeq::from_terms(n, {{1, 1}, {2, -2}}), ones), shift(ones));
}

CoeffSeq module_ssm_engine(std::size_t n, std::uint64_t modulus) {
  const CoeffSeq z = module_zeta_engine(n, modulus);
  return convolve(convolve(z, z), dirichlet_inverse(dilate(dedekind_engine(n, modulus), 2)));
}

CoeffSeq hurwitz_ssm_engine(std::size_t n) {
  const CoeffSeq z = hurwitz_zeta_engine(n);
  const CoeffSeq correction = dirichlet_inverse(CoeffSeq::from_terms(n, {{1, 1}, {2, 1}}));
  const CoeffSeq zeta4 = dirichlet_inverse(dilate(riemann_engine(n), 2));
  return convolve(convolve(convolve(z, z), correction), zeta4);
}

}  // namespace

const char* target_name(TargetId target) noexcept {
  for (const auto& t : kTargetNames)
    if (t.id == target) return t.name;
  return "?";
}

std::optional<TargetId> parse_target(std::string_view name) {
  for (const auto& t : kTargetNames)
    if (name == t.name) return t.id;
  return std::nullopt;
}

IndexKind index_kind(TargetId target) noexcept {
  switch (target) {
    case TargetId::DedekindTau:
    case TargetId::DedekindSqrt2:
    case TargetId::RiemannZ: return IndexKind::Linear;
    default: return IndexKind::Square;
  }
}

bool is_ssm_target(TargetId target) noexcept {
  return target == TargetId::HurwitzJ || target == TargetId::Z4 || target == TargetId::IcosianI ||
         target == TargetId::CubianK;
}

i128 g(i128 n, int r) {
  if (n <= 1 || r < 0) throw Error(Errc::DomainError, "g(n, r) needs n >= 2 and r >= 0");
  const i128 nr = pow_checked(n, static_cast<unsigned>(r));
  const i128 lead = mul_checked(r + 1, nr);
  const i128 num = add_checked(sub_checked(1, lead), mul_checked(r, mul_checked(nr, n)));
  const i128 den = mul_checked(n - 1, n - 1);
  if (num % den != 0) throw Error(Errc::Internal, "g(n, r) is not integral");
  return add_checked(lead, mul_checked(2, num / den));
}

i128 dedekind_coeff(RingId ring, std::uint64_t m) {
  if (m == 0) throw Error(Errc::InvalidArgument, "index must be positive");
  if (ring == RingId::RationalInt) return 1;
  return multiplicative_value(ring == RingId::GoldenInt ? TargetId::DedekindTau : TargetId::DedekindSqrt2, m);
}

i128 order_zeta_coeff(OrderId order, std::uint64_t m) {
  switch (order) {
    case OrderId::Hurwitz: return multiplicative_value(TargetId::ZetaJ, m);
    case OrderId::Icosian: return multiplicative_value(TargetId::ZetaI, m);
    case OrderId::Cubian:
      if (m == 0) throw Error(Errc::InvalidArgument, "index must be positive");
      return cubian_zeta_divisor_sum(m);
  }
  throw Error(Errc::Internal, "bad order");
}

i128 ssm_count(TargetId target, std::uint64_t m) {
  if (!is_ssm_target(target)) throw Error(Errc::InvalidArgument, "not a similarity counting target");
  return multiplicative_value(target, m);
}

std::optional<i128> prime_power_value(TargetId target, std::uint64_t p, unsigned r) {
  const i128 q = static_cast<i128>(p);
  switch (target) {
    case TargetId::HurwitzJ: return p == 2 ? 1 : g(q, static_cast<int>(r));
    case TargetId::Z4:
      if (p == 2) return r == 0 ? 1 : 3;
      return g(q, static_cast<int>(r));
    case TargetId::IcosianI: return ssm_module_pp(RingId::GoldenInt, p, r);
    case TargetId::CubianK: return ssm_module_pp(RingId::Sqrt2Int, p, r);
    case TargetId::ZetaJ: return p == 2 ? 1 : geometric(q, static_cast<int>(r));
    case TargetId::ZetaI: return order_zeta_pp(RingId::GoldenInt, p, r);
    case TargetId::ZetaK: return std::nullopt;
    case TargetId::DedekindTau: return dedekind_pp(RingId::GoldenInt, p, r);
    case TargetId::DedekindSqrt2: return dedekind_pp(RingId::Sqrt2Int, p, r);
    case TargetId::RiemannZ: return 1;
  }
  return std::nullopt;
}

i128 closed_form_coeff(TargetId target, std::uint64_t m) {
  switch (target) {
    case TargetId::ZetaK: return order_zeta_coeff(OrderId::Cubian, m);
    case TargetId::RiemannZ:
      if (m == 0) throw Error(Errc::InvalidArgument, "index must be positive");
      return 1;
    default: return multiplicative_value(target, m);
  }
}

i128 cubian_zeta_analogue(std::uint64_t p, unsigned r) { return order_zeta_pp(RingId::Sqrt2Int, p, r); }

CoeffSeq closed_form_series(TargetId target, std::size_t n) {
  if (target == TargetId::ZetaK) {
    // the same divisor sum as cubian_zeta_divisor_sum, organised as a sieve
    const CoeffSeq d = closed_form_series(TargetId::DedekindSqrt2, n);
    CoeffSeq out(n);
    for (std::uint64_t a = 1; a <= n; ++a) {
      if (d[a] == 0) continue;
      for (std::uint64_t b = 1; a * b <= n; ++b)
        if (d[b] != 0) out[a * b] = add_checked(out[a * b], mul_checked(mul_checked(d[a], d[b]), static_cast<i128>(b)));
    }
    return out;
  }
  CoeffSeq out(n);
  for (std::uint64_t m = 1; m <= n; ++m) out[m] = closed_form_coeff(target, m);
  return out;
}

CoeffSeq engine_series(TargetId target, std::size_t n) {
  switch (target) {
    case TargetId::RiemannZ: return riemann_engine(n);
    case TargetId::DedekindTau: return dedekind_engine(n, 5);
    case TargetId::DedekindSqrt2: return dedekind_engine(n, 8);
    case TargetId::ZetaJ: return hurwitz_zeta_engine(n);
    case TargetId::ZetaI: return module_zeta_engine(n, 5);
    case TargetId::ZetaK: return module_zeta_engine(n, 8);
    case TargetId::HurwitzJ: return hurwitz_ssm_engine(n);
    case TargetId::Z4: return convolve(CoeffSeq::from_terms(n, {{1, 1}, {2, 2}}), hurwitz_ssm_engine(n));
    case TargetId::IcosianI: return module_ssm_engine(n, 5);
    case TargetId::CubianK: return module_ssm_engine(n, 8);
  }
  throw Error(Errc::Internal, "bad target");
}

CoeffSeq series(TargetId target, std::size_t n) {
  CoeffSeq closed = closed_form_series(target, n);
  const CoeffSeq engine = engine_series(target, n);
  for (std::uint64_t m = 1; m <= n; ++m) {
    if (closed[m] != engine[m])
      throw Error(Errc::CrossCheckFailure, std::string(target_name(target)) + ": closed form and engine differ at m = " +
                                               std::to_string(m) + " (" + to_string(closed[m]) + " vs " +
                                               to_string(engine[m]) + ")");
  }
  return closed;
}

}  // namespace similitude
