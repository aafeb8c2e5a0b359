#include "similitude/verify.hpp"

#include "similitude/error.hpp"
#include "similitude/primes.hpp"

namespace similitude {

namespace {

CheckResult engine_identity(TargetId target, const CoeffSeq& closed, std::size_t n) {
  const CoeffSeq engine = engine_series(target, n);
  for (std::uint64_t m = 1; m <= n; ++m) {
    if (closed[m] != engine[m])
      return {"engine_identity", false, false,
              "first difference at m = " + std::to_string(m) + ": closed form " + to_string(closed[m]) + ", engine " +
                  to_string(engine[m])};
  }
  return {"engine_identity", true, false, "closed form equals the generating-function identity for m <= " + std::to_string(n)};
}

CheckResult multiplicativity(const CoeffSeq& closed) {
  const auto bad = first_multiplicativity_failure(closed);
  if (bad != 0) return {"multiplicativity", false, false, "fails at m = " + std::to_string(bad)};
  return {"multiplicativity", true, false, "a(uv) = a(u) a(v) for all coprime uv <= " + std::to_string(closed.size())};
}

CheckResult representability(const CoeffSeq& closed, RingId ring) {
  for (std::uint64_t m = 1; m <= closed.size(); ++m) {
    if ((closed[m] != 0) != is_representable_index(m, ring))
      return {"representability", false, false, "support differs from the norm form at m = " + std::to_string(m)};
  }
  return {"representability", true, false, std::string("nonzero exactly at norms from ") + ring_name(ring)};
}

CheckResult odd_divisor_sum(const CoeffSeq& closed) {
  const std::uint64_t n = closed.size();
  std::vector<i128> sigma(n + 1, 0);
  for (std::uint64_t d = 1; d <= n; d += 2)
    for (std::uint64_t k = d; k <= n; k += d) sigma[k] += static_cast<i128>(d);
  for (std::uint64_t m = 1; m <= n; ++m)
    if (closed[m] != sigma[m]) return {"odd_divisor_sum", false, false, "differs at m = " + std::to_string(m)};
  return {"odd_divisor_sum", true, false, "a_J(m) is the sum of the odd divisors of m"};
}

CheckResult dyadic_uniqueness() {
  for (unsigned r = 0; r <= 20; ++r) {
    if (ssm_count(TargetId::HurwitzJ, std::uint64_t{1} << r) != 1)
      return {"dyadic_uniqueness", false, false, "f_J(2^" + std::to_string(r) + ") != 1"};
  }
  return {"dyadic_uniqueness", true, false, "f_J(2^r) = 1 for r <= 20"};
}

CheckResult z4_vs_hurwitz(const CoeffSeq& z4, std::size_t n) {
  const CoeffSeq j = closed_form_series(TargetId::HurwitzJ, n);
  for (std::uint64_t m = 1; m <= n; ++m) {
    const i128 expect = m % 2 == 0 ? 3 * j[m] : j[m];
    if (z4[m] != expect) return {"z4_vs_hurwitz", false, false, "differs at m = " + std::to_string(m)};
  }
  return {"z4_vs_hurwitz", true, false, "f_Z4(m) = f_J(m) for odd m and 3 f_J(m) for even m"};
}

CheckResult split_prime_values(const CoeffSeq& closed, RingId ring) {
  std::uint64_t checked = 0;
  for (std::uint64_t p = 2; p <= closed.size(); ++p) {
    if (!is_prime(p) || prime_class(p, ring) != PrimeClass::Split) continue;
    ++checked;
    const i128 q = static_cast<i128>(p);
    if (closed[p] != 2 * g(q, 0) * g(q, 1)) return {"split_prime_values", false, false, "fails at p = " + std::to_string(p)};
  }
  return {"split_prime_values", true, false, "f(p) = 2 g(p,0) g(p,1) at " + std::to_string(checked) + " split primes"};
}

CheckResult cubian_analogue(const CoeffSeq& closed) {
  std::uint64_t checked = 0;
  for (std::uint64_t p = 2; p <= closed.size(); ++p) {
    if (!is_prime(p)) continue;
    std::uint64_t pr = p;
    for (unsigned r = 1; pr <= closed.size(); ++r, pr *= p) {
      ++checked;
      if (closed[pr] != cubian_zeta_analogue(p, r))
        return {"prime_power_analogue", false, true, "a_K(" + std::to_string(pr) + ") differs from the analogue"};
      if (pr > closed.size() / p) break;
    }
  }
  return {"prime_power_analogue", true, true,
          "a_K matches the icosian-style prime-power formula at " + std::to_string(checked) + " prime powers"};
}

}  // namespace

std::vector<CheckResult> verify_target(TargetId target, std::size_t n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "terms must be >= 1");
  const CoeffSeq closed = closed_form_series(target, n);
  std::vector<CheckResult> out;
  out.push_back(engine_identity(target, closed, n));
  out.push_back(multiplicativity(closed));
  switch (target) {
    case TargetId::HurwitzJ: out.push_back(dyadic_uniqueness()); break;
    case TargetId::Z4: out.push_back(z4_vs_hurwitz(closed, n)); break;
    case TargetId::IcosianI:
      out.push_back(representability(closed, RingId::GoldenInt));
      out.push_back(split_prime_values(closed, RingId::GoldenInt));
      break;
    case TargetId::CubianK:
      out.push_back(representability(closed, RingId::Sqrt2Int));
      out.push_back(split_prime_values(closed, RingId::Sqrt2Int));
      break;
    case TargetId::ZetaJ: out.push_back(odd_divisor_sum(closed)); break;
    case TargetId::ZetaI:
    case TargetId::DedekindTau: out.push_back(representability(closed, RingId::GoldenInt)); break;
    case TargetId::ZetaK:
      out.push_back(representability(closed, RingId::Sqrt2Int));
      out.push_back(cubian_analogue(closed));
      break;
    case TargetId::DedekindSqrt2: out.push_back(representability(closed, RingId::Sqrt2Int)); break;
    case TargetId::RiemannZ: break;
  }
  return out;
}

}  // namespace similitude
