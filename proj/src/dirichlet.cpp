#include "similitude/dirichlet.hpp"

#include <numeric>

#include "similitude/error.hpp"
#include "similitude/primes.hpp"

namespace similitude {

CoeffSeq::CoeffSeq(std::size_t n) : values_(n, 0) {
  if (n == 0) throw Error(Errc::InvalidArgument, "series length must be at least 1");
}

CoeffSeq::CoeffSeq(std::vector<i128> values) : values_(std::move(values)) {
  if (values_.empty()) throw Error(Errc::InvalidArgument, "series length must be at least 1");
}

CoeffSeq CoeffSeq::epsilon(std::size_t n) {
  CoeffSeq e(n);
  e[1] = 1;
  return e;
}

CoeffSeq CoeffSeq::ones(std::size_t n) { return CoeffSeq(std::vector<i128>(n, 1)); }

CoeffSeq CoeffSeq::from_terms(std::size_t n, std::initializer_list<std::pair<std::uint64_t, i128>> terms) {
  CoeffSeq s(n);
  for (const auto& [m, c] : terms) {
    if (m == 0) throw Error(Errc::InvalidArgument, "series index must be positive");
    if (m <= n) s[m] = add_checked(s[m], c);
  }
  return s;
}

namespace {

void require_same_length(const CoeffSeq& x, const CoeffSeq& y) {
  if (x.size() != y.size()) throw Error(Errc::LengthMismatch, "series lengths differ");
}

}  // namespace

CoeffSeq convolve(const CoeffSeq& x, const CoeffSeq& y) {
  require_same_length(x, y);
  const std::uint64_t n = x.size();
  CoeffSeq out(n);
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (x[d] == 0) continue;
    for (std::uint64_t e = 1; d * e <= n; ++e) {
      if (y[e] == 0) continue;
      out[d * e] = add_checked(out[d * e], mul_checked(x[d], y[e]));
    }
  }
  return out;
}

CoeffSeq add(const CoeffSeq& x, const CoeffSeq& y) {
  require_same_length(x, y);
  CoeffSeq out(x.size());
  for (std::uint64_t m = 1; m <= x.size(); ++m) out[m] = add_checked(x[m], y[m]);
  return out;
}

CoeffSeq dirichlet_inverse(const CoeffSeq& x) {
  const i128 lead = x[1];
  if (lead != 1 && lead != -1) throw Error(Errc::NonInvertible, "leading coefficient is not a unit");
  const std::uint64_t n = x.size();
  // acc[m] collects sum over d > 1, d | m of x(d) b(m/d); b(m) = -acc[m] / x(1).
  CoeffSeq b(n);
  std::vector<i128> acc(n + 1, 0);
  for (std::uint64_t m = 1; m <= n; ++m) {
    b[m] = m == 1 ? lead : mul_checked(-acc[m], lead);
    if (b[m] == 0) continue;
    for (std::uint64_t d = 2; d * m <= n; ++d) {
      if (x[d] != 0) acc[d * m] = add_checked(acc[d * m], mul_checked(x[d], b[m]));
    }
  }
  return b;
}

CoeffSeq dilate(const CoeffSeq& x, unsigned k) {
  if (k == 0) throw Error(Errc::InvalidArgument, "dilation factor must be positive");
  const std::uint64_t n = x.size();
  CoeffSeq out(n);
  for (std::uint64_t m = 1;; ++m) {
    i128 p = 1;
    bool fits = true;
    for (unsigned i = 0; i < k && fits; ++i) {
      p *= m;
      fits = p <= static_cast<i128>(n);
    }
    if (!fits) break;
    out[static_cast<std::uint64_t>(p)] = x[m];
  }
  return out;
}

CoeffSeq shift(const CoeffSeq& x) {
  CoeffSeq out(x.size());
  for (std::uint64_t m = 1; m <= x.size(); ++m) out[m] = mul_checked(x[m], static_cast<i128>(m));
  return out;
}

CoeffSeq from_multiplicative(const PrimePowerRule& rule, std::size_t n) {
  const std::vector<std::uint32_t> spf = smallest_prime_factors(static_cast<std::uint32_t>(n));
  CoeffSeq out(n);
  out[1] = 1;
  for (std::uint64_t m = 2; m <= n; ++m) {
    const std::uint64_t p = spf[m];
    std::uint64_t rest = m;
    unsigned r = 0;
    while (rest % p == 0) {
      rest /= p;
      ++r;
    }
    if (rest == 1) {
      if (r == 1 && rule(p, 0) != 1) throw Error(Errc::BadNormalization, "prime-power rule gives a(p^0) != 1");
      out[m] = rule(p, r);
    } else {
      out[m] = mul_checked(out[m / rest], out[rest]);
    }
  }
  return out;
}

std::uint64_t first_multiplicativity_failure(const CoeffSeq& x) {
  const std::uint64_t n = x.size();
  if (x[1] != 1) return 1;
  for (std::uint64_t u = 2; u <= n; ++u) {
    for (std::uint64_t v = u + 1; u * v <= n; ++v) {
      if (std::gcd(u, v) != 1) continue;
      if (x[u * v] != mul_checked(x[u], x[v])) return u * v;
    }
  }
  return 0;
}

bool is_multiplicative(const CoeffSeq& x) { return first_multiplicativity_failure(x) == 0; }

i128 partial_sum(const CoeffSeq& a, std::uint64_t x) {
  i128 s = 0;
  const std::uint64_t top = std::min<std::uint64_t>(x, a.size());
  for (std::uint64_t m = 1; m <= top; ++m) s = add_checked(s, a[m]);
  return s;
}

}  // namespace similitude
