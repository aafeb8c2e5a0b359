// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <numeric>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "similitude/asymptotics.hpp"
#include "similitude/counting.hpp"
#include "similitude/error.hpp"
#include "similitude/oracle.hpp"

using namespace similitude;

namespace {

// Pinned tolerances and limits.
constexpr double kSeriesSeconds = 1.0;
constexpr double kIdentitySeconds = 30.0;
constexpr double kOracleSeconds = 300.0;
constexpr double kNumericsSeconds = 60.0;
constexpr double kLValueAbsTol = 1e-5;
constexpr double kZetaRelTol = 1e-6;
constexpr std::uint64_t kZetaTerms = 1'000'000;
constexpr double kCesaroDedekindRelTol = 0.01;
constexpr double kCesaroSlopeRelTol = 0.02;
constexpr std::size_t kCesaroTerms = 1'000'000;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool passed;
  std::string detail;
};

bool report(int n, const std::string& title, const std::function<Outcome()>& body) {
  Outcome o{false, ""};
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  std::printf("[%s] criterion %d: %s: %s\n", o.passed ? "PASS" : "FAIL", n, title.c_str(), o.detail.c_str());
  std::fflush(stdout);
  return o.passed;
}

using Listing = std::vector<std::pair<std::uint64_t, i128>>;

// Coefficients are listed at the index m^2; zero elsewhere up to the last one.
std::string compare_listing(TargetId t, const Listing& at_index) {
  std::map<std::uint64_t, i128> want;
  std::uint64_t top = 0;
  for (const auto& [index, c] : at_index) {
    const auto m = static_cast<std::uint64_t>(isqrt(index));
    if (m * m != index) return "listing index is not a square";
    want[m] = c;
    top = std::max(top, m);
  }
  const CoeffSeq s = series(t, top);
  for (std::uint64_t m = 2; m <= top; ++m) {
    const i128 expect = want.count(m) ? want[m] : 0;
    if (s[m] != expect)
      return std::string(target_name(t)) + " differs at index " + std::to_string(m * m) + ": " + to_string(s[m]) +
             " != " + to_string(expect);
  }
  return "";
}

std::string compare_prefix(TargetId t, const std::vector<i128>& prefix) {
  const CoeffSeq s = series(t, prefix.size());
  for (std::uint64_t m = 1; m <= prefix.size(); ++m)
    if (s[m] != prefix[m - 1]) return std::string(target_name(t)) + " differs at m=" + std::to_string(m);
  return "";
}

Outcome criterion1() {
  const auto t0 = Clock::now();
  std::vector<std::string> errors{
      compare_prefix(TargetId::ZetaJ, {1, 1, 4, 1, 6, 4, 8, 1, 13, 6, 12, 4}),
      compare_listing(TargetId::ZetaI,
                      {{16, 5}, {25, 6}, {81, 10}, {121, 24}, {256, 21}, {361, 40}, {400, 30}, {625, 31}, {841, 60}, {961, 64}}),
      compare_listing(TargetId::ZetaK, {{4, 3}, {16, 7}, {49, 16}, {64, 15}, {81, 10}, {196, 48}, {256, 31}, {289, 36},
                                        {324, 30}, {529, 48}, {625, 26}}),
      compare_prefix(TargetId::HurwitzJ, {1, 1, 8, 1, 12, 8, 16, 1, 41, 12, 24, 8}),
      compare_listing(TargetId::IcosianI, {{16, 10}, {25, 12}, {81, 20}, {121, 48}, {256, 66}, {361, 80}, {400, 120},
                                           {625, 97}, {841, 120}, {961, 128}}),
      compare_listing(TargetId::CubianK, {{4, 6}, {16, 22}, {49, 32}, {64, 66}, {81, 20}, {196, 192}, {256, 178},
                                          {289, 72}, {324, 120}, {529, 96}, {625, 52}}),
  };
  const double dt = seconds_since(t0);
  for (const auto& e : errors)
    if (!e.empty()) return {false, e};
  std::ostringstream d;
  d << "6 series match their listed coefficients in " << dt << " s (limit " << kSeriesSeconds << " s)";
  return {dt < kSeriesSeconds, d.str()};
}

Outcome criterion2() {
  const auto t0 = Clock::now();
  constexpr std::size_t n = 10'000;
  for (TargetId t : kAllTargets) {
    const CoeffSeq engine = engine_series(t, n);
    const CoeffSeq closed = closed_form_series(t, n);
    for (std::uint64_t m = 1; m <= n; ++m)
      if (engine[m] != closed[m])
        return {false, std::string(target_name(t)) + " engine and closed form differ at m=" + std::to_string(m)};
  }
  const double dt = seconds_since(t0);
  std::ostringstream d;
  d << "10 targets agree for m <= " << n << " in " << dt << " s (limit " << kIdentitySeconds << " s)";
  return {dt < kIdentitySeconds, d.str()};
}

Outcome criterion3() {
  const auto t0 = Clock::now();
  const unsigned threads = std::clamp(std::thread::hardware_concurrency(), 1u, 16u);
  std::ostringstream d;
  for (AmbientId id : {AmbientId::Z4, AmbientId::D4star}) {
    const AmbientLattice& lat = ambient_lattice(id);
    const TargetId t = id == AmbientId::Z4 ? TargetId::Z4 : TargetId::HurwitzJ;
    d << lat.name << ":";
    for (std::uint64_t m = 1; m <= 6; ++m) {
      const std::uint64_t got = count_ssl_bruteforce(lat, m, threads);
      const i128 want = ssm_count(t, m);
      d << ' ' << got;
      if (static_cast<i128>(got) != want)
        return {false, std::string(lat.name) + " m=" + std::to_string(m) + ": oracle " + std::to_string(got) +
                           " != formula " + to_string(want)};
    }
    d << "; ";
  }
  const IcosianOracleResult r = enumerate_ssm_icosian(4, threads);
  const std::uint64_t total = r.modules.size(), left = r.count(SsmKind::LeftIdeal), right = r.count(SsmKind::RightIdeal),
                      two = r.count(SsmKind::TwoSided);
  d << "icosian m=4: " << total << " SSMs, " << left << " left, " << right << " right, " << two << " two-sided";
  const double dt = seconds_since(t0);
  d << "; " << dt << " s (limit " << kOracleSeconds << " s)";
  const bool ok = total == 10 && left == 5 && right == 5 && two == 0 && dt < kOracleSeconds;
  return {ok, d.str()};
}

Outcome criterion4() {
  constexpr std::uint64_t n = 10'000;
  const CoeffSeq a = series(TargetId::ZetaJ, n);
  for (std::uint64_t m = 1; m <= n; ++m) {
    i128 s = 0;
    for (std::uint64_t d = 1; d <= m; d += 2)
      if (m % d == 0) s += d;
    if (a[m] != s) return {false, "a_J(" + std::to_string(m) + ") is not the odd divisor sum"};
  }
  std::uint64_t pairs = 0;
  for (TargetId t : kAllTargets) {
    const CoeffSeq f = series(t, n);
    for (std::uint64_t u = 2; u * 2 <= n; ++u)
      for (std::uint64_t v = u + 1; u * v <= n; ++v) {
        if (std::gcd(u, v) != 1) continue;
        ++pairs;
        if (f[u * v] != f[u] * f[v])
          return {false, std::string(target_name(t)) + " not multiplicative at " + std::to_string(u) + "*" +
                             std::to_string(v)};
      }
  }
  for (unsigned r = 0; r <= 20; ++r)
    if (ssm_count(TargetId::HurwitzJ, std::uint64_t{1} << r) != 1)
      return {false, "f_J(2^" + std::to_string(r) + ") != 1"};
  return {true, "odd divisor sums to 10^4, " + std::to_string(pairs) + " coprime pairs over 10 targets, f_J(2^r) = 1 for r <= 20"};
}

Outcome criterion5() {
  const auto t0 = Clock::now();
  std::ostringstream d;
  bool ok = true;
  const double l5 = l_value_at_one(Character::Chi5), l8 = l_value_at_one(Character::Chi8);
  ok = ok && std::abs(l5 - 0.430409) <= kLValueAbsTol && std::abs(l8 - 0.623225) <= kLValueAbsTol;
  d.precision(8);
  d << "L(1,chi5)=" << l5 << " L(1,chi8)=" << l8;
  double worst = 0;
  for (ConstantId id : {ConstantId::Zeta2, ConstantId::Zeta4, ConstantId::DedekindTau2, ConstantId::DedekindTau4,
                        ConstantId::DedekindSqrt2_2, ConstantId::DedekindSqrt2_4})
    worst = std::max(worst, zeta_special_value_check(id, kZetaTerms).relative_error);
  ok = ok && worst <= kZetaRelTol;
  d << "; zeta values worst rel err " << worst;
  const double dm = estimate_constant(closed_form_series(TargetId::DedekindTau, kCesaroTerms), 1.0, 0, kCesaroTerms);
  const double slope = estimate_constant(closed_form_series(TargetId::ZetaJ, kCesaroTerms), 2.0, 0, kCesaroTerms);
  const double pi2 = std::numbers::pi * std::numbers::pi / 24;
  const double e1 = std::abs(dm / 0.430409 - 1), e2 = std::abs(slope / pi2 - 1);
  ok = ok && e1 <= kCesaroDedekindRelTol && e2 <= kCesaroSlopeRelTol;
  d << "; Cesaro dedekind_tau " << dm << " (rel " << e1 << "), a_J slope " << slope << " (rel " << e2 << ")";
  const double dt = seconds_since(t0);
  d << "; " << dt << " s (limit " << kNumericsSeconds << " s)";
  return {ok && dt < kNumericsSeconds, d.str()};
}

Outcome criterion6() {
  const std::array<std::uint64_t, 3> points{10'000, 30'000, 100'000};
  const std::array<std::pair<ConstantId, double>, 4> targets{
      {{ConstantId::CJ, 0.25}, {ConstantId::CZ4, 0.375}, {ConstantId::SlopeFI, 0.124271}, {ConstantId::SlopeFK, 0.374519}}};
  std::ostringstream d;
  d.precision(6);
  bool ok = true;
  for (const auto& [id, target] : targets) {
    const GrowthTarget gt = *growth_target(id);
    const CoeffSeq a = series(gt.series, points.back());
    d << constant_info(id).name << ":";
    double prev = INFINITY;
    for (std::uint64_t n : points) {
      const double e = estimate_constant(a, gt.model.alpha, gt.model.logpower, n);
      d << ' ' << e;
      ok = ok && e > target && e < prev;
      prev = e;
    }
    d << " (target " << target << "); ";
  }
  return {ok, d.str()};
}

std::string capture(const std::string& args) {
  const std::string cmd = "\"" SIMILITUDE_CLI_PATH "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("cannot start the CLI");
  std::string out;
  char buf[4096];
  std::size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  if (pclose(pipe) != 0) throw std::runtime_error("CLI failed: " + args);
  return out;
}

Outcome criterion7() {
  const std::vector<std::string> commands{
      "series --target f_i --terms 10000",
      "series --target f_k --terms 10000 --format json",
      "oracle --lattice z4 --max-m 6",
      "oracle --lattice d4star --max-m 6 --format json",
      "oracle --module icosian --max-m 9",
  };
  for (const auto& c : commands) {
    const std::string base = capture(c + " --threads 1");
    for (int t : {4, 8})
      if (capture(c + " --threads " + std::to_string(t)) != base)
        return {false, "output of '" + c + "' changes with --threads " + std::to_string(t)};
  }
  return {true, std::to_string(commands.size()) + " commands byte-identical at --threads 1, 4, 8"};
}

}  // namespace

int main() {
  bool all = true;
  all &= report(1, "series reproduction", criterion1);
  all &= report(2, "identity cross-check", criterion2);
  all &= report(3, "oracle equality", criterion3);
  all &= report(4, "arithmetic identities", criterion4);
  all &= report(5, "numerics", criterion5);
  all &= report(6, "asymptotic trend", criterion6);
  all &= report(7, "determinism", criterion7);
  return all ? 0 : 1;
}
