#include "similitude/asymptotics.hpp"

#include <cmath>
#include <numbers>

#include "similitude/error.hpp"

namespace similitude {

namespace {

constexpr double kPi = std::numbers::pi;
const double kLogTau = std::log(std::numbers::phi);
const double kLogSilver = std::log(1.0 + std::numbers::sqrt2);
const double kSqrt5 = std::sqrt(5.0);
const double kSqrt2 = std::numbers::sqrt2;

// Neumaier's compensated summation.
class Summer {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace

const std::vector<ConstantInfo>& constant_table() {
  static const std::vector<ConstantInfo> table{
      {ConstantId::ResidueDedekindTau, "residue_dedekind_tau", "2*log(tau)/sqrt(5)", false},
      {ConstantId::ResidueDedekindSqrt2, "residue_dedekind_sqrt2", "log(1+sqrt(2))/sqrt(2)", false},
      {ConstantId::SlopeAJ, "slope_a_J", "pi^2/24", false},
      {ConstantId::SlopeAI, "slope_a_I", "2*pi^4*log(tau)/375", false},
      {ConstantId::SlopeAK, "slope_a_K", "pi^4*log(1+sqrt(2))/192", true},
      {ConstantId::CJ, "C_J", "1/4", false},
      {ConstantId::CZ4, "C_Z4", "3/8", false},
      {ConstantId::SlopeFI, "slope_f_i", "6*log(tau)^2/(5*sqrt(5))", false},
      {ConstantId::SlopeFK, "slope_f_k", "15*log(1+sqrt(2))^2/(22*sqrt(2))", false},
      {ConstantId::Zeta2, "zeta_2", "pi^2/6", false},
      {ConstantId::Zeta4, "zeta_4", "pi^4/90", false},
      {ConstantId::DedekindTau2, "dedekind_tau_2", "2*pi^4/(75*sqrt(5))", false},
      {ConstantId::DedekindTau4, "dedekind_tau_4", "4*pi^8/(16875*sqrt(5))", false},
      {ConstantId::DedekindSqrt2_2, "dedekind_sqrt2_2", "pi^4/(48*sqrt(2))", false},
      {ConstantId::DedekindSqrt2_4, "dedekind_sqrt2_4", "11*pi^8/(69120*sqrt(2))", false},
  };
  return table;
}

std::optional<ConstantId> parse_constant(std::string_view name) {
  for (const auto& c : constant_table())
    if (name == c.name) return c.id;
  return std::nullopt;
}

const ConstantInfo& constant_info(ConstantId id) {
  for (const auto& c : constant_table())
    if (c.id == id) return c;
  throw Error(Errc::UnknownConstant, "unknown constant");
}

double target_constant(ConstantId id) {
  const double pi2 = kPi * kPi;
  const double pi4 = pi2 * pi2;
  const double pi8 = pi4 * pi4;
  switch (id) {
    case ConstantId::ResidueDedekindTau: return 2.0 * kLogTau / kSqrt5;
    case ConstantId::ResidueDedekindSqrt2: return kLogSilver / kSqrt2;
    case ConstantId::SlopeAJ: return pi2 / 24.0;
    case ConstantId::SlopeAI: return 2.0 * pi4 * kLogTau / 375.0;
    case ConstantId::SlopeAK: return pi4 * kLogSilver / 192.0;
    case ConstantId::CJ: return 0.25;
    case ConstantId::CZ4: return 0.375;
    case ConstantId::SlopeFI: return 6.0 * kLogTau * kLogTau / (5.0 * kSqrt5);
    case ConstantId::SlopeFK: return 15.0 * kLogSilver * kLogSilver / (22.0 * kSqrt2);
    case ConstantId::Zeta2: return pi2 / 6.0;
    case ConstantId::Zeta4: return pi4 / 90.0;
    case ConstantId::DedekindTau2: return 2.0 * pi4 / (75.0 * kSqrt5);
    case ConstantId::DedekindTau4: return 4.0 * pi8 / (16875.0 * kSqrt5);
    case ConstantId::DedekindSqrt2_2: return pi4 / (48.0 * kSqrt2);
    case ConstantId::DedekindSqrt2_4: return 11.0 * pi8 / (69120.0 * kSqrt2);
  }
  throw Error(Errc::UnknownConstant, "unknown constant");
}

double target_constant(std::string_view name) {
  const auto id = parse_constant(name);
  if (!id) throw Error(Errc::UnknownConstant, "unknown constant '" + std::string(name) + "'");
  return target_constant(*id);
}

std::optional<GrowthTarget> growth_target(ConstantId id) {
  const double c = target_constant(id);
  switch (id) {
    case ConstantId::ResidueDedekindTau: return GrowthTarget{TargetId::DedekindTau, {1.0, 0, c}};
    case ConstantId::ResidueDedekindSqrt2: return GrowthTarget{TargetId::DedekindSqrt2, {1.0, 0, c}};
    case ConstantId::SlopeAJ: return GrowthTarget{TargetId::ZetaJ, {2.0, 0, c}};
    case ConstantId::SlopeAI: return GrowthTarget{TargetId::ZetaI, {2.0, 0, c}};
    case ConstantId::SlopeAK: return GrowthTarget{TargetId::ZetaK, {2.0, 0, c}};
    case ConstantId::CJ: return GrowthTarget{TargetId::HurwitzJ, {2.0, 1, c}};
    case ConstantId::CZ4: return GrowthTarget{TargetId::Z4, {2.0, 1, c}};
    case ConstantId::SlopeFI: return GrowthTarget{TargetId::IcosianI, {2.0, 1, c}};
    case ConstantId::SlopeFK: return GrowthTarget{TargetId::CubianK, {2.0, 1, c}};
    default: return std::nullopt;
  }
}

double estimate_constant(const CoeffSeq& a, double alpha, int logpower, std::uint64_t x) {
  if (x == 0 || x > a.size()) throw Error(Errc::InvalidArgument, "estimate point outside the series");
  const double xd = static_cast<double>(x);
  const double den = std::pow(xd, alpha) * std::pow(std::log(xd), logpower);
  if (!(den > 0.0) || !std::isfinite(den)) throw Error(Errc::DegenerateModel, "growth model vanishes at x = " + std::to_string(x));
  return static_cast<double>(partial_sum(a, x)) / den;
}

std::vector<TrendPoint> estimate_trend(const CoeffSeq& a, double alpha, int logpower) {
  std::vector<TrendPoint> out;
  for (std::uint64_t n : {a.size(), a.size() / 2, a.size() / 4}) {
    if (n == 0) break;
    out.push_back({n, estimate_constant(a, alpha, logpower, n)});
  }
  return out;
}

int character_value(Character chi, std::uint64_t m) noexcept {
  if (chi == Character::Chi5) {
    const auto r = m % 5;
    return (r == 1 || r == 4) ? 1 : (r == 2 || r == 3) ? -1 : 0;
  }
  const auto r = m % 8;
  return (r == 1 || r == 7) ? 1 : (r == 3 || r == 5) ? -1 : 0;
}

double l_value_at_one(Character chi, std::uint64_t terms) {
  const std::uint64_t q = chi == Character::Chi5 ? 5 : 8;
  const std::uint64_t periods = std::max<std::uint64_t>(terms / q, 1);
  Summer s;
  // Whole periods, each summed as one block so the cancellation happens
  // inside the block.
  for (std::uint64_t k = 0; k < periods; ++k) {
    double block = 0.0;
    for (std::uint64_t r = 1; r <= q; ++r) {
      const int c = character_value(chi, r);
      if (c != 0) block += c / static_cast<double>(k * q + r);
    }
    s.add(block);
  }
  // Remaining periods k >= K: -(1/q) sum_r chi(r) psi(K + r/q), with the
  // asymptotic digamma series; log(K) cancels because sum_r chi(r) = 0.
  const double big_k = static_cast<double>(periods);
  double tail = 0.0;
  for (std::uint64_t r = 1; r <= q; ++r) {
    const int c = character_value(chi, r);
    if (c == 0) continue;
    const double x = big_k + static_cast<double>(r) / static_cast<double>(q);
    const double psi_minus_log_k =
        std::log1p(static_cast<double>(r) / (static_cast<double>(q) * big_k)) - 1.0 / (2.0 * x) - 1.0 / (12.0 * x * x) +
        1.0 / (120.0 * x * x * x * x);
    tail -= c * psi_minus_log_k / static_cast<double>(q);
  }
  s.add(tail);
  return s.value();
}

ZetaCheck zeta_special_value_check(ConstantId id, std::uint64_t n) {
  TargetId series_id;
  double s;
  double residue;
  switch (id) {
    case ConstantId::Zeta2: series_id = TargetId::RiemannZ, s = 2, residue = 1.0; break;
    case ConstantId::Zeta4: series_id = TargetId::RiemannZ, s = 4, residue = 1.0; break;
    case ConstantId::DedekindTau2: series_id = TargetId::DedekindTau, s = 2, residue = target_constant(ConstantId::ResidueDedekindTau); break;
    case ConstantId::DedekindTau4: series_id = TargetId::DedekindTau, s = 4, residue = target_constant(ConstantId::ResidueDedekindTau); break;
    case ConstantId::DedekindSqrt2_2: series_id = TargetId::DedekindSqrt2, s = 2, residue = target_constant(ConstantId::ResidueDedekindSqrt2); break;
    case ConstantId::DedekindSqrt2_4: series_id = TargetId::DedekindSqrt2, s = 4, residue = target_constant(ConstantId::ResidueDedekindSqrt2); break;
    default: throw Error(Errc::UnknownConstant, std::string(constant_info(id).name) + " is not a zeta value");
  }
  if (n == 0) throw Error(Errc::InvalidArgument, "need at least one term");
  const CoeffSeq a = closed_form_series(series_id, n);
  Summer sum;
  for (std::uint64_t m = n; m >= 1; --m) {
    if (a[m] != 0) sum.add(static_cast<double>(a[m]) * std::pow(static_cast<double>(m), -s));
  }
  // The coefficients average to the residue, so the tail is about
  // residue * n^{1-s} / (s-1).
  sum.add(residue * std::pow(static_cast<double>(n) + 0.5, 1.0 - s) / (s - 1.0));
  const double target = target_constant(id);
  const double computed = sum.value();
  return {computed, target, std::fabs(computed - target) / target};
}

}  // namespace similitude
