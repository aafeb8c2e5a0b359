#pragma once

// Floating-point checks of growth constants, L(1, chi) and zeta values.

#include <optional>
#include <string_view>
#include <vector>

#include "similitude/counting.hpp"
#include "similitude/dirichlet.hpp"

namespace similitude {

enum class ConstantId {
  ResidueDedekindTau,
  ResidueDedekindSqrt2,
  SlopeAJ,
  SlopeAI,
  SlopeAK,
  CJ,
  CZ4,
  SlopeFI,
  SlopeFK,
  Zeta2,
  Zeta4,
  DedekindTau2,
  DedekindTau4,
  DedekindSqrt2_2,
  DedekindSqrt2_4,
};

// A(x) ~ constant * x^alpha * log(x)^logpower
struct GrowthModel {
  double alpha;
  int logpower;
  double constant;
};

struct ConstantInfo {
  ConstantId id;
  const char* name;
  const char* closed_form;
  // Derived here rather than quoted; reported but never gated on.
  bool informational;
};

const std::vector<ConstantInfo>& constant_table();
std::optional<ConstantId> parse_constant(std::string_view name);
const ConstantInfo& constant_info(ConstantId id);

double target_constant(ConstantId id);
// Throws UnknownConstant for an unrecognized name.
double target_constant(std::string_view name);

// Coefficient series and growth model whose limit is the constant; empty
// for the zeta special values.
struct GrowthTarget {
  TargetId series;
  GrowthModel model;
};
std::optional<GrowthTarget> growth_target(ConstantId id);

// partial_sum(a, x) / (x^alpha log(x)^logpower); DegenerateModel when the
// denominator vanishes.
double estimate_constant(const CoeffSeq& a, double alpha, int logpower, std::uint64_t x);

struct TrendPoint {
  std::uint64_t n;
  double estimate;
};
// Estimates at n, n/2, n/4 (in that order).
std::vector<TrendPoint> estimate_trend(const CoeffSeq& a, double alpha, int logpower);

enum class Character { Chi5, Chi8 };
int character_value(Character chi, std::uint64_t m) noexcept;
double l_value_at_one(Character chi, std::uint64_t terms = 10'000'000);

struct ZetaCheck {
  double computed;
  double target;
  double relative_error;
};
// Sum of a(m)/m^s over m <= n with a tail correction; for Zeta2 .. DedekindSqrt2_4.
ZetaCheck zeta_special_value_check(ConstantId id, std::uint64_t n = 1'000'000);

}  // namespace similitude
