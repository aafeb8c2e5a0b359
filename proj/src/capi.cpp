#include "similitude/similitude.h"

#include <memory>
#include <string>
#include <vector>

#include "similitude/asymptotics.hpp"
#include "similitude/counting.hpp"
#include "similitude/error.hpp"
#include "similitude/oracle.hpp"
#include "similitude/verify.hpp"

using namespace similitude;

struct sim_series {
  TargetId target;
  std::vector<std::int64_t> values;
};

struct sim_report {
  std::vector<CheckResult> items;
};

namespace {

thread_local std::string last_error;

sim_status fail(sim_status s, std::string message) {
  last_error = std::move(message);
  return s;
}

// Runs body, translating exceptions into status codes.
template <class Body>
sim_status guarded(Body body) {
  try {
    last_error.clear();
    return body();
  } catch (const Error& e) {
    return fail(static_cast<sim_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(SIM_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SIM_ERR_INTERNAL, e.what());
  }
}

TargetId require_target(const char* name) {
  if (name == nullptr) throw Error(Errc::InvalidArgument, "target is null");
  const auto t = parse_target(name);
  if (!t) throw Error(Errc::InvalidArgument, std::string("unknown target '") + name + "'");
  return *t;
}

ConstantId require_constant(const char* name) {
  if (name == nullptr) throw Error(Errc::InvalidArgument, "constant name is null");
  const auto c = parse_constant(name);
  if (!c) throw Error(Errc::UnknownConstant, std::string("unknown constant '") + name + "'");
  return *c;
}

template <class T>
void require_out(T* p) {
  if (p == nullptr) throw Error(Errc::InvalidArgument, "output pointer is null");
}

std::uint64_t to_u64(i128 v) {
  if (v < 0) throw Error(Errc::Internal, "negative count");
  return static_cast<std::uint64_t>(to_int64(v));
}

}  // namespace

extern "C" {

const char* sim_status_string(sim_status status) {
  if (status == SIM_OK) return "Ok";
  if (status < SIM_ERR_INVALID_ARGUMENT || status > SIM_ERR_INTERNAL) return "Unknown";
  return errc_name(static_cast<Errc>(status));
}

const char* sim_last_error(void) { return last_error.c_str(); }

uint64_t sim_sublattice_index_bound(void) { return kSublatticeIndexBound; }
uint64_t sim_icosian_index_bound(void) { return kIcosianIndexBound; }

sim_status sim_series_build(const char* target, size_t n_terms, sim_series** out) {
  return guarded([&] {
    require_out(out);
    *out = nullptr;
    const TargetId t = require_target(target);
    if (n_terms == 0) throw Error(Errc::InvalidArgument, "terms must be >= 1");
    const CoeffSeq s = series(t, n_terms);
    auto handle = std::make_unique<sim_series>();
    handle->target = t;
    handle->values.reserve(n_terms);
    for (auto v : s.values()) handle->values.push_back(to_int64(v));
    *out = handle.release();
    return SIM_OK;
  });
}

size_t sim_series_length(const sim_series* series) { return series ? series->values.size() : 0; }

const char* sim_series_target(const sim_series* series) { return series ? target_name(series->target) : ""; }

sim_index_kind sim_series_index_kind(const sim_series* series) {
  if (series == nullptr) return SIM_INDEX_SQUARE;
  return index_kind(series->target) == IndexKind::Square ? SIM_INDEX_SQUARE : SIM_INDEX_LINEAR;
}

sim_status sim_series_coeff(const sim_series* series, size_t m, int64_t* value) {
  return guarded([&] {
    require_out(value);
    if (series == nullptr) throw Error(Errc::InvalidArgument, "series is null");
    if (m == 0 || m > series->values.size()) throw Error(Errc::InvalidArgument, "m out of range");
    *value = series->values[m - 1];
    return SIM_OK;
  });
}

void sim_series_free(sim_series* series) { delete series; }

sim_status sim_verify(const char* target, size_t n_terms, sim_report** out) {
  return guarded([&] {
    require_out(out);
    *out = nullptr;
    const TargetId t = require_target(target);
    auto handle = std::make_unique<sim_report>();
    handle->items = verify_target(t, n_terms);
    *out = handle.release();
    return SIM_OK;
  });
}

size_t sim_report_size(const sim_report* report) { return report ? report->items.size() : 0; }

const char* sim_report_name(const sim_report* report, size_t i) {
  return report && i < report->items.size() ? report->items[i].name.c_str() : "";
}

const char* sim_report_detail(const sim_report* report, size_t i) {
  return report && i < report->items.size() ? report->items[i].detail.c_str() : "";
}

int sim_report_passed(const sim_report* report, size_t i) {
  return report && i < report->items.size() && report->items[i].passed ? 1 : 0;
}

int sim_report_informational(const sim_report* report, size_t i) {
  return report && i < report->items.size() && report->items[i].informational ? 1 : 0;
}

int sim_report_all_passed(const sim_report* report) {
  if (report == nullptr) return 0;
  for (const auto& item : report->items)
    if (!item.informational && !item.passed) return 0;
  return 1;
}

void sim_report_free(sim_report* report) { delete report; }

sim_status sim_oracle_lattice(const char* lattice, uint64_t m, unsigned threads, uint64_t* oracle_count,
                              uint64_t* formula_count) {
  return guarded([&] {
    require_out(oracle_count);
    require_out(formula_count);
    if (lattice == nullptr) throw Error(Errc::InvalidArgument, "lattice is null");
    const std::string name = lattice;
    AmbientId id;
    TargetId target;
    if (name == "z4") {
      id = AmbientId::Z4;
      target = TargetId::Z4;
    } else if (name == "d4star") {
      id = AmbientId::D4star;
      target = TargetId::HurwitzJ;
    } else {
      throw Error(Errc::InvalidArgument, "unknown lattice '" + name + "'");
    }
    *oracle_count = count_ssl_bruteforce(ambient_lattice(id), m, threads);
    *formula_count = to_u64(ssm_count(target, m));
    return SIM_OK;
  });
}

sim_status sim_oracle_icosian(uint64_t m, unsigned threads, sim_icosian_summary* out) {
  return guarded([&] {
    require_out(out);
    const IcosianOracleResult r = enumerate_ssm_icosian(m, threads);
    sim_icosian_summary s{};
    s.m = m;
    s.total = r.modules.size();
    s.left = r.count(SsmKind::LeftIdeal);
    s.right = r.count(SsmKind::RightIdeal);
    s.two_sided = r.count(SsmKind::TwoSided);
    s.generic = r.count(SsmKind::Generic);
    s.formula = to_u64(ssm_count(TargetId::IcosianI, m));
    s.elements = r.elements;
    const auto units = unit_group(OrderId::Icosian).size();
    s.pair_counts_divisible = 1;
    for (const auto& mod : r.modules)
      if (mod.pair_count % units != 0) s.pair_counts_divisible = 0;
    *out = s;
    return SIM_OK;
  });
}

size_t sim_constant_count(void) { return constant_table().size(); }

sim_status sim_constant_info(size_t i, const char** name, const char** closed_form, double* value, int* informational) {
  return guarded([&] {
    const auto& table = constant_table();
    if (i >= table.size()) throw Error(Errc::InvalidArgument, "constant index out of range");
    const ConstantInfo& c = table[i];
    if (name) *name = c.name;
    if (closed_form) *closed_form = c.closed_form;
    if (value) *value = target_constant(c.id);
    if (informational) *informational = c.informational ? 1 : 0;
    return SIM_OK;
  });
}

sim_status sim_constant_value(const char* name, double* value) {
  return guarded([&] {
    require_out(value);
    *value = target_constant(require_constant(name));
    return SIM_OK;
  });
}

sim_status sim_constant_estimate(const char* name, size_t n_terms, double* estimate) {
  return guarded([&] {
    require_out(estimate);
    const ConstantId id = require_constant(name);
    if (n_terms == 0) throw Error(Errc::InvalidArgument, "terms must be >= 1");
    if (const auto g = growth_target(id)) {
      const CoeffSeq a = closed_form_series(g->series, n_terms);
      *estimate = estimate_constant(a, g->model.alpha, g->model.logpower, n_terms);
    } else {
      *estimate = zeta_special_value_check(id, n_terms).computed;
    }
    return SIM_OK;
  });
}

}  // extern "C"
