// Command-line front end over the C interface.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "similitude/similitude.h"

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr long long kMaxTerms = 1'000'000;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError {
  std::string message;
};

struct RunConfig {
  std::string target;
  long long terms = 10'000;
  bool terms_given = false;
  std::string format;
  std::string lattice;
  std::string module;
  long long m = 0;
  long long max_m = 0;
  std::optional<long long> threads;
};

bool is_usage_status(sim_status s) {
  return s == SIM_ERR_INVALID_ARGUMENT || s == SIM_ERR_BOUND_EXCEEDED || s == SIM_ERR_NOT_REPRESENTABLE ||
         s == SIM_ERR_UNKNOWN_CONSTANT;
}

// Throws UsageError for argument problems; other failures exit with 1.
void check(sim_status s) {
  if (s == SIM_OK) return;
  const std::string message = std::string(sim_status_string(s)) + ": " + sim_last_error();
  if (is_usage_status(s)) throw UsageError{message};
  std::cerr << "error: " << message << '\n';
  std::exit(kExitFailure);
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s = buf;
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

void require_format(const std::string& format) {
  if (format != "csv" && format != "json" && format != "plain")
    throw UsageError{"format must be one of csv, json, plain"};
}

std::size_t require_terms(const RunConfig& cfg) {
  if (cfg.terms < 1) throw UsageError{"terms must be ≥ 1"};
  if (cfg.terms > kMaxTerms) throw UsageError{"terms must be ≤ " + std::to_string(kMaxTerms)};
  return static_cast<std::size_t>(cfg.terms);
}

unsigned resolve_threads(const RunConfig& cfg) {
  long long t = cfg.threads.value_or(0);
  if (!cfg.threads) {
    if (const char* env = std::getenv("SIMILITUDE_THREADS"); env != nullptr && *env != '\0') {
      char* end = nullptr;
      t = std::strtoll(env, &end, 10);
      if (*end != '\0' || t < 1) throw UsageError{"SIMILITUDE_THREADS must be a positive integer"};
    } else {
      t = 1;
    }
  }
  if (t < 1 || t > 256) throw UsageError{"threads must be between 1 and 256"};
  return static_cast<unsigned>(t);
}

int cmd_series(const RunConfig& cfg) {
  const std::string format = cfg.format.empty() ? "csv" : cfg.format;
  require_format(format);
  if (cfg.target.empty()) throw UsageError{"target is required"};
  const std::size_t n = require_terms(cfg);
  sim_series* s = nullptr;
  check(sim_series_build(cfg.target.c_str(), n, &s));
  const bool square = sim_series_index_kind(s) == SIM_INDEX_SQUARE;
  std::vector<std::int64_t> values(n);
  for (std::size_t m = 1; m <= n; ++m) check(sim_series_coeff(s, m, &values[m - 1]));
  sim_series_free(s);

  std::ostringstream out;
  if (format == "json") {
    ordered_json j;
    j["target"] = cfg.target;
    j["index_kind"] = square ? "square" : "linear";
    j["terms"] = values;
    out << j.dump() << '\n';
  } else {
    if (format == "csv") out << "m,index,count\n";
    for (std::size_t m = 1; m <= n; ++m) {
      const unsigned long long index = square ? static_cast<unsigned long long>(m) * m : m;
      if (format == "csv")
        out << m << ',' << index << ',' << values[m - 1] << '\n';
      else
        out << "m=" << m << " index=" << index << " count=" << values[m - 1] << '\n';
    }
  }
  std::cout << out.str();
  return 0;
}

int cmd_verify(const RunConfig& cfg) {
  const std::string format = cfg.format.empty() ? "plain" : cfg.format;
  require_format(format);
  if (cfg.target.empty()) throw UsageError{"target is required"};
  const std::size_t n = require_terms(cfg);
  sim_report* r = nullptr;
  check(sim_verify(cfg.target.c_str(), n, &r));
  const bool ok = sim_report_all_passed(r) != 0;
  auto status = [&](std::size_t i) -> std::string {
    if (sim_report_informational(r, i)) return sim_report_passed(r, i) ? "INFO" : "INFO-MISMATCH";
    return sim_report_passed(r, i) ? "PASS" : "FAIL";
  };
  std::ostringstream out;
  if (format == "json") {
    ordered_json j;
    j["target"] = cfg.target;
    j["terms"] = n;
    j["passed"] = ok;
    j["checks"] = ordered_json::array();
    for (std::size_t i = 0; i < sim_report_size(r); ++i) {
      j["checks"].push_back({{"name", sim_report_name(r, i)},
                             {"status", status(i)},
                             {"informational", sim_report_informational(r, i) != 0},
                             {"detail", sim_report_detail(r, i)}});
    }
    out << j.dump() << '\n';
  } else if (format == "csv") {
    out << "check,status\n";
    for (std::size_t i = 0; i < sim_report_size(r); ++i) out << sim_report_name(r, i) << ',' << status(i) << '\n';
  } else {
    for (std::size_t i = 0; i < sim_report_size(r); ++i)
      out << status(i) << ' ' << sim_report_name(r, i) << ": " << sim_report_detail(r, i) << '\n';
    out << (ok ? "PASS" : "FAIL") << ' ' << cfg.target << " terms=" << n << '\n';
  }
  sim_report_free(r);
  std::cout << out.str();
  return ok ? 0 : kExitFailure;
}

struct Range {
  std::uint64_t from;
  std::uint64_t to;
};

Range oracle_range(const RunConfig& cfg) {
  if ((cfg.m != 0) == (cfg.max_m != 0)) throw UsageError{"oracle needs exactly one of --m or --max-m"};
  const long long top = cfg.m != 0 ? cfg.m : cfg.max_m;
  if (top < 1) throw UsageError{cfg.m != 0 ? "m must be ≥ 1" : "max-m must be ≥ 1"};
  const auto t = static_cast<std::uint64_t>(top);
  return cfg.m != 0 ? Range{t, t} : Range{1, t};
}

int cmd_oracle(const RunConfig& cfg) {
  const std::string format = cfg.format.empty() ? "plain" : cfg.format;
  require_format(format);
  const unsigned threads = resolve_threads(cfg);
  if (cfg.lattice.empty() == cfg.module.empty()) throw UsageError{"oracle needs exactly one of --lattice or --module"};
  const Range range = oracle_range(cfg);
  bool all_match = true;
  std::ostringstream out;
  ordered_json results = ordered_json::array();

  if (!cfg.lattice.empty()) {
    if (cfg.lattice != "z4" && cfg.lattice != "d4star") throw UsageError{"lattice must be z4 or d4star"};
    const std::uint64_t bound = sim_sublattice_index_bound();
    if (range.to > bound || range.to * range.to > bound)
      throw UsageError{"m^2 must be ≤ " + std::to_string(bound) + " for the lattice oracle"};
    if (format == "csv") out << "m,oracle,formula,status\n";
    for (std::uint64_t m = range.from; m <= range.to; ++m) {
      std::uint64_t oracle = 0, formula = 0;
      check(sim_oracle_lattice(cfg.lattice.c_str(), m, threads, &oracle, &formula));
      const bool match = oracle == formula;
      all_match = all_match && match;
      const char* word = match ? "MATCH" : "MISMATCH";
      if (format == "csv")
        out << m << ',' << oracle << ',' << formula << ',' << word << '\n';
      else if (format == "plain")
        out << "m=" << m << ": " << oracle << '=' << formula << ' ' << word << '\n';
      results.push_back({{"m", m}, {"oracle", oracle}, {"formula", formula}, {"match", match}});
    }
  } else {
    if (cfg.module != "icosian") throw UsageError{"module must be icosian"};
    const std::uint64_t bound = sim_icosian_index_bound();
    if (range.to > bound) throw UsageError{"m must be ≤ " + std::to_string(bound) + " for the icosian oracle"};
    if (format == "csv") out << "m,oracle,formula,status,right,left,two_sided,generic\n";
    for (std::uint64_t m = range.from; m <= range.to; ++m) {
      sim_icosian_summary s{};
      const sim_status st = sim_oracle_icosian(m, threads, &s);
      // --max-m skips indices that are not norms; --m reports them.
      if (st == SIM_ERR_NOT_REPRESENTABLE && range.from != range.to) continue;
      check(st);
      const bool match = s.total == s.formula && s.pair_counts_divisible;
      all_match = all_match && match;
      const char* word = match ? "MATCH" : "MISMATCH";
      if (format == "csv") {
        out << m << ',' << s.total << ',' << s.formula << ',' << word << ',' << s.right << ',' << s.left << ','
            << s.two_sided << ',' << s.generic << '\n';
      } else if (format == "plain") {
        out << "m=" << m << ": " << s.total << '=' << s.formula << ' ' << word << " (" << s.right << " right, "
            << s.left << " left, " << s.two_sided << " two-sided, " << s.generic << " generic)\n";
      }
      results.push_back({{"m", m},
                         {"oracle", s.total},
                         {"formula", s.formula},
                         {"match", match},
                         {"right", s.right},
                         {"left", s.left},
                         {"two_sided", s.two_sided},
                         {"generic", s.generic}});
    }
  }
  if (format == "json") {
    ordered_json j;
    if (!cfg.lattice.empty())
      j["lattice"] = cfg.lattice;
    else
      j["module"] = cfg.module;
    j["passed"] = all_match;
    j["results"] = results;
    out << j.dump() << '\n';
  }
  std::cout << out.str();
  return all_match ? 0 : kExitFailure;
}

int cmd_constants(const RunConfig& cfg) {
  const std::string format = cfg.format.empty() ? "plain" : cfg.format;
  require_format(format);
  const std::optional<std::size_t> n = cfg.terms_given ? std::optional<std::size_t>(require_terms(cfg)) : std::nullopt;
  struct Row {
    std::string name, closed_form, value, estimate;
    double raw_value, raw_estimate;
    bool informational;
  };
  std::vector<Row> rows;
  for (std::size_t i = 0; i < sim_constant_count(); ++i) {
    const char* name = nullptr;
    const char* closed = nullptr;
    double value = 0;
    int info = 0;
    check(sim_constant_info(i, &name, &closed, &value, &info));
    Row row{name, closed, format_double(value), "", value, std::nan(""), info != 0};
    if (n) {
      double est = 0;
      const sim_status st = sim_constant_estimate(name, *n, &est);
      if (st == SIM_ERR_DEGENERATE_MODEL)
        row.estimate = "nan";
      else {
        check(st);
        row.estimate = format_double(est);
        row.raw_estimate = est;
      }
    }
    rows.push_back(row);
  }
  std::ostringstream out;
  if (format == "json") {
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) {
      ordered_json o{{"name", r.name}, {"closed_form", r.closed_form}, {"value", r.raw_value}, {"informational", r.informational}};
      if (n) {
        o["terms"] = *n;
        o["estimate"] = std::isnan(r.raw_estimate) ? ordered_json(nullptr) : ordered_json(r.raw_estimate);
      }
      arr.push_back(o);
    }
    out << ordered_json{{"constants", arr}}.dump() << '\n';
  } else if (format == "csv") {
    out << "name,closed_form,value" << (n ? ",terms,estimate" : "") << '\n';
    for (const auto& r : rows) {
      out << r.name << ',' << r.closed_form << ',' << r.value;
      if (n) out << ',' << *n << ',' << r.estimate;
      out << '\n';
    }
  } else {
    for (const auto& r : rows) {
      out << std::left << std::setw(24) << r.name << std::setw(36) << r.closed_form << std::setw(10) << r.value;
      if (n) out << "  estimate(N=" << *n << ") " << r.estimate;
      if (r.informational) out << "  [informational]";
      out << '\n';
    }
  }
  std::cout << out.str();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Similarity sublattice and submodule counting for 4D lattices and quaternion orders"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_format = [&](CLI::App* sub, const char* dflt) {
    sub->add_option("--format", cfg.format, std::string("Output format: csv, json or plain (default ") + dflt + ")");
  };
  auto add_terms = [&](CLI::App* sub, const char* help) {
    sub->add_option("--terms", cfg.terms, help)->each([&](const std::string&) { cfg.terms_given = true; });
  };

  auto* series = app.add_subcommand("series", "Print the coefficients of a counting or zeta series");
  series->add_option("--target", cfg.target, "f_j, f_z4, f_i, f_k, zeta_j, zeta_i, zeta_k, dedekind_tau, dedekind_sqrt2, riemann");
  add_terms(series, "Number of coefficients, m = 1..N (default 10000)");
  series->add_option("--threads", cfg.threads, "Accepted for symmetry with oracle; output never depends on it");
  add_format(series, "csv");

  auto* verify = app.add_subcommand("verify", "Cross-check closed forms against the generating-function identities");
  verify->add_option("--target", cfg.target, "Series to verify");
  add_terms(verify, "Number of coefficients to check (default 10000)");
  add_format(verify, "plain");

  auto* oracle = app.add_subcommand("oracle", "Compare brute-force enumeration with the counting formulas");
  oracle->add_option("--lattice", cfg.lattice, "z4 or d4star");
  oracle->add_option("--module", cfg.module, "icosian");
  oracle->add_option("--m", cfg.m, "Single value of m (index m^2)");
  oracle->add_option("--max-m", cfg.max_m, "Check every m from 1 to this value");
  oracle->add_option("--threads", cfg.threads, "Worker threads (default: SIMILITUDE_THREADS or 1)");
  add_format(oracle, "plain");

  auto* constants = app.add_subcommand("constants", "Print the growth constants and special values");
  add_terms(constants, "Also print an empirical estimate from this many coefficients");
  add_format(constants, "plain");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (series->parsed()) return cmd_series(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    if (oracle->parsed()) return cmd_oracle(cfg);
    return cmd_constants(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.message << '\n';
    return kExitUsage;
  }
}
