#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "similitude/similitude.h"

namespace {

struct Run {
  int status;
  std::string out;
};

// stderr is folded into out when merge is set.
Run run(const std::string& args, bool merge = false, const std::string& env = "") {
  std::string cmd = env + (env.empty() ? "" : " ") + "\"" SIMILITUDE_CLI_PATH "\" " + args;
  cmd += merge ? " 2>&1" : " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

}  // namespace

TEST_CASE("series rows") {
  const Run r = run("series --target f_z4 --terms 4");
  CHECK(r.status == 0);
  CHECK(r.out == "m,index,count\n1,1,1\n2,4,3\n3,9,8\n4,16,3\n");
  const Run z = run("series --target riemann --terms 3");
  CHECK(z.out == "m,index,count\n1,1,1\n2,2,1\n3,3,1\n");
  const Run p = run("series --target f_j --terms 2 --format plain");
  CHECK(p.out == "m=1 index=1 count=1\nm=2 index=4 count=1\n");
}

TEST_CASE("series json") {
  const Run r = run("series --target zeta_i --terms 4 --format json");
  REQUIRE(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["target"] == "zeta_i");
  CHECK(j["index_kind"] == "square");
  CHECK(j["terms"] == nlohmann::json::array({1, 0, 0, 5}));

  // round trip against the library
  const Run big = run("series --target f_k --terms 500 --format json");
  const auto terms = nlohmann::json::parse(big.out)["terms"];
  sim_series* s = nullptr;
  REQUIRE(sim_series_build("f_k", 500, &s) == SIM_OK);
  REQUIRE(terms.size() == 500);
  for (std::size_t m = 1; m <= 500; ++m) {
    int64_t v = 0;
    sim_series_coeff(s, m, &v);
    REQUIRE(terms[m - 1].get<int64_t>() == v);
  }
  sim_series_free(s);
}

TEST_CASE("usage errors exit with 2") {
  Run r = run("verify --target f_i --terms 0", true);
  CHECK(r.status == 2);
  CHECK(r.out.find("terms must be ≥ 1") != std::string::npos);
  r = run("series --target nope --terms 3", true);
  CHECK(r.status == 2);
  CHECK(r.out.find("target") != std::string::npos);
  r = run("series --target f_j --format xml", true);
  CHECK(r.status == 2);
  CHECK(r.out.find("format") != std::string::npos);
  CHECK(run("series --target f_j --terms 2000000").status == 2);
  CHECK(run("oracle --lattice z4 --max-m 8").status == 2);
  CHECK(run("oracle --module icosian --m 26").status == 2);
  CHECK(run("oracle --module icosian --m 2").status == 2);
  CHECK(run("oracle --lattice z4").status == 2);
  CHECK(run("oracle --lattice z4 --module icosian --m 2").status == 2);
  CHECK(run("oracle --lattice e8 --m 2").status == 2);
  CHECK(run("oracle --lattice z4 --m 2 --threads 0").status == 2);
  CHECK(run("frobnicate").status == 2);
  CHECK(run("").status == 2);
  CHECK(run("--help").status == 0);
}

TEST_CASE("verify") {
  Run r = run("verify --target f_j --terms 10000");
  CHECK(r.status == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("PASS f_j terms=10000") != std::string::npos);
  r = run("verify --target zeta_j --terms 100");
  CHECK(r.status == 0);
  CHECK(r.out.find("PASS odd_divisor_sum") != std::string::npos);
  r = run("verify --target zeta_k --terms 1000 --format json");
  CHECK(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["passed"] == true);
  CHECK(j["terms"] == 1000);
}

TEST_CASE("oracle output") {
  Run r = run("oracle --lattice z4 --max-m 3");
  CHECK(r.status == 0);
  CHECK(r.out == "m=1: 1=1 MATCH\nm=2: 3=3 MATCH\nm=3: 8=8 MATCH\n");
  r = run("oracle --lattice d4star --max-m 2");
  CHECK(r.out.find("m=2: 1=1 MATCH") != std::string::npos);
  r = run("oracle --module icosian --m 4");
  CHECK(r.status == 0);
  CHECK(r.out == "m=4: 10=10 MATCH (5 right, 5 left, 0 two-sided, 0 generic)\n");
  r = run("oracle --module icosian --max-m 5 --format json");
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["passed"] == true);
  REQUIRE(j["results"].size() == 3);  // m = 1, 4, 5
  CHECK(j["results"][2]["m"] == 5);
}

TEST_CASE("thread count never changes output") {
  const std::string base = run("oracle --lattice z4 --max-m 4 --threads 1").out;
  CHECK(run("oracle --lattice z4 --max-m 4 --threads 4").out == base);
  CHECK(run("oracle --lattice z4 --max-m 4 --threads 8").out == base);
  CHECK(run("oracle --lattice z4 --max-m 4", false, "SIMILITUDE_THREADS=3").out == base);
  CHECK(run("oracle --lattice z4 --m 2", false, "SIMILITUDE_THREADS=abc").status == 2);
  const std::string s1 = run("series --target f_i --terms 300 --threads 1").out;
  CHECK(run("series --target f_i --terms 300 --threads 8").out == s1);
}

TEST_CASE("constants") {
  Run r = run("constants --format csv");
  CHECK(r.status == 0);
  CHECK(r.out.find("residue_dedekind_tau,2*log(tau)/sqrt(5),0.430409\n") != std::string::npos);
  CHECK(r.out.find("slope_f_k,") != std::string::npos);
  CHECK(r.out.find(",0.374519\n") != std::string::npos);
  CHECK(r.out.find("C_J,1/4,0.25\n") != std::string::npos);
  r = run("constants --terms 1000 --format json");
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["constants"].size() == 15);
  CHECK(j["constants"][0]["estimate"].is_number());
  CHECK(run("constants").out.find("informational") != std::string::npos);
}
