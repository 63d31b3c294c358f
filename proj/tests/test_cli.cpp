#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <string>

#include <nlohmann/json.hpp>

using Json = nlohmann::ordered_json;

namespace {

std::string cli_path() {
  const char* p = std::getenv("BERKTREE_CLI");
  REQUIRE_MESSAGE(p != nullptr, "BERKTREE_CLI must point at the berktree binary");
  return p;
}

struct RunResult {
  int exit_code;
  std::string output;  // stdout and stderr combined
};

RunResult run(const std::string& args) {
  std::string cmd = cli_path() + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("fixed-points: json output and byte-stable round trip") {
  RunResult r = run("fixed-points --p 2 --poly \"T^2-2\" --json");
  CHECK(r.exit_code == 0);
  Json j = Json::parse(r.output);
  CHECK(j.at("e") == 2);
  CHECK(j.at("r_exp") == Json({{"num", 3}, {"den", 2}}));
  CHECK(j.at("r_prime_exp") == Json({{"num", 1}, {"den", 2}}));
  CHECK(j.at("cond_e_vanishes") == true);
  // Re-serializing the parsed report reproduces the output byte for byte.
  CHECK(j.dump(2) + "\n" == r.output);
}

TEST_CASE("fixed-points: tame case and validation failures") {
  RunResult tame = run("fixed-points --p 3 --poly \"T^2-3\" --json");
  CHECK(tame.exit_code == 0);
  CHECK(Json::parse(tame.output).at("fixed_segment").is_null());

  RunResult bad = run("fixed-points --p 2 --poly \"T^2-1\"");
  CHECK(bad.exit_code == 2);
  CHECK(bad.output.find("error:") != std::string::npos);

  RunResult unparsable = run("fixed-points --p 2 --poly \"T^^2\"");
  CHECK(unparsable.exit_code == 2);

  RunResult missing = run("fixed-points --p 2");
  CHECK(missing.exit_code == 2);
}

TEST_CASE("tau and in-building") {
  RunResult r = run("tau --p 2 --poly \"T^2-2\" --center \"alpha\" --radius-exp \"2\" --json");
  CHECK(r.exit_code == 0);
  Json j = Json::parse(r.output);
  CHECK(j.at("tau").at("radius_exp") == Json({{"num", 1}, {"den", 2}}));
  CHECK(j.at("tau").at("center")[0] == Json({{"num", 0}, {"den", 1}}));

  RunResult text = run("tau --p 2 --poly \"T^2-2\" --center \"1+alpha\" --radius-exp \"2\"");
  CHECK(text.exit_code == 0);
  CHECK(text.output.find("eta(1; 2^(-1/2))") != std::string::npos);

  RunResult inb = run("in-building --p 2 --poly \"T^2-2\" --center \"alpha\" --radius-exp \"1\"");
  CHECK(inb.exit_code == 0);
  CHECK(inb.output == "false\n");
  RunResult inb2 =
      run("in-building --p 2 --poly \"T^2-2\" --center \"alpha\" --radius-exp \"1/2\" --json");
  CHECK(Json::parse(inb2.output).at("in_building") == true);

  RunResult type1 = run("in-building --p 2 --center \"1\" --radius-exp \"inf\"");
  CHECK(type1.exit_code == 2);
}

TEST_CASE("norm-eval, convolve, envelope-check, theorem-check") {
  RunResult ne = run("norm-eval --family torus --p 2 --weights \"-1\" --poly \"2*x1^2\" --json");
  CHECK(ne.exit_code == 0);
  CHECK(Json::parse(ne.output).at("value_exp") == Json({{"num", -1}, {"den", 1}}));

  RunResult nb = run("norm-eval --family additive --p 2 --radius-exp \"1/2\" --poly \"a^2 + 2\"");
  CHECK(nb.exit_code == 0);
  CHECK(nb.output == "2^(-1)\n");

  RunResult cv = run("convolve --family torus --p 5 --a \"1,0\" --b \"-2,1/2\" --json");
  CHECK(cv.exit_code == 0);
  Json cj = Json::parse(cv.output);
  CHECK(cj.at("family") == "torus");
  CHECK(cj.at("weights_exp")[0] == Json({{"num", -1}, {"den", 1}}));
  CHECK(cj.at("weights_exp")[1] == Json({{"num", 1}, {"den", 2}}));

  RunResult cb = run("convolve --family additive --p 2 --a \"2\" --b \"1\"");
  CHECK(cb.output == "1\n");

  RunResult ec = run("envelope-check --family torus --p 2 --weights \"0,0\" --json");
  Json ej = Json::parse(ec.output);
  CHECK(ej.at("unit_ok") == true);
  CHECK(ej.at("idem_ok") == true);

  RunResult ec2 = run("envelope-check --family torus --p 2 --weights \"1\"");
  CHECK(ec2.output.find("unit_ok=no") != std::string::npos);

  RunResult tc = run("theorem-check --rank 1 --weights \"0\" --json");
  Json tj = Json::parse(tc.output);
  CHECK(tj.at("cond_i_universal") == true);
  CHECK(tj.at("cond_ii_envelope") == true);
  CHECK(tj.at("cond_iii_dominates_shilov") == true);
  CHECK(tj.at("cond_iv_maximal") == true);
  CHECK(tj.at("is_shilov_point") == true);

  RunResult tc2 = run("theorem-check --rank 2 --weights \"0,1/2\" --json");
  Json tj2 = Json::parse(tc2.output);
  CHECK(tj2.at("cond_ii_envelope") == false);
  CHECK(tj2.at("witness_ii") == "chi_2");

  RunResult mismatch = run("theorem-check --rank 3 --weights \"0\"");
  CHECK(mismatch.exit_code == 2);
}

TEST_CASE("apartment-test") {
  RunResult w2 = run("apartment-test --p 2 --center \"1\" --radius-exp \"1\" --json");
  CHECK(w2.exit_code == 0);
  Json j = Json::parse(w2.output);
  CHECK(j.at("extension_used") == "Q_2[T]/(T^2 + T + 1)");
  CHECK(j.at("unit") == "alpha");

  RunResult w5 = run("apartment-test --p 5 --center \"1\" --radius-exp \"1\" --json");
  CHECK(Json::parse(w5.output).at("extension_used").is_null());

  RunResult on_apt = run("apartment-test --p 5 --center \"0\" --radius-exp \"1\"");
  CHECK(on_apt.exit_code == 2);
  CHECK(on_apt.output.find("error:") != std::string::npos);
}

TEST_CASE("sweep exit codes and determinism") {
  RunResult s = run("sweep --mode tame --count 20 --seed 7");
  CHECK(s.exit_code == 0);
  CHECK(s.output.find("20/20 passed") != std::string::npos);

  RunResult j1 = run("sweep --mode equivalence --count 30 --seed 1 --json");
  RunResult j2 = run("sweep --mode equivalence --count 30 --seed 1 --json");
  CHECK(j1.exit_code == 0);
  CHECK(j1.output == j2.output);
  Json js = Json::parse(j1.output);
  CHECK(js.at("passes") == 30);

  RunResult badmode = run("sweep --mode bogus --count 5");
  CHECK(badmode.exit_code == 2);
}

TEST_CASE("help exits cleanly") {
  CHECK(run("--help").exit_code == 0);
  CHECK(run("fixed-points --help").exit_code == 0);
  CHECK(run("").exit_code == 2);  // a subcommand is required
}
