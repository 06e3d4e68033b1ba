// Golden-file style checks of the command-line surface: schema keys,
// deterministic output, exit codes.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

namespace {

using json = nlohmann::ordered_json;

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(HYPERLOG_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

void check_schema(const json& j) {
  for (const char* key :
       {"command", "inputs", "results", "residuals", "closed_form", "citations", "status"})
    CHECK(j.contains(key));
}

}  // namespace

TEST_CASE("classify matches the tabulated exceptional case") {
  auto r = run_cli("classify --m 12 --tuple 1,4,9,10");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("Exceptional") != std::string::npos);

  auto j = run_cli("classify --m 12 --tuple 1,4,9,10 --format json");
  CHECK(j.exit_code == 0);
  json rep = json::parse(j.out);
  check_schema(rep);
  CHECK(rep["status"] == "OK");
  CHECK(rep["results"]["class"] == "Exceptional");
}

TEST_CASE("empty orbit report") {
  auto r = run_cli("orbits --m 13 --format json");
  CHECK(r.exit_code == 0);
  json rep = json::parse(r.out);
  check_schema(rep);
  CHECK(rep["results"]["e_m"] == 0);
  CHECK(rep["results"]["o_m"] == 0);
  CHECK(rep["results"]["orbits"].empty());
}

TEST_CASE("appendix single entry") {
  auto r = run_cli("appendix-check --m 12");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("1/1 m values matched") != std::string::npos);
}

TEST_CASE("appendix mismatch exits 2") {
  std::string path = "/tmp/hyperlog_bad_fixture.json";
  {
    std::ofstream f(path);
    f << R"({"citation":"test","entries":[{"m":12,"e_m":9,"o_m":2,)"
      << R"("representatives":[[1,4,9,10],[1,6,8,9]]}]})";
  }
  auto r = run_cli("appendix-check --m 12 --fixture " + path);
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("MISMATCH") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("verify emits the full record and passes") {
  auto r = run_cli("verify --id G1-2m --alpha 1/4 --no-2d --format json");
  CHECK(r.exit_code == 0);
  json rep = json::parse(r.out);
  check_schema(rep);
  CHECK(rep["status"] == "PASS");
  auto& rec = rep["results"][0];
  CHECK(rec["pass"] == true);
  for (auto& [k, v] : rec["residuals"].items()) {
    (void)k;
    CHECK(std::stod(v.get<std::string>()) < 1e-8);
  }
  CHECK(rep["closed_form"].contains("text"));
}

TEST_CASE("byte-identical output for identical config and seed") {
  std::string args = "verify --id G2-3m --samples 2 --seed 9 --no-2d --format json";
  auto a = run_cli(args);
  auto b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(!a.out.empty());
}

TEST_CASE("usage errors exit 1") {
  CHECK(run_cli("verify --id NOPE --alpha 1/3").exit_code == 1);
  CHECK(run_cli("verify --id P14 --alpha 1 --beta 1").exit_code == 1);  // missing gamma
  CHECK(run_cli("verify --id G1-2m").exit_code == 1);
  CHECK(run_cli("classify --m 12 --tuple 1,2,3").exit_code == 1);
  CHECK(run_cli("classify --m 12 --tuple 0,4,9,10").exit_code == 1);
  // RunConfig invariant: tolerance >= 10^(-precision+5)
  CHECK(run_cli("verify --id G1-2m --alpha 1/4 --precision 15 --tolerance 1e-12").exit_code == 1);
  CHECK(run_cli("eval-f32 --tuple 1,2,2 --precision 10").exit_code == 1);
}

TEST_CASE("eval-f32 basel value") {
  auto r = run_cli("eval-f32 --tuple 1,2,2 --precision 20 --format json");
  CHECK(r.exit_code == 0);
  json rep = json::parse(r.out);
  check_schema(rep);
  double v = std::stod(rep["results"]["value"].get<std::string>());
  CHECK(v == doctest::Approx(1.6449340668482264).epsilon(1e-12));
}

TEST_CASE("closed-form text output") {
  auto r = run_cli("closed-form --id G1-2m --alpha 1/4");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("log(1 + 1/2*2^(1/2))") != std::string::npos);

  auto j = run_cli("closed-form --id G1-2m --alpha 1/4 --format json");
  json rep = json::parse(j.out);
  check_schema(rep);
  CHECK(rep["closed_form"].contains("tree"));
  double v = std::stod(rep["results"]["value"].get<std::string>());
  CHECK(v == doctest::Approx(1.8696757204206915).epsilon(1e-12));
}

TEST_CASE("environment overrides for precision and tolerance") {
  auto r = run_cli("eval-f32 --tuple 1,2,2 --format json");
  json rep = json::parse(r.out);
  std::string v30 = rep["results"]["value"].get<std::string>();

  std::string cmd = std::string("PREC=20 ") + HYPERLOG_CLI_PATH +
                    " eval-f32 --tuple 1,2,2 --format json 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  pclose(pipe);
  json rep20 = json::parse(out);
  std::string v20 = rep20["results"]["value"].get<std::string>();
  CHECK(v20.size() < v30.size());  // fewer rendered digits
}
