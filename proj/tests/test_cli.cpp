#include <doctest.h>

#include <cstdio>
#include <regex>
#include <string>

#include <json.hpp>

#include <sys/wait.h>

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(CASIMIR_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string strip_runtime(const std::string& s) {
  static const std::regex volatile_field("\"runtime_ms\": [-0-9.e+]+");
  return std::regex_replace(s, volatile_field, "\"runtime_ms\": X");
}

}  // namespace

TEST_CASE("force subcommand") {
  const CliResult r = run_cli("force --spin 1 --distance 1");
  REQUIRE(r.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j.at("value").get<double>() == doctest::Approx(-0.041123).epsilon(1e-4));
  CHECK(j.at("expression").get<std::string>().find("240") != std::string::npos);
  CHECK(j.at("units") == "natural (hbar=c=1)");
  CHECK(j.at("inputs").at("statistics") == "bosonic");

  const CliResult scaled = run_cli("force --spin 0.5 --distance 2");
  const nlohmann::json js = nlohmann::json::parse(scaled.out);
  CHECK(js.at("value").get<double>() ==
        doctest::Approx(-7.0 * M_PI * M_PI / 960.0 / 16.0).epsilon(1e-9));

  CHECK(run_cli("force --spin 0.7 --distance 1").exit_code == 2);
  CHECK(run_cli("force --spin 1 --distance -3").exit_code == 2);
}

TEST_CASE("spectrum subcommand") {
  const CliResult r = run_cli("spectrum --spin 0.5 --distance 1 --n-max 5");
  REQUIRE(r.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  const auto rows = j.at("value");
  REQUIRE(rows.size() == 3);
  CHECK(rows[0][0] == 1.0);
  CHECK(rows[1][0] == 3.0);
  CHECK(rows[2][0] == 5.0);
  CHECK(rows[0][1].get<double>() == doctest::Approx(M_PI / 2.0).epsilon(1e-9));
  CHECK(rows[2][1].get<double>() == doctest::Approx(5.0 * M_PI / 2.0).epsilon(1e-9));
  for (const auto& row : rows) CHECK(std::abs(row[2].get<double>()) < 1e-12);

  const CliResult boson = run_cli("spectrum --spin 1 --distance 1 --n-max 3");
  const nlohmann::json jb = nlohmann::json::parse(boson.out);
  REQUIRE(jb.at("value").size() == 4);  // n = 0,1,2,3
  CHECK(jb.at("value")[0][1].get<double>() == 0.0);
  CHECK(jb.at("value")[3][1].get<double>() == doctest::Approx(3.0 * M_PI).epsilon(1e-9));

  // the headline rejection: fermionic fields admit no even modes
  CHECK(run_cli("spectrum --spin 0.5 --distance 1 --n 2").exit_code == 2);
  CHECK(run_cli("spectrum --spin 0.5 --distance 1 --n 3").exit_code == 0);

  const CliResult csv = run_cli("spectrum --spin 0.5 --distance 1 --n-max 3 --format csv");
  CHECK(csv.out.rfind("n,k3,quantization_value\n", 0) == 0);
}

TEST_CASE("energy-scan subcommand") {
  const CliResult f =
      run_cli("energy-scan --statistics fermionic --distance 1 --alpha-min 0.01 --alpha-max 0.1 "
              "--points 12");
  REQUIRE(f.exit_code == 0);
  const nlohmann::json jf = nlohmann::json::parse(f.out);
  CHECK(jf.at("c0").get<double>() == doctest::Approx(-0.023989).epsilon(1e-4));
  CHECK(jf.at("value").size() == 12);

  const CliResult b =
      run_cli("energy-scan --statistics bosonic --distance 1 --alpha-min 0.01 --alpha-max 0.1 "
              "--points 12");
  const nlohmann::json jb = nlohmann::json::parse(b.out);
  CHECK(jb.at("c0").get<double>() == doctest::Approx(-0.013708).epsilon(1e-4));

  // underdetermined fit is a numerical failure, not a usage error
  CHECK(run_cli("energy-scan --statistics fermionic --distance 1 --alpha-min 0.01 --alpha-max "
                "0.1 --points 2")
            .exit_code == 1);
}

TEST_CASE("verify subcommand") {
  CHECK(run_cli("verify --suite gamma").exit_code == 0);
  CHECK(run_cli("verify --suite current").exit_code == 0);
  CHECK(run_cli("verify --suite nonsense").exit_code == 2);
  const CliResult r = run_cli("verify --suite gamma");
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j.at("value") == "pass");
  for (const auto& c : j.at("checks")) CHECK(c.at("pass") == true);
}

TEST_CASE("deterministic output modulo the runtime field") {
  const CliResult a = run_cli("force --spin 1.5 --distance 0.5");
  const CliResult b = run_cli("force --spin 1.5 --distance 0.5");
  CHECK(strip_runtime(a.out) == strip_runtime(b.out));
  const CliResult s1 = run_cli("spectrum --spin 2 --distance 2 --n-max 4 --format csv");
  const CliResult s2 = run_cli("spectrum --spin 2 --distance 2 --n-max 4 --format csv");
  CHECK(s1.out == s2.out);
}

TEST_CASE("usage errors") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("unknown-subcommand").exit_code == 2);
  CHECK(run_cli("force --format yaml").exit_code == 2);
}

TEST_CASE("tolerance override") {
  CHECK(run_cli("--tolerance -1 force --spin 1").exit_code == 2);
  CHECK(run_cli("--tolerance 1e-8 force --spin 1").exit_code == 0);
}
