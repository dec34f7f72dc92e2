// End-to-end checks of the command line binary: exit codes, output shapes,
// and byte-for-byte determinism of repeated invocations.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string command = std::string(CLI_BINARY) + " " + args + " 2>&1";
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer;
  size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.output.append(buffer.data(), got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace

TEST_CASE("table reproduces the small counts as CSV") {
  const RunResult r = run_cli("table --r 4 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "r,n,d,lineups,facets\n"
        "1,1,3,1,1\n"
        "2,1,3,1,2\n"
        "3,2,6,2,3\n"
        "4,3,9,4,5\n");
}

TEST_CASE("table past the budget carries a truncation marker") {
  const RunResult r = run_cli("table --r 12 --budget 3 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("truncated at budget r=3") != std::string::npos);
  CHECK(r.output.find("4,3,9") == std::string::npos);
}

TEST_CASE("lineups count and sub-generic instance") {
  const RunResult r = run_cli("lineups --r 5 --format json");
  CHECK(r.exit_code == 0);
  const auto payload = nlohmann::json::parse(r.output);
  CHECK(payload["count"] == 10);

  const RunResult sub = run_cli("lineups --n 1 --d 3 --r 2 --format json");
  CHECK(sub.exit_code == 0);
  CHECK(nlohmann::json::parse(sub.output)["count"] == 1);
}

TEST_CASE("check reports membership with slacks both ways") {
  const RunResult outside =
      run_cli("check --n 2 --lambda 1,19/20,1/20 --w 1/2,2/5,1/10 --format json");
  CHECK(outside.exit_code == 0);
  auto payload = nlohmann::json::parse(outside.output);
  CHECK(payload["membership"]["inside"] == false);
  CHECK(payload["membership"]["violated_prefix"] == 2);
  CHECK(payload["routes_agree"] == true);

  const RunResult inside = run_cli("check --n 2 --lambda 2/3,2/3,2/3 --w 1/2,2/5,1/10 --format json");
  payload = nlohmann::json::parse(inside.output);
  CHECK(payload["membership"]["inside"] == true);
  CHECK(payload["closed_form_inside"] == true);
}

TEST_CASE("minimal flag prunes the redundant Pauli bound at (2,3)") {
  const RunResult full = run_cli("check --n 2 --lambda 2/3,2/3,2/3 --w 1/2,2/5,1/10 --format json");
  const RunResult minimal =
      run_cli("check --n 2 --lambda 2/3,2/3,2/3 --w 1/2,2/5,1/10 --minimal --format json");
  const auto full_slacks = nlohmann::json::parse(full.output)["constraint_slacks"];
  const auto min_slacks = nlohmann::json::parse(minimal.output)["constraint_slacks"];
  CHECK(full_slacks.size() == 3);
  CHECK(min_slacks.size() == 2);
}

TEST_CASE("figure-data emits the hexagon") {
  const RunResult r = run_cli("figure-data --w 1/2,2/5,1/10");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("sigma,3,9/10,3/5") != std::string::npos);
  CHECK(r.output.find("sigma_down,0,2/3,2/3") != std::string::npos);

  const RunResult point = run_cli("figure-data --w 1/3,1/3,1/3");
  CHECK(point.output ==
        "set,index,lambda1,lambda2\n"
        "sigma,0,2/3,2/3\n"
        "sigma_down,0,2/3,2/3\n");

  // full weight on the lowest state: the triangle spanned by permutations
  // of (1,1,0)
  const RunResult triangle = run_cli("figure-data --w 1,0,0");
  CHECK(triangle.output.find("sigma,0,0,1\n") != std::string::npos);
  CHECK(triangle.output.find("sigma,1,1,0\n") != std::string::npos);
  CHECK(triangle.output.find("sigma,2,1,1\n") != std::string::npos);
}

TEST_CASE("gok and gaps") {
  const RunResult gok = run_cli("gok --n 2 --h 1,2,3 --w 1/2,2/5,1/10 --format json");
  CHECK(gok.exit_code == 0);
  const auto payload = nlohmann::json::parse(gok.output);
  CHECK(payload["value"] == "18/5");
  CHECK(payload["ties"] == false);

  const RunResult gaps = run_cli("gaps --n 2 --h 1,2,3 --r 3 --format json");
  const auto gap_payload = nlohmann::json::parse(gaps.output);
  CHECK(gap_payload["gaps"] == nlohmann::json::array({"1", "2"}));
}

TEST_CASE("dft-check rejects a Pauli violation") {
  const RunResult r = run_cli("dft-check --n 2 --w 1,0,0 --density 3/2,1/2,0 --format json");
  CHECK(r.exit_code == 0);
  CHECK(nlohmann::json::parse(r.output)["inside"] == false);
}

TEST_CASE("identical invocations are byte-identical") {
  const std::string args = "vertices --n 3 --d 6 --r 4 --format json";
  const RunResult first = run_cli(args);
  const RunResult second = run_cli(args);
  CHECK(first.exit_code == 0);
  CHECK(first.output == second.output);

  const RunResult v1 = run_cli("verify --samples 25 --seed 9");
  const RunResult v2 = run_cli("verify --samples 25 --seed 9");
  CHECK(v1.exit_code == 0);
  CHECK(v1.output == v2.output);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("lineups").exit_code == 2);                         // missing --r
  CHECK(run_cli("lineups --r 0").exit_code == 2);                   // invalid length
  CHECK(run_cli("lineups --n 2 --d 3 --r 4").exit_code == 2);       // r > C(d,N)
  CHECK(run_cli("check --n 2 --lambda 1,1,1 --w 1,0").exit_code == 2);  // wrong total
  CHECK(run_cli("vertices --n 2 --d 3 --w 1/2,1/3").exit_code == 2);    // weights not normalized
  CHECK(run_cli("figure-data --n 3 --d 6 --r 2").exit_code == 2);       // unsupported projection
  CHECK(run_cli("nonsense").exit_code == 2);
}

TEST_CASE("config file supplies defaults") {
  const std::string path = std::string(CLI_BINARY) + "_config.tmp";
  {
    std::ofstream out(path);
    out << "format=json\n";
  }
  const RunResult r = run_cli("gaps --n 2 --h 1,2,3 --r 2 --config " + path);
  CHECK(r.exit_code == 0);
  CHECK(nlohmann::json::parse(r.output)["gaps"] == nlohmann::json::array({"1"}));
  std::remove(path.c_str());
}

TEST_CASE("thread cap variable is honored without changing results") {
  const RunResult capped = run_cli("verify --samples 25 --seed 4");
  const std::string with_env =
      std::string("EXCLUSIONPOLY_THREADS=1 ") + CLI_BINARY + " verify --samples 25 --seed 4 2>&1";
  FILE* pipe = popen(with_env.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  std::array<char, 4096> buffer;
  size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) output.append(buffer.data(), got);
  const int status = pclose(pipe);
  CHECK(WEXITSTATUS(status) == 0);
  CHECK(output == capped.output);
}
