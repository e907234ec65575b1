// End-to-end checks of the installed command-line surface: every assertion
// here goes through the radon binary (path injected as RADON_CLI_PATH).
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#if !defined(_WIN32)
#include <sys/wait.h>
#endif

#ifndef RADON_CLI_PATH
#error "RADON_CLI_PATH must point at the radon binary"
#endif

namespace fs = std::filesystem;

namespace {

fs::path work_dir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "radon-cli-tests";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

int run_cli(const std::string& argsLine) {
  std::string cmd = std::string(RADON_CLI_PATH) + " " + argsLine + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  if (status == -1) return -1;
#if defined(_WIN32)
  return status;
#else
  return WEXITSTATUS(status);
#endif
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line))
    if (!line.empty()) out.push_back(line);
  return out;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("verify is byte-deterministic and reruns reproduce the summary") {
  auto d = work_dir();
  auto f1 = d / "v1.json", f2 = d / "v2.json";
  std::string args = "verify --suite 1,3,11 --seed 7 --output ";
  REQUIRE(run_cli(args + f1.string()) == 0);
  REQUIRE(run_cli(args + f2.string()) == 0);
  std::string s1 = slurp(f1), s2 = slurp(f2);
  REQUIRE_FALSE(s1.empty());
  CHECK(s1 == s2);

  auto j = nlohmann::json::parse(s1);
  CHECK(j.at("seed") == 7);
  CHECK(j.at("criteria").size() == 3);
  CHECK(j.at("allPass") == true);
}

TEST_CASE("verify reports red criteria with exit 1 but still writes the summary") {
  auto d = work_dir();
  auto out = d / "red.json";
  CHECK(run_cli("verify --suite 4 --seed 7 --output " + out.string()) == 1);
  REQUIRE(fs::exists(out));
  auto j = nlohmann::json::parse(slurp(out));
  CHECK(j.at("allPass") == false);
  CHECK(j.at("criteria").at(0).at("id") == 4);
}

TEST_CASE("config files feed options and unknown keys abort with exit 2") {
  auto d = work_dir();
  auto good = d / "good.json", bad = d / "bad.json", out = d / "un.json";
  std::ofstream(good) << R"({"N": 10, "rho": 1.0})";
  std::ofstream(bad) << R"({"N": 10, "rho": 1.0, "bogus": 3})";

  REQUIRE(run_cli("un --config " + good.string() + " --output " + out.string()) == 0);
  auto j = nlohmann::json::parse(slurp(out));
  CHECK(j.at("memberCount") == 640);
  CHECK(j.at("containsAllUpToN") == true);

  auto never = d / "never.json";
  CHECK(run_cli("un --config " + bad.string() + " --output " + never.string()) == 2);
  CHECK_FALSE(fs::exists(never));

  // command line wins over config for a key present in both
  auto out2 = d / "un2.json";
  REQUIRE(run_cli("un --N 2 --config " + good.string() + " --rho 2 --output " + out2.string()) ==
          0);
  auto j2 = nlohmann::json::parse(slurp(out2));
  CHECK(j2.at("N") == 2);
  CHECK(j2.at("memberCount") == 9);
}

TEST_CASE("normratio emits one CSV row per exponent") {
  auto d = work_dir();
  auto out = d / "nr.csv";
  REQUIRE(run_cli("normratio --p 1.5,2 --grid dyadic:3 --family deltas:2 --mapping moment:2 "
                  "--output " +
                  out.string()) == 0);
  auto rows = lines_of(slurp(out));
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == "p,ratio,numerator,denominator");
  CHECK(rows[1].rfind("1.5,", 0) == 0);
  CHECK(rows[2].rfind("2,", 0) == 0);
}

TEST_CASE("weyl CSV schema") {
  auto d = work_dir();
  auto out = d / "w.csv";
  REQUIRE(run_cli("weyl --k 1 --degree 2 --rational 0,1/4 --N 4,8 --output " + out.string()) ==
          0);
  auto rows = lines_of(slurp(out));
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == "N,value_re,value_im,bound,ratio");
}

TEST_CASE("partition JSON is well formed") {
  auto d = work_dir();
  auto out = d / "part.json";
  REQUIRE(run_cli("partition --N 6 --k 2 --output " + out.string()) == 0);
  auto j = nlohmann::json::parse(slurp(out));
  CHECK(j.at("N") == 6);
  CHECK(j.at("k") == 2);
  CHECK(j.at("familySize").get<int>() >= 1);
  CHECK(j.at("partitions").is_array());
  CHECK(j.at("verified") == true);
}

TEST_CASE("apply matches the averaging oracle") {
  auto d = work_dir();
  auto in = d / "delta.json", out = d / "avg.json";
  // moment:2 maps Z -> Z^2 along (y, y^2), so f lives on Z^2
  std::ofstream(in) << R"({"dim":2,"points":[[0,0]],"values":[[1.0,0.0]]})";
  REQUIRE(run_cli("apply --kind avg --mapping moment:2 --N 3 --input " + in.string() +
                  " --output " + out.string()) == 0);
  auto j = nlohmann::json::parse(slurp(out));
  CHECK(j.at("dim") == 2);
  // M_3 delta_0 is 1/3 at x = (y, y^2), y = 1..3
  REQUIRE(j.at("points").size() == 3);
  std::vector<std::vector<std::int64_t>> xs;
  for (const auto& p : j.at("points")) xs.push_back(p.get<std::vector<std::int64_t>>());
  CHECK(xs == std::vector<std::vector<std::int64_t>>{{1, 1}, {2, 4}, {3, 9}});
  for (const auto& v : j.at("values")) {
    CHECK(v.at(0).get<double>() == doctest::Approx(1.0 / 3.0));
    CHECK(v.at(1).get<double>() == doctest::Approx(0.0));
  }
}

TEST_CASE("missing required options exit 2") {
  CHECK(run_cli("apply --kind avg") == 2);
  CHECK(run_cli("does-not-exist") == 2);
}

}  // TEST_SUITE
