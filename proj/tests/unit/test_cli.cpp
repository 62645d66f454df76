#include <doctest.h>
#include <json.hpp>

#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = theta_forge::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("theta class 0 at p = 3") {
    const auto r = invoke({"theta", "--prime", "3", "--class", "0", "--order", "7"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    std::map<std::string, std::string> coef;
    for (const auto& t : j["terms"]) coef[t["exp"]] = t["coef"]["coeffs"][0];
    CHECK(coef["0"] == "1");
    CHECK(coef["1"] == "6");
    CHECK(coef["3"] == "6");
    CHECK(coef["4"] == "6");
    CHECK(coef["7"] == "12");
    CHECK(coef.count("2") == 0);
  }

  TEST_CASE("output is byte stable") {
    const std::vector<std::string> args{"rep", "zmap", "--prime", "3", "--orbit", "1,3", "--order", "4"};
    CHECK(invoke(args).out == invoke(args).out);
  }

  TEST_CASE("code report for the tetracode") {
    const auto r = invoke({"code", "--code", "tetracode"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["size"] == 9);
    CHECK(j["self_dual"] == true);
    CHECK(j["min_distance"] == 3);
  }

  TEST_CASE("lattice of the tetracode is E8") {
    const auto r = invoke({"lattice", "--code", "tetracode", "--info"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["rank"] == 8);
    CHECK(j["discriminant"] == "1");
    CHECK(j["even"] == true);
    CHECK(j["minimal_norm"] == "2");
  }

  TEST_CASE("exact alpbach mode for the tetracode") {
    const auto r = invoke({"verify", "alpbach", "--prime", "3", "--code", "tetracode"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["pass"] == true);
  }

  TEST_CASE("numerical alpbach mode reads a points file") {
    const std::string path = "cli_points_test.txt";
    {
      std::ofstream f(path);
      f << "# tau\n0.1,1.2\n\n-0.3,0.9\n";
    }
    const auto r = invoke({"verify", "alpbach", "--code", "tetracode", "--points", path, "--tol", "1e-8"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["points"].size() == 2);
    std::remove(path.c_str());
  }

  TEST_CASE("main theorem check at p = 5") {
    const auto r = invoke({"rep", "check-main", "--prime", "5", "--n", "2"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["pass"] == true);
  }

  TEST_CASE("tower check") {
    const auto r = invoke({"tower", "check", "--n", "4"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["order"] == 96);
    CHECK(j["perfect"] == false);
  }

  TEST_CASE("clifford delta of e0 e1 is E1") {
    const auto r = invoke({"clifford", "delta", "--word", "0,1"});
    REQUIRE(r.code == 0);
    const auto m = nlohmann::json::parse(r.out)["matrix"];
    CHECK(m.size() == 8);
    CHECK(r.code == 0);
    CHECK(invoke({"clifford", "delta", "--word", "0"}).code == 2);
    CHECK(invoke({"clifford", "delta", "--word", "0", "--rep", "full"}).code == 0);
  }

  TEST_CASE("formats") {
    const auto csv = invoke({"--format", "csv", "theta", "--prime", "3", "--class", "1", "--order", "2"});
    CHECK(csv.code == 0);
    CHECK(csv.out.rfind("exp,coeffs,den\n", 0) == 0);
    const auto pretty = invoke({"--format", "pretty", "tower", "check", "--n", "3"});
    CHECK(pretty.code == 0);
    CHECK(pretty.out.find("order: 12") != std::string::npos);
  }

  TEST_CASE("usage errors exit with 2") {
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"theta", "--bogus"}).code == 2);
    CHECK(invoke({"code", "--code", "no_such_code_file"}).code == 2);
    CHECK(invoke({"verify", "alpbach", "--prime", "5", "--code", "tetracode"}).code == 2);
    CHECK(invoke({"rep", "zmap", "--orbit", "1,x"}).code == 2);
    CHECK(invoke({"--help"}).code == 0);
  }
}
