#include <catch2/catch_amalgamated.hpp>

#include "spinlab/report.hpp"
#include "spinlab/suites.hpp"

using namespace spinlab;

TEST_CASE("check report semantics") {
  auto ok = CheckReport::make("a/b", 1e-12, 1e-10);
  REQUIRE(ok.pass);
  auto bad = CheckReport::make("a/c", 2e-10, 1e-10);
  REQUIRE(!bad.pass);
  auto edge = CheckReport::make("a/d", 1e-10, 1e-10);
  REQUIRE(edge.pass);  // pass = residual <= tolerance
}

TEST_CASE("json and csv emission") {
  std::vector<CheckReport> reports = {
      CheckReport::make("z/later", 0.0, 0.0, {{"k", "v"}}, "note \"quoted\""),
      CheckReport::make("a/first", 0.5, 1.0),
  };
  std::string js = reports_to_json(reports);
  REQUIRE(js.find("a/first") < js.find("z/later"));  // sorted by check_id
  REQUIRE(js.find("\\\"quoted\\\"") != std::string::npos);
  REQUIRE(js.find("\"pass\": true") != std::string::npos);

  std::string cs = reports_to_csv(reports);
  REQUIRE(cs.rfind("check_id,residual,tolerance,pass,inputs,notes\n", 0) == 0);
  REQUIRE(cs.find("a/first,0.5,1,true") != std::string::npos);
}

TEST_CASE("seventeen digit floats") {
  REQUIRE(fmt17(1.0) == "1");
  REQUIRE(fmt17(0.1) == "0.10000000000000001");
  REQUIRE(fmt17(M_PI) == "3.1415926535897931");
}

TEST_CASE("config validation") {
  SuiteConfig cfg;
  REQUIRE(cfg.valid());
  cfg.s3 = 0.5;  // off shell
  std::string why;
  REQUIRE(!cfg.valid(&why));
  REQUIRE(why.find("mass shell") != std::string::npos);
  cfg = SuiteConfig{};
  cfg.alpha_grid_size = 1;
  REQUIRE(!cfg.valid());
  cfg = SuiteConfig{};
  REQUIRE_THROWS_AS(suites::run_suite(SuiteConfig{.s3 = 0.5}, {"fockstat"}),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(suites::run_suite(cfg, {"nonsense"}), std::invalid_argument);
}

TEST_CASE("deterministic reports") {
  SuiteConfig cfg;
  auto a = reports_to_json(suites::run_suite(cfg, {"fockstat"}));
  auto b = reports_to_json(suites::run_suite(cfg, {"fockstat"}));
  REQUIRE(a == b);
  // fockstat residuals are exact zeros
  REQUIRE(a.find("\"residual\": 0,") != std::string::npos);
  REQUIRE(a.find("\"pass\": false") == std::string::npos);
}

TEST_CASE("tables") {
  SuiteConfig cfg;
  cfg.alpha_grid_size = 16;
  auto t = suites::emit_table("plucker-curve", cfg);
  REQUIRE(t.columns == std::vector<std::string>{"alpha", "p012", "p123"});
  REQUIRE(t.rows.size() == 16);
  REQUIRE(t.rows[0][1] == 1.0);  // cos 0
  std::string csv = t.to_csv();
  REQUIRE(csv.rfind("alpha,p012,p123\n", 0) == 0);
  std::string js = t.to_json();
  REQUIRE(js.find("\"p012\"") != std::string::npos);

  auto ek = suites::emit_table("epsilon-kappa", cfg);
  REQUIRE(ek.rows.size() == 16);
  // row at alpha = 0: identity epsilon, zero kappa
  REQUIRE(ek.rows[0][1] == 1.0);
  REQUIRE(ek.rows[0][5] == Catch::Approx(0.0).margin(1e-12));

  auto cur = suites::emit_table("curvature", cfg);
  for (const auto& row : cur.rows) REQUIRE(row[1] == Catch::Approx(1.0).margin(1e-9));

  REQUIRE_THROWS_AS(suites::emit_table("nope", cfg), std::invalid_argument);
}
