#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "spinlab/suites.hpp"

namespace {

int write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    return 2;
  }
  out << text;
  return 0;
}

int emit_reports(std::vector<spinlab::CheckReport> reports, const spinlab::SuiteConfig& cfg) {
  std::string text = (cfg.format == "csv") ? spinlab::reports_to_csv(reports)
                                           : spinlab::reports_to_json(reports);
  int rc = write_output(text, cfg.out_path);
  if (rc != 0) return rc;
  for (const auto& r : reports)
    if (!r.pass) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"superspin-lab: numerical verification suites for the frame-deformation model"};
  app.require_subcommand(1);

  spinlab::SuiteConfig cfg;
  app.add_option("--tol", cfg.abs_eps, "absolute tolerance (default 1e-10)");
  app.add_option("--rank-tol", cfg.rank_eps, "relative rank threshold (default 1e-8)");
  app.add_option("--grid", cfg.alpha_grid_size, "alpha grid size (default 256)");
  app.add_option("--seed", cfg.seed, "RNG seed (default 42)");
  app.add_option("--mass", cfg.mass, "mass m (default 1)");
  app.add_option("--s0", cfg.s0, "impulse s0 (default sqrt 2)");
  app.add_option("--s3", cfg.s3, "impulse s3 (default 1)");
  app.add_option("--probe-samples", cfg.probe_samples,
                 "samples per family for the intersection probe (default 10000)");
  app.add_option("--format", cfg.format, "output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", cfg.out_path, "output path (default stdout)");

  std::vector<std::string> suites;
  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("suite", suites, "grassmann | liealg | superspin | fockstat | all")
      ->required();

  std::string kind;
  auto* table = app.add_subcommand("table", "emit a parameter-sweep table");
  table->add_option("kind", kind, "plucker-curve | epsilon-kappa | spinors | curvature")
      ->required();

  auto* limits = app.add_subcommand("limits", "evaluate the six boost-curve limits");
  auto* covering = app.add_subcommand("covering", "run the covering-map path check");

  std::string bar = "plain";
  auto* sschk = app.add_subcommand("superspinor-check", "endpoint exchange relation");
  sschk->add_option("--bar", bar, "bar convention: plain | adjoint")
      ->check(CLI::IsMember({"plain", "adjoint"}));
  double ss_alpha = 0.0;
  sschk->add_option("--alpha", ss_alpha, "base alpha (0 or pi supported)");

  for (auto* sub : {verify, table, limits, covering, sschk}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  std::string why;
  if (!cfg.valid(&why)) {
    std::cerr << "config error: " << why << "\n";
    return 2;
  }

  try {
    if (verify->parsed()) {
      return emit_reports(spinlab::suites::run_suite(cfg, suites), cfg);
    }
    if (table->parsed()) {
      auto t = spinlab::suites::emit_table(kind, cfg);
      return write_output(cfg.format == "csv" ? t.to_csv() : t.to_json(), cfg.out_path);
    }
    if (limits->parsed()) {
      std::vector<spinlab::CheckReport> reports;
      for (int k = 1; k <= 3; ++k)
        for (auto o : {spinlab::grassmann::Orientation::right,
                       spinlab::grassmann::Orientation::left}) {
          bool right = o == spinlab::grassmann::Orientation::right;
          auto lim = spinlab::grassmann::curve_limit(k, o);
          auto expect = right ? spinlab::grassmann::point_pinf() : spinlab::grassmann::point_p0();
          double dev = (lim.limit.coords - expect.coords).norm() + lim.richardson;
          reports.push_back(spinlab::CheckReport::make(
              std::string("grassmann/limit-k") + std::to_string(k) + (right ? "-right" : "-left"),
              dev, 1e-5, {}, right ? "limit point Pinf" : "limit point P0"));
        }
      return emit_reports(std::move(reports), cfg);
    }
    if (covering->parsed()) {
      spinlab::liealg::AlgebraElement j3;
      j3.coeffs(2) = 1.0;
      auto cov = spinlab::liealg::covering_check(j3, 4 * M_PI, 4 * cfg.alpha_grid_size);
      std::vector<spinlab::CheckReport> reports;
      reports.push_back(spinlab::CheckReport::make(
          "liealg/covering-two-to-one", spinlab::liealg::covering_witness_residual(), 1e-10, {},
          "sign flip first seen at t = " + spinlab::fmt17(cov.sign_flip_t)));
      reports.push_back(
          spinlab::CheckReport::make("liealg/covering-homomorphism", cov.hom_residual, 1e-8));
      return emit_reports(std::move(reports), cfg);
    }
    if (sschk->parsed()) {
      auto conv = bar == "plain" ? spinlab::superspin::BarConvention::plain_conjugate
                                 : spinlab::superspin::BarConvention::dirac_adjoint;
      auto rel = spinlab::superspin::superspinor_relation(ss_alpha, cfg.mass, cfg.s0, cfg.s3, conv);
      std::vector<spinlab::CheckReport> reports;
      reports.push_back(spinlab::CheckReport::make(
          "superspin/superspinor-signs", std::max(rel.residual_1, rel.residual_2), 1e-12,
          {{"alpha", spinlab::fmt17(ss_alpha)}, {"bar", bar}},
          "w1 pairs with -ubar1, w2 with +ubar2"));
      reports.push_back(spinlab::CheckReport::make("superspin/superspinor-impulse",
                                                   rel.impulse_residual, 0.0));
      return emit_reports(std::move(reports), cfg);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
