#include "polsolve/experiment.hpp"

#include "doctest.h"

using namespace polsolve;

namespace {

ExperimentConfig small_config() {
  ExperimentConfig cfg{Field::gf2ext(4)};
  cfg.n = cfg.m = 2;
  cfg.degA = 1;
  cfg.df = 1;
  cfg.dg = 1;
  cfg.e = 2;
  cfg.systems = 3;
  cfg.trials = 40;
  cfg.seed = 12345;
  return cfg;
}

}  // namespace

TEST_CASE("same seed, same counts, regardless of thread count") {
  ExperimentConfig cfg = small_config();
  ExperimentResult a = run_experiment(cfg);
  cfg.threads = 4;
  ExperimentResult b = run_experiment(cfg);
  CHECK(csv_row_stable(a) == csv_row_stable(b));
  CHECK(a.failures == b.failures);
  CHECK(a.wrong == b.wrong);
}

TEST_CASE("error-free runs never fail") {
  ExperimentConfig cfg = small_config();
  cfg.e = 0;
  ExperimentResult glz = run_experiment(cfg);
  CHECK(glz.failures == 0);
  CHECK(glz.wrong == 0);
  cfg.method = Method::kBk;
  cfg.l_mode = LMode::kBk;
  ExperimentResult bk = run_experiment(cfg);
  CHECK(bk.failures == 0);
  CHECK(bk.wrong == 0);
}

TEST_CASE("bk at L_BK never fails with errors present") {
  ExperimentConfig cfg = small_config();
  cfg.method = Method::kBk;
  cfg.l_mode = LMode::kBk;
  ExperimentResult r = run_experiment(cfg);
  CHECK(r.failures == 0);
  CHECK(r.wrong == 0);
}

TEST_CASE("observed failure rate respects the theorem bound") {
  ExperimentConfig cfg = small_config();
  cfg.trials = 100;
  ExperimentResult r = run_experiment(cfg);
  CHECK(r.wrong == 0);
  const double total = static_cast<double>(cfg.systems * cfg.trials);
  CHECK(r.p_observed <= r.p_glz + 3.0 * std::sqrt(r.p_glz / total));
}

TEST_CASE("csv layout") {
  CHECK(csv_header() ==
        "q,n,m,df,dg,e,L,mode,method,systems,trials,failures,wrong,p_observed,p_glz,p_bms,"
        "seed,ms");
  ExperimentConfig cfg = small_config();
  cfg.trials = 5;
  ExperimentResult r = run_experiment(cfg);
  std::string row = csv_row(r);
  CHECK(row.rfind("16,2,2,1,1,2,", 0) == 0);
  CHECK(std::count(row.begin(), row.end(), ',') == 17);
}
