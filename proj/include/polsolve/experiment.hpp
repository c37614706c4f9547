// Monte-Carlo failure-rate harness: S random systems x T trials per
// configuration, fresh points / error plan / corruption per trial, CSV rows
// out. Per-trial seeds are derived from (master seed, system, trial), so the
// thread count never changes the counts.
#pragma once

#include <atomic>
#include <chrono>
#include <cstdio>
#include <string>
#include <thread>
#include <vector>

#include "polsolve/bk.hpp"
#include "polsolve/glz.hpp"
#include "polsolve/irs.hpp"
#include "polsolve/oracle.hpp"

namespace polsolve {

enum class LMode { kGlz, kBk, kStar, kExplicit };
enum class Method { kGlz, kBk };

inline const char* to_string(LMode m) {
  switch (m) {
    case LMode::kGlz: return "glz";
    case LMode::kBk: return "bk";
    case LMode::kStar: return "star";
    case LMode::kExplicit: return "explicit";
  }
  return "?";
}
inline const char* to_string(Method m) { return m == Method::kGlz ? "glz" : "bk"; }

struct ExperimentConfig {
  Field field;
  size_t n = 3, m = 3;
  int degA = 2, df = 2, dg = 2, e = 5;
  LMode l_mode = LMode::kGlz;
  size_t explicit_L = 0;
  size_t systems = 20;
  size_t trials = 1000;
  uint64_t seed = 0;
  Method method = Method::kGlz;
  unsigned threads = 1;

  size_t point_count() const {
    switch (l_mode) {
      case LMode::kGlz: return l_glz(n, df, dg, e);
      case LMode::kBk: return l_bk(df, dg, e, 0);
      case LMode::kStar: return l_star(n, df, dg, e);
      case LMode::kExplicit: return explicit_L;
    }
    return 0;
  }
};

struct ExperimentResult {
  ExperimentConfig cfg;
  size_t L = 0;
  size_t failures = 0;
  size_t wrong = 0;  // Success with a solution differing from the planted one
  double p_observed = 0.0;
  double p_glz = 0.0;
  double p_bms = 0.0;
  int64_t ms = 0;
};

// Draws a system and rejects draws that leave fewer than L usable
// evaluation points (possible over tiny fields).
inline std::pair<PolySystem, ReducedRationalSolution> draw_feasible_system(
    const ExperimentConfig& cfg, size_t L, uint64_t seed) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    auto inst = generate_instance(cfg.field, cfg.n, cfg.m, cfg.degA, cfg.df, cfg.dg, seed);
    if (count_usable_points(inst.first, inst.second.g) >= L) return inst;
    seed = splitmix64(seed);
  }
  throw UsageError("configuration infeasible: not enough usable evaluation points");
}

inline ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  const size_t L = cfg.point_count();
  ExperimentResult result{cfg};
  result.L = L;

  std::vector<size_t> failures(cfg.systems, 0), wrong(cfg.systems, 0);
  auto run_system = [&](size_t s) {
    auto [sys, planted] = draw_feasible_system(cfg, L, derive_seed(cfg.seed, s + 1, 0));
    DecodeParams dp;
    dp.n = cfg.n;
    dp.df = cfg.df;
    dp.dg = cfg.dg;
    dp.e = cfg.e;
    for (size_t t = 0; t < cfg.trials; ++t) {
      Rng rng(derive_seed(cfg.seed, s + 1, t + 1));
      auto points = choose_evaluation_points(sys, planted.g, L, rng);
      auto plan = ErrorPlan::random(L, static_cast<size_t>(cfg.e), rng);
      auto samples = sample_black_box(sys, planted, points, plan, rng);
      DecodeOutcome out = cfg.method == Method::kGlz
                              ? decode(samples, dp, rng)
                              : bk_solve(samples, cfg.n, cfg.df, cfg.dg, cfg.e);
      if (!out.ok())
        ++failures[s];
      else if (out.solution != planted)
        ++wrong[s];
    }
  };

  const unsigned workers = std::max(1u, cfg.threads);
  if (workers == 1) {
    for (size_t s = 0; s < cfg.systems; ++s) run_system(s);
  } else {
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (size_t s = next.fetch_add(1); s < cfg.systems; s = next.fetch_add(1))
          run_system(s);
      });
    for (auto& th : pool) th.join();
  }
  for (size_t s = 0; s < cfg.systems; ++s) {
    result.failures += failures[s];
    result.wrong += wrong[s];
  }

  const double total = static_cast<double>(cfg.systems * cfg.trials);
  const double q = static_cast<double>(cfg.field.q());
  result.p_observed = static_cast<double>(result.failures) / total;
  result.p_glz = static_cast<double>(cfg.dg + cfg.e) / q;
  result.p_bms = std::exp(std::pow(q, 2.0 - static_cast<double>(cfg.n))) / (q - 1.0);
  result.ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
  return result;
}

inline std::string csv_header() {
  return "q,n,m,df,dg,e,L,mode,method,systems,trials,failures,wrong,p_observed,p_glz,p_bms,"
         "seed,ms";
}

inline std::string csv_row(const ExperimentResult& r) {
  char buf[512];
  std::snprintf(buf, sizeof(buf),
                "%llu,%zu,%zu,%d,%d,%d,%zu,%s,%s,%zu,%zu,%zu,%zu,%.6g,%.6g,%.6g,%llu,%lld",
                static_cast<unsigned long long>(r.cfg.field.q()), r.cfg.n, r.cfg.m, r.cfg.df,
                r.cfg.dg, r.cfg.e, r.L, to_string(r.cfg.l_mode), to_string(r.cfg.method),
                r.cfg.systems, r.cfg.trials, r.failures, r.wrong, r.p_observed, r.p_glz,
                r.p_bms, static_cast<unsigned long long>(r.cfg.seed),
                static_cast<long long>(r.ms));
  return buf;
}

// The same row with the wall-time column blanked; reproducibility checks
// compare this form.
inline std::string csv_row_stable(const ExperimentResult& r) {
  std::string row = csv_row(r);
  return row.substr(0, row.rfind(',') + 1);
}

}  // namespace polsolve
