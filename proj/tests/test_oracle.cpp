#include "polsolve/oracle.hpp"

#include <cmath>

#include "doctest.h"

using namespace polsolve;

namespace {

struct Fixture {
  Field field = Field::gf2ext(4);
  PolySystem sys;
  ReducedRationalSolution sol;
  Fixture() {
    auto inst = generate_instance(field, 3, 3, 2, 2, 2, 17);
    sys = std::move(inst.first);
    sol = std::move(inst.second);
  }
};

}  // namespace

TEST_CASE("honest and corrupted samples") {
  Fixture fx;
  Rng rng(23);
  auto points = choose_evaluation_points(fx.sys, fx.sol.g, 12, rng);
  auto plan = ErrorPlan::random(12, 5, rng);
  auto samples = sample_black_box(fx.sys, fx.sol, points, plan, rng);
  REQUIRE(samples.size() == 12);
  auto errors = effective_error_set(samples, fx.sol);
  CHECK(errors == plan.error_set);
  for (const auto& s : samples) {
    CHECK(s.A.rank() == 3);
    CHECK(s.is_corrupted == plan.is_error(s.index));
    if (!s.is_corrupted) {
      CHECK(s.A == fx.sys.eval_A(s.alpha));
      CHECK(s.b == fx.sys.eval_b(s.alpha));
    }
  }
}

TEST_CASE("e = 0 reproduces the exact evaluation") {
  Fixture fx;
  Rng rng(29);
  auto points = choose_evaluation_points(fx.sys, fx.sol.g, 5, rng);
  auto samples = sample_black_box(fx.sys, fx.sol, points, ErrorPlan{5, {}}, rng);
  for (const auto& s : samples) CHECK(!s.is_corrupted);
  CHECK(effective_error_set(samples, fx.sol).empty());
}

TEST_CASE("corrupted entries pass a coarse uniformity check") {
  // n = m = 1, A = 1, g = 1: corrupted b is uniform conditioned on
  // b != f(alpha), the classic RS channel. Chi-squared over the b draws.
  Field f = Field::gf2ext(4);
  PolySystem sys{&f, 1, 1, {Poly::one(f)}, {Poly(f, {1, 1})}};
  ReducedRationalSolution sol{{Poly(f, {1, 1})}, Poly::one(f)};
  Rng rng(31);
  std::vector<double> counts(f.q(), 0.0);
  std::vector<double> expected(f.q(), 0.0);
  const int rounds = 1500;
  for (int round = 0; round < rounds; ++round) {
    auto points = choose_evaluation_points(sys, sol.g, 12, rng);
    auto plan = ErrorPlan::random(12, 8, rng);
    auto samples = sample_black_box(sys, sol, points, plan, rng);
    for (const auto& s : samples) {
      if (!s.is_corrupted) continue;
      counts[s.b[0]] += 1.0;
      // uniform over q-1 values excluding f(alpha)
      const uint64_t excluded = sol.f[0].eval(s.alpha);
      for (uint64_t v = 0; v < f.q(); ++v)
        if (v != excluded) expected[v] += 1.0 / static_cast<double>(f.q() - 1);
    }
  }
  double total = 0;
  for (double c : counts) total += c;
  REQUIRE(total >= 10000);
  double chi2 = 0;
  for (uint64_t v = 0; v < f.q(); ++v)
    chi2 += (counts[v] - expected[v]) * (counts[v] - expected[v]) / expected[v];
  const double dof = static_cast<double>(f.q() - 1);
  CHECK(chi2 <= dof + 3.0 * std::sqrt(2.0 * dof));
}

TEST_CASE("adversarial corruption") {
  Fixture fx;
  auto [alt_sys, alt_sol] = generate_instance(fx.field, 3, 3, 2, 2, 2, 99);
  Rng rng(37);
  auto points = choose_evaluation_points(fx.sys, fx.sol.g, 10, rng);
  SUBCASE("empty E is the identity") {
    auto samples = adversarial_corrupt(fx.sys, points, {}, alt_sys);
    CHECK(effective_error_set(samples, fx.sol).empty());
  }
  SUBCASE("corrupted points carry the other system's evaluations") {
    auto samples = adversarial_corrupt(fx.sys, points, {2, 5}, alt_sys);
    CHECK(samples[1].A == alt_sys.eval_A(points[1]));
    CHECK(samples[4].b == alt_sys.eval_b(points[4]));
  }
  SUBCASE("shape mismatch is rejected") {
    auto [small, small_sol] = generate_instance(fx.field, 2, 2, 1, 1, 1, 7);
    CHECK_THROWS_AS(adversarial_corrupt(fx.sys, points, {1}, small), UsageError);
  }
}

TEST_CASE("samples file round trip") {
  Fixture fx;
  Rng rng(41);
  auto points = choose_evaluation_points(fx.sys, fx.sol.g, 8, rng);
  auto plan = ErrorPlan::random(8, 3, rng);
  auto samples = sample_black_box(fx.sys, fx.sol, points, plan, rng);
  std::string text = serialize_samples(fx.field, 3, 3, samples);
  SampleFile parsed = parse_samples(text);
  REQUIRE(parsed.samples.size() == samples.size());
  for (size_t i = 0; i < samples.size(); ++i) {
    CHECK(parsed.samples[i].alpha == samples[i].alpha);
    CHECK(parsed.samples[i].A == samples[i].A);
    CHECK(parsed.samples[i].b == samples[i].b);
  }
  CHECK_THROWS_AS(parse_samples("SAMPLE 1 : 0 | 1 | 1\n"), ParseError);
}
