#include "polsolve/glz.hpp"

#include "doctest.h"

using namespace polsolve;

TEST_CASE("point-count formulas") {
  CHECK(l_glz(3, 2, 2, 5) == 12);
  CHECK(l_bk(2, 2, 5, 0) == 15);
  CHECK(l_star(3, 2, 2, 5) == 11);
  // n = 1 collapses to the deterministic count
  for (int df = 0; df <= 4; ++df)
    for (int dg = 0; dg <= 4; ++dg)
      for (int e = 0; e <= 4; ++e) {
        CHECK(l_glz(1, df, dg, e) == l_bk(df, dg, e, 0));
        CHECK(l_star(1, df, dg, e) == l_bk(df, dg, e, 0));
      }
  CHECK(l_glz(1, 3, 0, 0) == 4);  // plain interpolation count
}

TEST_CASE("L_GLZ <= L_BK and L* <= L_GLZ exhaustively") {
  for (size_t n = 1; n <= 10; ++n)
    for (int df = 0; df <= 10; ++df)
      for (int dg = 0; dg <= 10; ++dg)
        for (int e = 0; e <= 10; ++e) {
          CHECK(l_glz(n, df, dg, e) <= l_bk(df, dg, e, 0));
          CHECK(l_star(n, df, dg, e) <= l_glz(n, df, dg, e));
        }
}

TEST_CASE("local kernels") {
  Field f(7);
  SUBCASE("identity sample reads off b") {
    MatrixF id = MatrixF::identity(f, 2);
    std::vector<EvaluationSample> samples{{1, 0, id, {2, 3}, false}};
    Rng rng(1);
    auto lk = local_kernels(samples, rng);
    CHECK(lk.y[0] == std::vector<uint64_t>{2, 3});
    CHECK(!lk.randomized[0]);
  }
  SUBCASE("honest samples give f(alpha)/g(alpha)") {
    auto [sys, sol] = generate_instance(f, 2, 2, 1, 1, 1, 3);
    Rng rng(2);
    auto points = choose_evaluation_points(sys, sol.g, 4, rng);
    auto samples = sample_black_box(sys, sol, points, ErrorPlan{4, {}}, rng);
    auto lk = local_kernels(samples, rng);
    for (size_t l = 0; l < 4; ++l) {
      const uint64_t g_val = sol.g.eval(points[l]);
      for (size_t i = 0; i < 2; ++i)
        CHECK(lk.y[l][i] == f.div(sol.f[i].eval(points[l]), g_val));
    }
  }
  SUBCASE("overdetermined corrupted sample with trivial kernel is randomized") {
    // rank(C_l) = n+1: 3 rows, 2+1 columns, generic entries
    MatrixF A(f, 3, 2);
    A.at(0, 0) = 1, A.at(1, 1) = 1, A.at(2, 0) = 1, A.at(2, 1) = 1;
    std::vector<EvaluationSample> samples{{1, 0, A, {1, 1, 3}, true}};
    REQUIRE([&] {
      MatrixF c(f, 3, 3);
      for (size_t i = 0; i < 3; ++i) {
        c.at(i, 0) = A.at(i, 0), c.at(i, 1) = A.at(i, 1);
        c.at(i, 2) = f.neg(samples[0].b[i]);
      }
      return c.rank() == 3;
    }());
    Rng rng(3);
    auto lk = local_kernels(samples, rng);
    CHECK(lk.randomized[0]);
  }
}

TEST_CASE("key matrix structure") {
  Field f = Field::gf2ext(4);
  auto [sys, sol] = generate_instance(f, 3, 3, 2, 2, 2, 7);
  Rng rng(5);
  const size_t L = l_glz(3, 2, 2, 5);
  auto points = choose_evaluation_points(sys, sol.g, L, rng);
  auto plan = ErrorPlan::random(L, 5, rng);
  auto samples = sample_black_box(sys, sol, points, plan, rng);
  auto lk = local_kernels(samples, rng);
  KeyEquationMatrix key = build_key_matrix(f, lk.y, points, 3, 2, 2, 5);
  CHECK(key.m.rows() == 3 * L);
  CHECK(key.m.cols() == 3 * (2 + 5 + 1) + 2 + 5 + 1);

  // (Lambda f, Lambda g) is always in the kernel
  Poly locator = Poly::one(f);
  for (size_t l : plan.error_set) locator = locator * Poly::linear_root(f, points[l - 1]);
  std::vector<Poly> phi;
  for (const Poly& p : sol.f) phi.push_back(p * locator);
  auto vec = key_vector_of(phi, sol.g * locator, 2, 2, 5);
  for (uint64_t entry : key.m.apply(vec)) CHECK(entry == 0);

  // rank never exceeds rho
  CHECK(key.m.rank() <= key.full_rank());
}

TEST_CASE("decode") {
  Field f = Field::gf2ext(4);
  auto [sys, sol] = generate_instance(f, 3, 3, 2, 2, 2, 11);
  DecodeParams dp{3, 2, 2, 5};
  SUBCASE("error free at the e=0 point count") {
    DecodeParams clean{3, 2, 2, 0};
    Rng rng(6);
    auto points = choose_evaluation_points(sys, sol.g, 5, rng);
    auto samples = sample_black_box(sys, sol, points, ErrorPlan{5, {}}, rng);
    auto out = decode(samples, clean, rng);
    REQUIRE(out.ok());
    CHECK(out.solution == sol);
    CHECK(out.locator.is_one());
  }
  SUBCASE("single error success names the corrupted point") {
    DecodeParams one{3, 2, 2, 1};
    for (uint64_t seed = 0; seed < 20; ++seed) {
      Rng rng(seed);
      const size_t L = l_glz(3, 2, 2, 1);
      auto points = choose_evaluation_points(sys, sol.g, L, rng);
      auto plan = ErrorPlan::random(L, 1, rng);
      auto samples = sample_black_box(sys, sol, points, plan, rng);
      auto out = decode(samples, one, rng);
      if (!out.ok()) continue;
      CHECK(out.solution == sol);
      CHECK(out.locator == Poly::linear_root(f, points[plan.error_set[0] - 1]));
    }
  }
  SUBCASE("success is reduced, monic, exact") {
    Rng rng(8);
    const size_t L = l_glz(3, 2, 2, 5);
    for (int trial = 0; trial < 50; ++trial) {
      auto points = choose_evaluation_points(sys, sol.g, L, rng);
      auto plan = ErrorPlan::random(L, 5, rng);
      auto samples = sample_black_box(sys, sol, points, plan, rng);
      auto out = decode(samples, dp, rng);
      if (!out.ok()) continue;
      CHECK(out.solution.g.is_monic());
      CHECK(out.solution.g.degree() == 2);
      CHECK(common_divisor(out.solution.f, out.solution.g).is_one());
      CHECK(satisfies(sys, out.solution.f, out.solution.g));
      CHECK(out.solution == sol);
    }
  }
  SUBCASE("too few points is a usage error") {
    Rng rng(9);
    auto points = choose_evaluation_points(sys, sol.g, 4, rng);
    auto samples = sample_black_box(sys, sol, points, ErrorPlan{4, {}}, rng);
    CHECK_THROWS_AS(decode(samples, dp, rng), UsageError);
  }
}

TEST_CASE("kernel-dimension witness") {
  SUBCASE("e = 0 is plain reconstruction") {
    Field f101(101);
    auto [sys, sol] = generate_instance(f101, 2, 2, 1, 2, 1, 13);
    Rng rng(10);
    auto points = choose_evaluation_points(sys, sol.g, 4, rng);
    CHECK(kernel_dim_one_witness(sys, sol, points, {}, 2, 1, 0));
  }
  SUBCASE("n = 1 over a small field with one error") {
    Field f13(13);
    auto [sys, sol] = generate_instance(f13, 1, 1, 1, 1, 1, 14);
    Rng rng(11);
    const size_t L = l_glz(1, 1, 1, 1);
    auto points = choose_evaluation_points(sys, sol.g, L, rng);
    CHECK(kernel_dim_one_witness(sys, sol, points, {2}, 1, 1, 1));
  }
  SUBCASE("partition condition is enforced") {
    Field f101(101);
    auto [sys, sol] = generate_instance(f101, 2, 2, 1, 1, 1, 15);
    Rng rng(12);
    auto points = choose_evaluation_points(sys, sol.g, 4, rng);
    CHECK_THROWS_AS(kernel_dim_one_witness(sys, sol, points, {1, 2, 3}, 1, 1, 1), UsageError);
  }
}
