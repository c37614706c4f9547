#include "polsolve/irs.hpp"

#include "doctest.h"
#include "bw_oracle.hpp"

using namespace polsolve;



TEST_CASE("encoding") {
  Field f = Field::gf2ext(4);
  IRSParams p = IRSParams::make(f, 8, 3, 2);
  SUBCASE("zero message gives a zero row") {
    auto code = irs_encode({Poly::zero(f), Poly(f, {1, 1})}, p);
    for (uint64_t v : code[0]) CHECK(v == 0);
  }
  SUBCASE("degree overflow is rejected") {
    CHECK_THROWS_AS(irs_encode({Poly(f, {1, 0, 0, 1}), Poly::one(f)}, p), UsageError);
  }
  SUBCASE("full-length code round trips without errors") {
    IRSParams full = IRSParams::make(f, 6, 6, 2);
    Rng rng(1);
    std::vector<Poly> msgs{Poly::random(f, 5, rng), Poly::random(f, 5, rng)};
    auto out = spr_decode(irs_encode(msgs, full), full, 0);
    REQUIRE(out.ok());
    CHECK(out.solution.f == msgs);
  }
}

TEST_CASE("error-free decoding is the identity") {
  Field f = Field::gf2ext(4);
  IRSParams p = IRSParams::make(f, 10, 4, 3);
  Rng rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Poly> msgs;
    for (size_t i = 0; i < 3; ++i) msgs.push_back(Poly::random(f, 3, rng));
    auto out = spr_decode(irs_encode(msgs, p), p, 0);
    REQUIRE(out.ok());
    CHECK(out.solution.f == msgs);
  }
}

TEST_CASE("r = 1 agrees with a direct Berlekamp-Welch oracle") {
  Field f = Field::gf2ext(5);
  const size_t n_c = 20, k = 6;
  const size_t e_max = (n_c - k) / 2;
  IRSParams p = IRSParams::make(f, n_c, k, 1);
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const size_t e = rng.below(e_max + 1);
    SPRInstance inst = make_spr_instance(p, {Poly::random(f, k - 1, rng)}, e, rng);
    auto oracle = testing::berlekamp_welch(f, p.points, inst.received[0], k, e_max);
    REQUIRE(oracle.has_value());
    CHECK(*oracle == inst.messages[0]);
    // The rank test needs the exact error count: decoding with a larger
    // bound leaves a kernel of dimension e_max - e + 1.
    auto out = spr_decode(inst.received, p, e);
    REQUIRE(out.ok());
    CHECK(out.solution.f[0] == *oracle);
  }
}

TEST_CASE("reference bounds reproduce the comparison columns") {
  auto b16 = reference_bounds(16, 16, 4, 3, 5, 2);
  CHECK(b16.p_glz == doctest::Approx(0.4375));
  CHECK(b16.p_bms == doctest::Approx(0.071).epsilon(0.01));
  auto b32 = reference_bounds(32, 16, 4, 3, 5, 2);
  CHECK(b32.p_glz == doctest::Approx(0.21875));
  CHECK(b32.p_bms == doctest::Approx(0.033).epsilon(0.01));
  auto b64 = reference_bounds(64, 16, 4, 3, 5, 2);
  CHECK(b64.p_glz == doctest::Approx(0.109375));
  CHECK(b64.p_bms == doctest::Approx(0.016).epsilon(0.02));
  CHECK(b16.e_max_collab == 9);
  CHECK(reference_bounds(16, 16, 4, 3, 5, 0).p_spr == doctest::Approx(5.0 / 16.0));
}

TEST_CASE("collaborative radius dominates the unique bound") {
  for (size_t r = 1; r <= 6; ++r)
    for (size_t n_c = 2; n_c <= 24; ++n_c)
      for (size_t k = 1; k < n_c; ++k)
        CHECK(r * (n_c - k) / (r + 1) >= (n_c - k) / 2);
}

TEST_CASE("beyond the unique bound: mostly successful decoding") {
  Field f = Field::gf2ext(4);
  IRSParams p = IRSParams::make(f, 16, 4, 3);
  // e = 9 = floor(r(n-k)/(r+1)) > unique bound 6
  const size_t e = 9;
  Rng rng(4);
  size_t failures = 0;
  const int trials = 300;
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<Poly> msgs;
    for (size_t i = 0; i < 3; ++i) msgs.push_back(Poly::random(f, 3, rng));
    SPRInstance inst = make_spr_instance(p, std::move(msgs), e, rng);
    auto out = spr_decode(inst.received, p, e);
    if (!out.ok() || out.solution.f != inst.messages) ++failures;
  }
  // Theorem bound e/q = 9/16 plus 3 sigma sampling slack
  const double bound = 9.0 / 16.0;
  CHECK(static_cast<double>(failures) / trials <=
        bound + 3.0 * std::sqrt(bound * (1 - bound) / trials));
}
