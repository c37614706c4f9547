#include "polsolve/poly.hpp"

#include "doctest.h"

using namespace polsolve;

TEST_CASE("evaluation") {
  Field f(7);
  Poly p(f, {1, 1});  // x + 1
  CHECK(p.eval(0) == 1);
  CHECK(Poly::zero(f).eval(3) == 0);
  CHECK(Poly::zero(f).degree() == -1);
  Poly q(f, {1, 0, 1});  // x^2 + 1
  CHECK(q.eval(3) == 3);  // 9 + 1 = 10 = 3 mod 7
}

TEST_CASE("interpolation") {
  Field f(7);
  CHECK(Poly::interpolate(f, {{0, 1}, {1, 2}}) == Poly(f, {1, 1}));
  CHECK(Poly::interpolate(f, {{4, 6}}) == Poly(f, {6}));
  CHECK(Poly::interpolate(f, {{0, 1}, {1, 2}, {2, 5}}) == Poly(f, {1, 0, 1}));
  CHECK_THROWS_AS(Poly::interpolate(f, {{1, 2}, {1, 3}}), FieldError);
  CHECK_THROWS_AS(Poly::interpolate(f, {}), FieldError);
}

TEST_CASE("interpolation round trip on random data") {
  Field f = Field::gf2ext(5);
  Rng rng(7);
  for (int iter = 0; iter < 50; ++iter) {
    std::vector<uint64_t> xs(f.q());
    for (uint64_t v = 0; v < f.q(); ++v) xs[v] = v;
    rng.shuffle(xs);
    const size_t count = 1 + rng.below(10);
    std::vector<std::pair<uint64_t, uint64_t>> pts;
    for (size_t i = 0; i < count; ++i) pts.emplace_back(xs[i], rng.below(f.q()));
    Poly p = Poly::interpolate(f, pts);
    CHECK(p.degree() < static_cast<int>(count));
    for (auto [x, v] : pts) CHECK(p.eval(x) == v);
  }
}

TEST_CASE("gcd") {
  Field f(7);
  Poly x2m1(f, {6, 0, 1});  // x^2 - 1
  Poly xm1(f, {6, 1});      // x - 1
  CHECK(Poly::gcd(x2m1, xm1) == xm1);
  CHECK(Poly::gcd(Poly(f, {3, 5, 1}), Poly::one(f)) == Poly::one(f));
  Poly a = Poly(f, {6, 1}) * Poly(f, {5, 1});  // (x-1)(x-2)
  Poly b = Poly(f, {6, 1}) * Poly(f, {4, 1});  // (x-1)(x-3)
  CHECK(Poly::gcd(a, b) == xm1);
  CHECK_THROWS_AS(Poly::gcd(Poly::zero(f), Poly::zero(f)), FieldError);
  CHECK(Poly::gcd(a.scaled(3), Poly::zero(f)) == a);  // gcd(p, 0) = monic(p)
}

TEST_CASE("gcd properties on random pairs") {
  Field f(7);
  Rng rng(5);
  for (int iter = 0; iter < 100; ++iter) {
    Poly a = Poly::random(f, static_cast<int>(rng.below(6)), rng);
    Poly b = Poly::random(f, static_cast<int>(rng.below(6)), rng);
    Poly c = Poly::random_monic(f, static_cast<int>(rng.below(3)), rng);
    if (a.is_zero() && b.is_zero()) continue;
    Poly g = Poly::gcd(a * c, b * c);
    CHECK(g.is_monic());
    if (!a.is_zero()) CHECK(g.divides(a * c));
    if (!b.is_zero()) CHECK(g.divides(b * c));
    // any common divisor divides the gcd
    CHECK(c.divides(g));
  }
}

TEST_CASE("division with remainder") {
  Field f(7);
  auto [q1, r1] = Poly::divrem(Poly(f, {6, 0, 1}), Poly(f, {6, 1}));
  CHECK(q1 == Poly(f, {1, 1}));
  CHECK(r1.is_zero());
  Poly a(f, {2, 3, 0, 5});
  auto [q2, r2] = Poly::divrem(a, Poly::one(f));
  CHECK(q2 == a);
  CHECK(r2.is_zero());
  auto [q3, r3] = Poly::divrem(Poly(f, {0, 0, 0, 1}), Poly(f, {1, 0, 1}));
  CHECK(q3 == Poly(f, {0, 1}));
  CHECK(r3 == Poly(f, {0, 6}));
  CHECK_THROWS_AS(Poly::divrem(a, Poly::zero(f)), FieldError);
  // a = q*b + r, deg r < deg b on random draws
  Rng rng(9);
  for (int iter = 0; iter < 100; ++iter) {
    Poly x = Poly::random(f, 6, rng);
    Poly y = Poly::random(f, 3, rng);
    if (y.is_zero()) continue;
    auto [q, r] = Poly::divrem(x, y);
    CHECK(q * y + r == x);
    CHECK(r.degree() < y.degree());
  }
}

TEST_CASE("text form") {
  Field f(7);
  CHECK(Poly(f, {1, 0, 1}).to_string() == "1,0,1");
  CHECK(Poly::parse(f, "1,0,1") == Poly(f, {1, 0, 1}));
  CHECK(Poly::zero(f).to_string() == "0");
  CHECK(Poly::parse(f, "0").is_zero());
  CHECK_THROWS(Poly::parse(f, "1,x"));
}
