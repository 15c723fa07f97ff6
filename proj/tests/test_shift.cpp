#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kleindraw/shift.hpp"
#include "support.hpp"

using namespace kleindraw;

namespace {

KleinShift random_shift() { return {testkit::uniform(-6, 6), testkit::uniform(-6, 6)}; }

Point random_point(double lo = 0.0, double hi = 1.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  return {u(testkit::rng()), u(testkit::rng())};
}

bool near(Point p, Point q, double eps = 1e-12) { return std::abs(p.x - q.x) <= eps && std::abs(p.y - q.y) <= eps; }

}  // namespace

TEST_CASE("apply_shift") {
  CHECK(apply_shift({0, 0}, {0.3, 0.7}) == Point{0.3, 0.7});
  CHECK(apply_shift({1, 0}, {0.25, 0.25}) == Point{1.25, 0.75});
  CHECK(apply_shift({2, -1}, {0.5, 0.5}) == Point{2.5, -0.5});
  CHECK(apply_shift({-1, 2}, {0.25, 0.5}) == Point{-0.75, 2.5});
}

TEST_CASE("compose and inverse") {
  KleinShift t{3, -2};
  CHECK(compose({0, 0}, t) == t);
  CHECK(compose(t, {0, 0}) == t);
  CHECK(compose({1, 0}, compose({0, 1}, inverse({1, 0}))) == KleinShift{0, -1});
  CHECK(inverse({0, 3}) == KleinShift{0, -3});
  CHECK(inverse({1, 2}) == KleinShift{-1, 2});
  CHECK(compose({1, 2}, inverse({1, 2})) == KleinShift{0, 0});
  CHECK(KleinShift{3, 0}.reverses());
  CHECK_FALSE(KleinShift{-2, 5}.reverses());
}

TEST_CASE("group laws and pointwise consistency") {
  for (int trial = 0; trial < 10000; ++trial) {
    KleinShift s = random_shift(), t = random_shift(), u = random_shift();
    Point p = random_point(-3, 3);
    CHECK(compose(compose(s, t), u) == compose(s, compose(t, u)));
    CHECK(compose(s, inverse(s)) == KleinShift{});
    CHECK(compose(inverse(s), s) == KleinShift{});
    CHECK(inverse(inverse(s)) == s);
    CHECK(near(apply_shift(compose(s, t), p), apply_shift(s, apply_shift(t, p))));
    CHECK(near(apply_shift(inverse(s), apply_shift(s, p)), p));
  }
}

TEST_CASE("fold lands in the unit square") {
  Folded f = fold({1.1, 0.35});
  CHECK(near(f.point, {0.1, 0.65}));
  CHECK(f.shift == KleinShift{1, 0});
  CHECK(fold({0.5, 0.5}).shift == KleinShift{});
  Folded corner = fold({1.0, 0.0});
  CHECK(corner.point.x >= 0.0);
  CHECK(corner.point.x < 1.0);
  CHECK(corner.point.y >= 0.0);
  CHECK(corner.point.y < 1.0);

  for (int trial = 0; trial < 10000; ++trial) {
    Point p = random_point(-5, 5);
    if (trial % 10 == 0) p.x = std::round(p.x);
    if (trial % 7 == 0) p.y = std::round(p.y);
    Folded g = fold(p);
    CHECK(g.point.x >= 0.0);
    CHECK(g.point.x < 1.0);
    CHECK(g.point.y >= 0.0);
    CHECK(g.point.y < 1.0);
    CHECK(near(apply_shift(g.shift, g.point), p, 1e-12));
  }
}
