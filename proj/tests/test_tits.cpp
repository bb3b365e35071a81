#include "doctest.h"

#include <random>

#include "helpers.hpp"
#include "wplus/tits.hpp"

using namespace wplus;
using wtest::elt;
using wtest::iv;

TEST_CASE("dominant inputs come straight back") {
  const RootDatum& d = wtest::a2();
  auto res = dominate(d, iv({1, 1}));
  REQUIRE(res.has_value());
  CHECK(res->dominant == iv({1, 1}));
  CHECK(res->v_min.is_identity());
  CHECK(res->stabilizer_gens.empty());

  // Dominant with one wall contact: the second pairing vanishes.
  auto wall = dominate(wtest::hyper23(), iv({-2, -3}));
  REQUIRE(wall.has_value());
  CHECK(wall->dominant == iv({-2, -3}));
  CHECK(wall->v_min.is_identity());
  CHECK(wall->stabilizer_gens == std::vector<int>{1});

  // The zero coweight is stabilized by everything.
  auto zero = dominate(d, iv({0, 0}));
  REQUIRE(zero.has_value());
  CHECK(zero->stabilizer_gens == std::vector<int>{0, 1});
}

TEST_CASE("a single reflection is undone") {
  const RootDatum& d = wtest::a2();
  IntVec rho_vee = iv({1, 1});
  IntVec lam = apply(d, simple_reflection(d, 0), rho_vee);
  CHECK(lam == iv({0, 1}));
  auto res = dominate(d, lam);
  REQUIRE(res.has_value());
  CHECK(res->dominant == rho_vee);
  CHECK(res->v_min == simple_reflection(d, 0));
  CHECK(res->stabilizer_gens.empty());
}

TEST_CASE("the step cap turns divergence into no-answer") {
  const RootDatum& d = wtest::hyper23();
  // lambda0 = (-3,-4) is dominant regular (pairings 2 and 1), so -lambda0 sits
  // outside the closed cone: the greedy walk climbs forever.
  CHECK(pairing(iv({-3, -4}), d.simple_roots[0]) == 2);
  CHECK(pairing(iv({-3, -4}), d.simple_roots[1]) == 1);
  for (int cap : {10, 100, 1000}) CHECK_FALSE(dominate(d, iv({3, 4}), cap).has_value());

  // A genuine cone point still resolves once the cap covers the walk length.
  const RootDatum& a2 = wtest::a2();
  IntVec lam = apply(a2, elt(a2, {1, 0}), iv({1, 1}));
  CHECK_FALSE(dominate(a2, lam, 1).has_value());
  auto res = dominate(a2, lam, 2);
  REQUIRE(res.has_value());
  CHECK(res->dominant == iv({1, 1}));
  CHECK(res->v_min == elt(a2, {1, 0}));
}

TEST_CASE("dominance is constant on orbits and idempotent") {
  std::mt19937_64 rng(101);
  for (const RootDatum* dp : {&wtest::a2(), &wtest::hyper23(), &wtest::a1_affine()}) {
    const RootDatum& d = *dp;
    auto ball = weyl_ball(d, 4);
    for (int t = 0; t < 25; ++t) {
      IntVec lam(static_cast<std::size_t>(d.rank));
      for (Int& c : lam) c = static_cast<long>(rng() % 13) - 6;
      auto base = dominate(d, lam, 400);
      if (!base) continue;

      auto again = dominate(d, base->dominant);
      REQUIRE(again.has_value());
      CHECK(again->dominant == base->dominant);
      CHECK(again->v_min.is_identity());
      CHECK(again->stabilizer_gens == base->stabilizer_gens);

      const WeylElt& w = ball[rng() % ball.size()];
      auto moved = dominate(d, apply(d, w, lam), 400);
      REQUIRE(moved.has_value());
      CHECK(moved->dominant == base->dominant);
    }
  }
}

namespace {

// Integer points of the dominant cone in a small coordinate box; applying
// Weyl elements to these samples the Tits cone without rejection noise.
std::vector<IntVec> dominant_box(const RootDatum& d, long radius) {
  std::vector<IntVec> out;
  IntVec point(static_cast<std::size_t>(d.rank));
  const long side = 2 * radius + 1;
  long total = 1;
  for (int k = 0; k < d.rank; ++k) total *= side;
  for (long code = 0; code < total; ++code) {
    long rest = code;
    for (int k = 0; k < d.rank; ++k) {
      point[static_cast<std::size_t>(k)] = rest % side - radius;
      rest /= side;
    }
    bool dominant = true;
    for (int j = 0; j < d.size() && dominant; ++j)
      dominant = pairing(point, d.simple_roots[j]) >= 0;
    if (dominant) out.push_back(point);
  }
  return out;
}

}  // namespace

TEST_CASE("dominance results satisfy their certificates") {
  std::mt19937_64 rng(202);
  const RootDatum& d = wtest::hyper23();
  auto ball = weyl_ball(d, 5);
  auto dominants = dominant_box(d, 6);
  REQUIRE(dominants.size() >= 10);
  int verified = 0;
  for (int t = 0; t < 80; ++t) {
    const IntVec& lam = dominants[rng() % dominants.size()];
    const WeylElt& w = ball[rng() % ball.size()];
    IntVec moved = apply(d, w, lam);
    auto res = dominate(d, moved, 400);
    REQUIRE(res.has_value());
    ++verified;

    CHECK(apply(d, res->v_min, res->dominant) == moved);
    for (int j = 0; j < d.size(); ++j) {
      Int p = pairing(res->dominant, d.simple_roots[j]);
      bool in_j = std::find(res->stabilizer_gens.begin(), res->stabilizer_gens.end(), j) !=
                  res->stabilizer_gens.end();
      CHECK(p >= 0);
      CHECK(in_j == (p == 0));
      if (in_j)
        CHECK(multiply(d, res->v_min, simple_reflection(d, j)).length() > res->v_min.length());
    }
    // No inversion of (v_min)^{-1} touches the stabilizer of the dominant
    // representative: those pairings are strictly negative.
    for (const Root& tau : inversion_set(d, inverse(d, res->v_min)))
      CHECK(pairing(moved, tau.vec) < 0);
  }
  CHECK(verified == 80);
}

TEST_CASE("dominant height, two ways") {
  const RootDatum& a2 = wtest::a2();
  IntVec lam = apply(a2, simple_reflection(a2, 0), iv({1, 1}));
  CHECK(dominant_height(a2, lam) == 2);
  CHECK(dominant_height_by_inversions(a2, lam) == 2);
  // (3,1) pairs to -1 against alpha2; one reflection lands at (3,2), height 5.
  CHECK(dominant_height(a2, iv({3, 1})) == 5);
  CHECK(dominant_height(a2, iv({3, 2})) == 5);

  CHECK_THROWS_AS(dominant_height(wtest::hyper23(), iv({3, 4}), 100), Error);
  CHECK_THROWS_AS(dominant_height_by_inversions(wtest::hyper23(), iv({3, 4}), 100), Error);

  // Heights can be negative away from finite type.
  CHECK(dominant_height(wtest::hyper23(), iv({-2, -3})) == -5);

  std::mt19937_64 rng(303);
  for (const RootDatum* dp : {&wtest::a2(), &wtest::hyper23(), &wtest::a1_affine()}) {
    const RootDatum& d = *dp;
    auto ball = weyl_ball(d, 5);
    auto dominants = dominant_box(d, 4);
    REQUIRE(!dominants.empty());
    for (int t = 0; t < 100; ++t) {
      IntVec point = apply(d, ball[rng() % ball.size()], dominants[rng() % dominants.size()]);
      auto res = dominate(d, point, 400);
      REQUIRE(res.has_value());
      CHECK(dominant_height(d, point, 400) == dominant_height_by_inversions(d, point, 400));
      CHECK(dominant_height(d, point, 400) == height(d, res->dominant));
    }
  }
}

TEST_CASE("dominance cache replays results") {
  DominanceCache cache(wtest::hyper23(), 50);
  const auto& first = cache.get(iv({3, 4}));
  CHECK_FALSE(first.has_value());
  const auto& hit = cache.get(iv({3, 4}));
  CHECK(&first == &hit);  // same stored entry

  const auto& good = cache.get(iv({-2, -3}));
  REQUIRE(good.has_value());
  CHECK(good->dominant == iv({-2, -3}));
}
