#include "doctest.h"

#include <random>

#include "helpers.hpp"
#include "wplus/numeric.hpp"

using namespace wplus;
using wtest::iv;

TEST_CASE("matrix algebra basics") {
  IntMat id = IntMat::identity(3);
  CHECK(id.at(0, 0) == 1);
  CHECK(id.at(0, 1) == 0);

  IntMat m(2);
  m.at(0, 0) = 1; m.at(0, 1) = 2;
  m.at(1, 0) = 3; m.at(1, 1) = 4;

  IntMat m2 = mat_mul(m, m);
  CHECK(m2.at(0, 0) == 7);
  CHECK(m2.at(0, 1) == 10);
  CHECK(m2.at(1, 0) == 15);
  CHECK(m2.at(1, 1) == 22);

  IntMat mt = mat_transpose(m);
  CHECK(mt.at(0, 1) == 3);

  IntVec v = iv({5, -1});
  CHECK(mat_vec(m, v) == iv({3, 11}));
  CHECK(mat_transpose_vec(m, v) == mat_vec(mt, v));
}

TEST_CASE("transpose-apply agrees with materialized transpose on random matrices") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coef(-9, 9);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 1 + static_cast<int>(rng() % 4);
    IntMat m(n);
    IntVec v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      v[static_cast<std::size_t>(i)] = coef(rng);
      for (int j = 0; j < n; ++j) m.at(i, j) = coef(rng);
    }
    CHECK(mat_transpose_vec(m, v) == mat_vec(mat_transpose(m), v));
  }
}

TEST_CASE("vector helpers") {
  IntVec a = iv({1, 2, 3});
  IntVec b = iv({4, 0, -3});
  CHECK(vec_add(a, b) == iv({5, 2, 0}));
  CHECK(vec_sub(a, b) == iv({-3, 2, 6}));
  CHECK(vec_neg(b) == iv({-4, 0, 3}));
  CHECK(vec_add_mul(a, Int(2), b) == iv({9, 2, -3}));
  CHECK(vec_is_zero(iv({0, 0})));
  CHECK_FALSE(vec_is_zero(a));
  CHECK(dot(a, b) == -5);
}

TEST_CASE("rational rank") {
  CHECK(rational_rank({iv({2, -1}), iv({-1, 2})}) == 2);
  CHECK(rational_rank({iv({2, -2}), iv({-2, 2})}) == 1);  // singular
  CHECK(rational_rank({iv({0, 0})}) == 0);
  CHECK(rational_rank({iv({1, 0, 0}), iv({0, 1, 0}), iv({1, 1, 0})}) == 2);
}

TEST_CASE("column solver finds integral expansions and rejects the rest") {
  // Columns are the simple roots of the hyperbolic datum.
  ColumnSolver solver({iv({2, -2}), iv({-3, 2})});
  REQUIRE(solver.valid());

  auto e1 = solver.solve(iv({2, -2}));
  REQUIRE(e1.has_value());
  CHECK(*e1 == iv({1, 0}));

  // (1,0) = -(2,-2) - (-3,2), integral even though it looks unlikely.
  auto mix = solver.solve(iv({1, 0}));
  REQUIRE(mix.has_value());
  CHECK(*mix == iv({-1, -1}));

  // (1,1) needs a half-integer coefficient.
  CHECK_FALSE(solver.solve(iv({1, 1})).has_value());
}

TEST_CASE("column solver verifies rows outside the pivot block") {
  // Two columns in a 3-dimensional space: the third coordinate can certify
  // or refute a candidate solution found from the pivot rows alone.
  ColumnSolver solver({iv({2, -2, 0}), iv({-2, 2, 1})});
  auto ok = solver.solve(iv({0, 0, 1}));
  REQUIRE(ok.has_value());
  CHECK(*ok == iv({1, 1}));

  // No rational solution at all: rows 1 and 2 force a = b, row 1 then reads 0 = 1.
  CHECK_FALSE(solver.solve(iv({1, 0, 0})).has_value());
}

TEST_CASE("hashes are value-determined") {
  CHECK(hash_vec(iv({1, 2, 3})) == hash_vec(iv({1, 2, 3})));
  CHECK(hash_vec(iv({1, 2, 3})) != hash_vec(iv({1, 2, 4})));
  CHECK(hash_int(Int(-7)) != hash_int(Int(7)));

  IntMat m(2);
  m.at(0, 0) = 1;
  IntMat same = m;
  CHECK(hash_mat(m) == hash_mat(same));
}

namespace {
Rat rat(long n, long d) {
  Rat q(n, d);
  q.canonicalize();
  return q;
}
}  // namespace

TEST_CASE("fixed-point decimal rendering") {
  CHECK(fixed_decimal(rat(355, 113), 3) == "3.142");
  CHECK(fixed_decimal(rat(-1, 2), 1) == "-0.5");
  CHECK(fixed_decimal(rat(1, 3), 0) == "0");
  CHECK(fixed_decimal(rat(1, 2), 0) == "1");      // half away from zero
  CHECK(fixed_decimal(rat(-1, 200), 2) == "-0.01");
  CHECK(fixed_decimal(rat(-1, 1000), 2) == "0.00");  // rounds to zero, no sign
  CHECK(fixed_decimal(rat(0, 1), 2) == "0.00");
  CHECK(fixed_decimal(rat(7, 1), 0) == "7");
  CHECK(fixed_decimal(rat(7, 1), 2) == "7.00");
  CHECK(fixed_decimal(rat(123456, 1000), 2) == "123.46");
  CHECK(fixed_decimal(rat(-123456, 1000), 2) == "-123.46");
}
