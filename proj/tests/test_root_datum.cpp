#include "doctest.h"

#include "helpers.hpp"
#include "wplus/root_datum.hpp"

using namespace wplus;
using wtest::iv;

namespace {

template <class F>
Errc code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error to be thrown");
  return Errc::ParseError;  // unreachable
}

}  // namespace

TEST_CASE("Cartan matrix validation") {
  CHECK_NOTHROW(validate_gcm({iv({2, -1}), iv({-1, 2})}));
  CHECK_NOTHROW(validate_gcm({iv({2, 0}), iv({0, 2})}));

  CHECK(code_of([] { validate_gcm({iv({3})}); }) == Errc::DiagonalNotTwo);
  CHECK(code_of([] { validate_gcm({iv({2, 1}), iv({-1, 2})}); }) == Errc::PositiveOffDiagonal);
  CHECK(code_of([] { validate_gcm({iv({2, 0}), iv({-1, 2})}); }) == Errc::AsymmetricZero);
  CHECK(code_of([] { validate_gcm({iv({2, -1}), iv({-1})}); }) == Errc::DimensionMismatch);
  CHECK(code_of([] { validate_gcm({}); }) == Errc::ParseError);
}

TEST_CASE("minimal realization of a nonsingular matrix keeps the lattice small") {
  const RootDatum& d = wtest::hyper23();
  CHECK(d.rank == 2);
  CHECK(d.simple_coroots[0] == iv({1, 0}));
  CHECK(d.simple_coroots[1] == iv({0, 1}));
  // Simple roots are the columns of the Cartan matrix in coroot-dual coordinates.
  CHECK(d.simple_roots[0] == iv({2, -2}));
  CHECK(d.simple_roots[1] == iv({-3, 2}));
  CHECK(d.fundamental_weights[0] == iv({1, 0}));
  CHECK(d.rho == iv({1, 1}));

  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      CHECK(pairing(d.simple_coroots[i], d.simple_roots[j]) == d.gcm.at(i, j));
}

TEST_CASE("minimal realization of a singular matrix adds a coordinate") {
  const RootDatum& d = wtest::a1_affine();
  CHECK(d.rank == 3);
  CHECK(d.simple_roots[0] == iv({2, -2, 0}));
  CHECK(d.simple_roots[1] == iv({-2, 2, 1}));
  CHECK(rational_rank(d.simple_roots) == 2);
  CHECK(pairing(d.simple_coroots[0], d.simple_roots[1]) == -2);
}

TEST_CASE("rank-one realizations") {
  const RootDatum& d = wtest::a1();
  CHECK(d.rank == 1);
  CHECK(d.simple_roots[0] == iv({2}));
  CHECK(height(d, iv({5})) == 5);
}

TEST_CASE("custom realization: the rank-2 torus datum for a single reflection") {
  // GL2-style: alpha = alpha^vee = e1 - e2 inside a two-dimensional lattice.
  Gcm g = validate_gcm({iv({2})});
  RootDatum d = make_root_datum(g, 2, {iv({1, -1})}, {iv({1, -1})}, {iv({1, 0})});
  CHECK(pairing(d.simple_coroots[0], d.simple_roots[0]) == 2);
  CHECK(d.rho == iv({1, 0}));
  CHECK(height(d, iv({3, 1})) == 3);
}

TEST_CASE("custom realizations are validated") {
  Gcm g = validate_gcm({iv({2, -1}), iv({-1, 2})});
  // Wrong pairing: <coroot 1, root 2> must equal -1.
  CHECK(code_of([&] {
          make_root_datum(g, 2, {iv({1, 0}), iv({0, 1})}, {iv({2, -1}), iv({-1, 1})},
                          {iv({1, 0}), iv({0, 1})});
        }) == Errc::DimensionMismatch);
  // Dependent simple roots.
  CHECK(code_of([&] {
          make_root_datum(validate_gcm({iv({2, -2}), iv({-2, 2})}), 2,
                          {iv({1, 0}), iv({0, 1})}, {iv({2, -2}), iv({-2, 2})},
                          {iv({1, 0}), iv({0, 1})});
        }) == Errc::DimensionMismatch);
  // Wrong weight duality.
  CHECK(code_of([&] {
          make_root_datum(g, 2, {iv({1, 0}), iv({0, 1})}, {iv({2, -1}), iv({-1, 2})},
                          {iv({1, 1}), iv({0, 1})});
        }) == Errc::DimensionMismatch);
}

TEST_CASE("pairing requires equal lengths") {
  CHECK(code_of([] { pairing(iv({1, 2}), iv({1})); }) == Errc::DimensionMismatch);
}

TEST_CASE("cartan row parsing accepts commas and spaces") {
  auto rows = parse_cartan_rows("2,-3;-2,2");
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == iv({2, -3}));
  CHECK(rows[1] == iv({-2, 2}));
  CHECK(parse_cartan_rows(" 2 -1 ; -1 2 ")[1] == iv({-1, 2}));
  CHECK(code_of([] { parse_cartan_rows("2 x; 1 2"); }) == Errc::ParseError);
  CHECK(code_of([] { parse_cartan_rows(";"); }) == Errc::ParseError);
}

TEST_CASE("datum files: minimal form") {
  RootDatum d = parse_datum_file(
      "# hyperbolic example\n"
      "cartan 2 -3 ; -2 2\n");
  CHECK(d.rank == 2);
  CHECK(d.simple_roots[1] == iv({-3, 2}));

  // A rank directive alone is a cross-check against the minimal realization.
  CHECK_NOTHROW(parse_datum_file("cartan 2 -2 ; -2 2\nrank 3\n"));
  CHECK(code_of([] { parse_datum_file("cartan 2 -2 ; -2 2\nrank 2\n"); }) ==
        Errc::DimensionMismatch);
}

TEST_CASE("datum files: explicit realization") {
  RootDatum d = parse_datum_file(
      "cartan 2 -2 ; -2 2\n"
      "rank 3\n"
      "coroot 1 0 0\n"
      "coroot 0 1 0\n"
      "root 2 -2 0\n"
      "root -2 2 1\n"
      "weight 1 0 0\n"
      "weight 0 1 0\n");
  CHECK(d.rank == 3);
  CHECK(pairing(d.simple_coroots[1], d.simple_roots[0]) == -2);
}

TEST_CASE("datum files: malformed input") {
  CHECK(code_of([] { parse_datum_file(""); }) == Errc::ParseError);
  CHECK(code_of([] { parse_datum_file("rank 2\n"); }) == Errc::ParseError);
  CHECK(code_of([] { parse_datum_file("cartan\n2 -1; -1 2\n"); }) == Errc::ParseError);
  CHECK(code_of([] { parse_datum_file("cartan 2 -1 ; -1 2\nfoo 1\n"); }) == Errc::ParseError);
  CHECK(code_of([] { parse_datum_file("cartan 2 -1 ; -1 2\ncoroot 1 0\n"); }) == Errc::ParseError);
  CHECK(code_of([] {
          parse_datum_file(
              "cartan 2 -1 ; -1 2\n"
              "coroot 1 0\ncoroot 0 1\n"
              "root 2 -1\nroot -1 2\n"
              "weight 1 0\nweight 0 1\n");  // missing rank directive
        }) == Errc::ParseError);
  CHECK(code_of([] { parse_datum_file("cartan 2 -q ; -1 2\n"); }) == Errc::ParseError);
}

TEST_CASE("error names are stable") {
  CHECK(std::string(errc_name(Errc::NotInTitsCone)) == "NotInTitsCone");
  CHECK(std::string(errc_name(Errc::ParseError)) == "ParseError");
  Error e(Errc::ParseError, "sample detail");
  CHECK(std::string(e.what()).find("sample detail") != std::string::npos);
}
