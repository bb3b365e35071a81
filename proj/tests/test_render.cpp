// SVG renderers: chamber fans, apartment walls, highlighted alcoves.
//
// Expected counts are small hand computations. Chamber counts are ball
// sizes: A2 has 1/2/2/1 elements of length 0/1/2/3; the infinite dihedral
// group has exactly two elements per positive length. Wall counts come from
// intersecting integer lines with a fixed window by hand (worked in the
// comments of the relevant cases).

#include <string>

#include "doctest.h"
#include "helpers.hpp"
#include "wplus/affine.hpp"
#include "wplus/errors.hpp"
#include "wplus/render.hpp"
#include "wplus/roots.hpp"

using namespace wplus;
using wtest::iv;

namespace {

std::size_t count_substr(const std::string& hay, const std::string& needle) {
  std::size_t count = 0;
  for (std::size_t pos = hay.find(needle); pos != std::string::npos;
       pos = hay.find(needle, pos + needle.size())) {
    ++count;
  }
  return count;
}

PlotWindow window(long lo, long hi) {
  return PlotWindow{Rat(lo), Rat(hi), Rat(lo), Rat(hi)};
}

}  // namespace

TEST_CASE("plot input validation") {
  PlotSpec spec;

  // Rank must be exactly two.
  CHECK_THROWS_AS(render_tits_cone(wtest::a1(), spec), Error);
  CHECK_THROWS_AS(render_apartment(wtest::a1(), spec), Error);
  const RootDatum a3 = build_minimal_realization(
      validate_gcm({iv({2, -1, 0}), iv({-1, 2, -1}), iv({0, -1, 2})}));
  CHECK_THROWS_AS(render_tits_cone(a3, spec), Error);
  try {
    render_tits_cone(wtest::a1(), spec);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::RankNotTwo);
  }

  // Depth and window sanity.
  PlotSpec bad_depth;
  bad_depth.depth = 0;
  CHECK_THROWS_AS(render_tits_cone(wtest::a2(), bad_depth), Error);
  PlotSpec bad_window;
  bad_window.window = PlotWindow{Rat(1), Rat(1), Rat(-1), Rat(1)};
  CHECK_THROWS_AS(render_apartment(wtest::a2(), bad_window), Error);
  try {
    render_apartment(wtest::a2(), bad_window);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::PreconditionViolated);
  }
}

TEST_CASE("vectorial picture: chamber counts and determinism") {
  const RootDatum& d = wtest::a2();

  // Depth 1: the fundamental chamber and its two neighbors, bounded by the
  // three wall lines alpha_2, alpha_1, alpha_1 + alpha_2.
  PlotSpec shallow;
  shallow.depth = 1;
  shallow.window = window(-3, 3);
  const std::string svg1 = render_tits_cone(d, shallow);
  CHECK(svg1.substr(0, 5) == "<?xml");
  CHECK(count_substr(svg1, "class=\"chamber\"") == 3);
  CHECK(count_substr(svg1, "class=\"wall\"") == 3);
  CHECK(count_substr(svg1, ">e<") == 1);
  CHECK(count_substr(svg1, ">s1<") == 1);
  CHECK(count_substr(svg1, ">s2<") == 1);

  // Depth 3 exhausts S3: the fan closes up with all six chambers.
  PlotSpec full;
  full.depth = 3;
  full.window = window(-3, 3);
  const std::string svg3 = render_tits_cone(d, full);
  CHECK(count_substr(svg3, "class=\"chamber\"") == 6);
  CHECK(count_substr(svg3, "class=\"wall\"") == 3);
  CHECK(count_substr(svg3, ">s1 s2 s1<") == 1);

  // Byte determinism.
  CHECK(render_tits_cone(d, full) == svg3);
}

TEST_CASE("vectorial picture: hyperbolic fan stays strictly inside a half-plane") {
  const RootDatum& d = wtest::hyper23();
  PlotSpec spec;
  spec.depth = 6;
  spec.window = window(-4, 4);
  const std::string svg = render_tits_cone(d, spec);
  // Infinite dihedral ball: 1 + 2 * 6 elements.
  CHECK(count_substr(svg, "class=\"chamber\"") == 13);
  CHECK(render_tits_cone(d, spec) == svg);
}

TEST_CASE("apartment: wall count in a fixed window") {
  const RootDatum& d = wtest::a2();
  PlotSpec spec;
  spec.depth = 1;
  spec.window = window(-3, 3);
  spec.root_height_bound = 8;
  spec.level_bound = 12;
  // Positive roots have plot forms x (alpha_1), y (alpha_2), x + y (theta).
  // In the window [-3,3]^2: x + n = 0 meets it for n in [-3,3] (7 walls),
  // likewise y + n = 0 (7). x + y + n = 0 needs two corners of intersection:
  // n in [-5,5] (11 walls; at n = +-6 the line only grazes a corner).
  const std::string svg = render_apartment(d, spec);
  CHECK(count_substr(svg, "class=\"wall\"") == 25);
  CHECK(count_substr(svg, "class=\"alcove\"") == 0);
  CHECK(count_substr(svg, "class=\"conewedge\"") == 0);
  CHECK(count_substr(svg, "class=\"basepoint\"") == 0);
  CHECK(render_apartment(d, spec) == svg);
}

TEST_CASE("apartment: fundamental alcove highlight is the exact unit triangle") {
  const RootDatum& d = wtest::a2();
  PlotSpec spec;
  spec.depth = 1;
  spec.window = window(-3, 3);
  spec.highlighted.push_back(AffineElt{iv({0, 0}), weyl_identity(d)});
  const std::string svg = render_apartment(d, spec);

  CHECK(count_substr(svg, "class=\"alcove\"") == 1);
  CHECK(count_substr(svg, "data-element=\"pi[0,0] * e\"") == 1);
  // First highlight is orange.
  CHECK(count_substr(svg, "fill=\"#ff9933\"") >= 1);
  // The cell of the identity alcove is the triangle with plot vertices
  // (0,0), (1,0), (0,1); the window [-3,3]^2 maps to 720x720 at scale 120,
  // so these land at (360,360), (480,360), (360,240) in screen coordinates.
  CHECK(count_substr(svg, "360.000,360.000") == 1);
  CHECK(count_substr(svg, "480.000,360.000") == 1);
  CHECK(count_substr(svg, "360.000,240.000") == 1);
  // Finite type: no local cone fan.
  CHECK(count_substr(svg, "class=\"conewedge\"") == 0);
  CHECK(count_substr(svg, "class=\"basepoint\"") == 1);
}

TEST_CASE("apartment: marked wall is drawn once, in the accent style") {
  const RootDatum& d = wtest::a2();
  PlotSpec spec;
  spec.depth = 1;
  spec.window = window(-3, 3);
  // s_1(alpha_2) = alpha_1 + alpha_2; mark its level-2 wall.
  const Root theta = apply(d, wtest::elt(d, {0}), simple_root(d, 1));
  spec.marked_walls.push_back(normalize_affine_root(theta, Int(2)));
  const std::string svg = render_apartment(d, spec);
  CHECK(count_substr(svg, "class=\"markedwall\"") == 1);
  CHECK(count_substr(svg, "stroke=\"#2e8b57\"") == 1);
  // One of the 25 walls moved to the accent layer.
  CHECK(count_substr(svg, "class=\"wall\"") == 24);
}

TEST_CASE("apartment: local cones appear outside finite type") {
  const RootDatum& d = wtest::a1_affine();
  PlotSpec spec;
  spec.depth = 2;
  spec.window = window(-3, 3);
  // pi^{delta-vee} e: central translation; its base point projects to the
  // origin of the plot plane because <delta-vee, alpha_i> = 0.
  spec.highlighted.push_back(AffineElt{iv({1, 1, 0}), weyl_identity(d)});
  const std::string svg = render_apartment(d, spec);
  // One wedge per ball element: 1 + 2 + 2.
  CHECK(count_substr(svg, "class=\"conewedge\"") == 5);
  CHECK(count_substr(svg, "class=\"alcove\"") == 1);
  CHECK(count_substr(svg, "class=\"basepoint\"") == 1);
  CHECK(render_apartment(d, spec) == svg);

  const RootDatum& h = wtest::hyper23();
  PlotSpec hs;
  hs.depth = 3;
  hs.window = window(-4, 4);
  hs.highlighted.push_back(AffineElt{iv({0, 0}), wtest::elt(h, {0})});
  const std::string hsvg = render_apartment(h, hs);
  CHECK(count_substr(hsvg, "class=\"conewedge\"") == 7);
  CHECK(count_substr(hsvg, "class=\"alcove\"") == 1);
}
