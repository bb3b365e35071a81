// SVG rendering of rank-2 pictures: the vectorial chamber fan with the Tits
// cone shading, and the affine apartment with its wall arrangement,
// highlighted alcoves and local cones.
//
// Plot coordinates: a point y of Y (x) R is drawn at (<y, alpha_1>,
// <y, alpha_2>). Every wall and chamber condition becomes an integer linear
// form in these coordinates (the form of a root is its expansion in the
// simple roots), so the whole picture is computed in exact rational
// arithmetic and serialized with fixed decimals: output is byte-identical
// for identical inputs.

#pragma once

#include <string>
#include <vector>

#include "wplus/affine.hpp"

namespace wplus {

// Rational axis-aligned window in the plotting plane; must be nonempty.
struct PlotWindow {
  Rat x_lo = -4;
  Rat x_hi = 4;
  Rat y_lo = -4;
  Rat y_hi = 4;
};

struct PlotSpec {
  int depth = 3;  // chamber word-length cap; at least 1
  PlotWindow window;
  // Elements whose alcoves (and, outside finite type, local cones with the
  // apex at the image of the origin) are highlighted, in the given order.
  std::vector<AffineElt> highlighted;
  // Walls drawn in the accent color (normalized affine roots).
  std::vector<AffineRoot> marked_walls;
  int root_height_bound = 8;  // apartment wall enumeration
  int level_bound = 12;       // apartment wall levels
};

// The vectorial picture: chambers C_w for l(w) <= depth shaded as the Tits
// cone, their wall lines, and a word label per chamber.
// Throws Error(RankNotTwo) unless |I| = 2; Error(PreconditionViolated) for
// an empty window or depth < 1.
std::string render_tits_cone(const RootDatum& datum, const PlotSpec& spec);

// The affine picture: walls M_{beta[n]} = {<x,beta> + n = 0} within the
// window, marked walls in accent color, and for each highlighted element
// x = pi^lam w the alcove cell containing x(interior base point) under the
// action x(y) = -lam + w(y), plus the local cone based at x(0) outside
// finite type. Same errors as render_tits_cone.
std::string render_apartment(const RootDatum& datum, const PlotSpec& spec);

}  // namespace wplus
