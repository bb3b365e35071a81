// Kac-Moody root data: generalized Cartan matrices, realizations on a lattice
// pair (Y, X = Y^*), pairings and heights.
//
// Conventions. A root datum packages a GCM A together with free Z-modules
// Y (coweights) and X = Hom(Y, Z) (weights), simple coroots alpha_i^vee in Y,
// simple roots alpha_j in X, subject to <alpha_i^vee, alpha_j> = a_ij, both
// families linearly independent over Q. X is represented in the coordinates
// dual to Y's basis, so the pairing <y, x> is the standard dot product.

#pragma once

#include <string>
#include <vector>

#include "wplus/errors.hpp"
#include "wplus/numeric.hpp"

namespace wplus {

// Generalized Cartan matrix: a_ii = 2, a_ij <= 0 for i != j,
// a_ij = 0 iff a_ji = 0.
struct Gcm {
  int size = 0;
  std::vector<Int> entries;  // row-major

  const Int& at(int i, int j) const { return entries[static_cast<std::size_t>(i) * size + j]; }
};

// Validates the GCM axioms; throws Error(DiagonalNotTwo | PositiveOffDiagonal |
// AsymmetricZero) naming the offending entry.
Gcm validate_gcm(const std::vector<IntVec>& rows);

struct RootDatum {
  Gcm gcm;
  int rank = 0;  // rank of Y (and X), denoted d
  std::vector<IntVec> simple_coroots;       // in Y
  std::vector<IntVec> simple_roots;         // in X (dual coordinates)
  std::vector<IntVec> fundamental_weights;  // Lambda_j in X, <alpha_i^vee, Lambda_j> = delta_ij
  IntVec rho;                               // sum of the fundamental weights

  ColumnSolver root_expander;    // expands X-vectors in the simple roots
  ColumnSolver coroot_expander;  // expands Y-vectors in the simple coroots

  int size() const { return gcm.size; }  // number of simple reflections, |I|
};

// The minimal realization: d = |I| + corank(A), alpha_i^vee = e_i, the first
// |I| coordinates of alpha_j are column j of A, and the remaining coordinates
// complete the simple roots to an independent family with unit entries (one
// fresh coordinate per row of A^T outside a lexicographically-first row
// basis). Fundamental weights are the first |I| dual basis vectors.
RootDatum build_minimal_realization(const Gcm& gcm);

// A user-supplied realization; validates pairings, independence and weight
// duality, throws Error(DimensionMismatch) on any violation.
RootDatum make_root_datum(const Gcm& gcm, int rank, std::vector<IntVec> coroots,
                          std::vector<IntVec> roots, std::vector<IntVec> weights);

// <y, x> for y in Y, x in X. Throws Error(DimensionMismatch) on length clash.
Int pairing(const IntVec& y, const IntVec& x);

// Height of a coweight: <lam, rho>. May be negative outside finite type.
Int height(const RootDatum& datum, const IntVec& lam);

// Text input. The datum file is line oriented ('#' starts a comment):
//
//   cartan 2 -3 ; -2 2
//   rank 2            # optional, required with an explicit realization
//   coroot 1 0        # |I| lines; requires matching root/weight blocks
//   root 2 -2
//   weight 1 0
//
// With only the cartan line, the minimal realization is built.
RootDatum parse_datum_file(const std::string& text);

// "2,-3;-2,2" -> rows of the Cartan matrix (spaces allowed).
std::vector<IntVec> parse_cartan_rows(const std::string& text);

}  // namespace wplus
