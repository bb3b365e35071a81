// Real roots of a Kac-Moody root datum, carried as triples
// (vector in X, coroot in Y, expansion over the simple roots).
//
// A real root beta = w(alpha_i) determines its coroot functorially:
// beta^vee = w(alpha_i^vee); reflections act on both sides at once, which is
// what keeps <beta^vee, beta> = 2 and makes sign tests exact (a root is
// positive iff its simple-root expansion is componentwise >= 0).

#pragma once

#include <vector>

#include "wplus/root_datum.hpp"

namespace wplus {

struct Root {
  IntVec vec;        // in X
  IntVec covec;      // coroot, in Y
  IntVec expansion;  // over the simple roots; uniform sign for real roots

  bool positive() const;
  Int root_height() const;  // sum of the expansion (signed)
  Root negated() const;

  friend bool operator==(const Root& a, const Root& b) { return a.vec == b.vec; }
};

// Deterministic order: by (root height, expansion lex). Total on real roots
// of a fixed datum.
bool root_less(const Root& a, const Root& b);

Root simple_root(const RootDatum& datum, int i);

// s_i applied to an arbitrary root (both signs allowed).
Root apply_simple_reflection(const RootDatum& datum, int i, const Root& root);

// Rebuilds the Root triple for an X-vector already known to be a real root;
// throws Error(NotARealRoot) when the expansion does not exist or has mixed
// signs. (Mixed-sign rejection filters non-roots cheaply; root candidates
// produced by reflecting existing roots are always genuine.)
Root root_from_vector(const RootDatum& datum, const IntVec& vec, const IntVec& covec);

struct RootEnumeration {
  std::vector<Root> roots;     // positive real roots, sorted by root_less
  bool complete_system;        // closed under all simple reflections => finite type
};

// All positive real roots of root height <= height_bound, by upward closure
// from the simple roots: every positive real root of height <= H is reachable
// from a simple root through positive roots of non-decreasing height, so the
// sweep is complete within the bound. complete_system is set when no
// reflection leaves the collected set, i.e. the whole (finite) system was
// found.
RootEnumeration enumerate_positive_roots(const RootDatum& datum, long height_bound);

}  // namespace wplus
