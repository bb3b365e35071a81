#pragma once

// Shared fixtures for the test suite: the small Cartan matrices everything is
// exercised against, plus terse constructors for GMP vectors and words.

#include <initializer_list>
#include <string>
#include <vector>

#include "wplus/root_datum.hpp"
#include "wplus/weyl.hpp"

namespace wtest {

using namespace wplus;

inline IntVec iv(std::initializer_list<long> xs) {
  IntVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline WeylElt elt(const RootDatum& d, std::vector<int> word) {
  return weyl_from_word(d, word);
}

// A1: the one-generator group.
inline const RootDatum& a1() {
  static RootDatum d = build_minimal_realization(validate_gcm({iv({2})}));
  return d;
}

// A2: finite, simply laced; Weyl group S3.
inline const RootDatum& a2() {
  static RootDatum d = build_minimal_realization(validate_gcm({iv({2, -1}), iv({-1, 2})}));
  return d;
}

// Untwisted affine A1 (singular Cartan matrix, so the lattice gains a third
// coordinate in the minimal realization).
inline const RootDatum& a1_affine() {
  static RootDatum d = build_minimal_realization(validate_gcm({iv({2, -2}), iv({-2, 2})}));
  return d;
}

// Rank-2 indefinite (hyperbolic) matrix; infinite dihedral Weyl group with
// asymmetric off-diagonal entries, which keeps root/coroot bookkeeping honest.
inline const RootDatum& hyper23() {
  static RootDatum d = build_minimal_realization(validate_gcm({iv({2, -3}), iv({-2, 2})}));
  return d;
}

inline std::string show(const IntVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

}  // namespace wtest
