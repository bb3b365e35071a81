#pragma once

// Dominance machinery for the Tits cone Y+ (the union of Weyl translates of
// the dominant cone Y++).  Membership in Y+ is only semi-decidable here: the
// greedy dominance walk strictly increases height at every step and is
// bounded by ht(lambda++) whenever lambda lies in the cone, so a step cap
// turns divergence into an explicit "undetermined" answer.

#include <map>
#include <optional>
#include <vector>

#include "wplus/root_datum.hpp"
#include "wplus/weyl.hpp"

namespace wplus {

struct DominanceResult {
  IntVec dominant;                  // lambda++, the dominant orbit representative
  WeylElt v_min;                    // minimal v with v(lambda++) = lambda
  std::vector<int> stabilizer_gens; // J = { j : <lambda++, alpha_j> = 0 }, sorted
};

// Greedy dominance: while some <lambda, alpha_j> < 0, reflect by the smallest
// such j.  Each step raises the height by at least 1, so inside the Tits cone
// the walk terminates; past `step_cap` steps returns nullopt (undetermined).
// The returned v_min is the minimal coset representative of the accumulated
// word modulo the stabilizer parabolic W_J.
std::optional<DominanceResult> dominate(const RootDatum& datum, const IntVec& lambda,
                                        int step_cap = 10000);

// ht(lambda++).  Throws NotInTitsCone when dominate() is undetermined.
Int dominant_height(const RootDatum& datum, const IntVec& lambda, int step_cap = 10000);

// Same value along an independent route: ht(lambda) - sum over
// Inv(v_min^{-1}) of <lambda, tau>, each summand being <= 0.
// Throws NotInTitsCone when dominate() is undetermined.
Int dominant_height_by_inversions(const RootDatum& datum, const IntVec& lambda,
                                  int step_cap = 10000);

// Memo for repeated dominance queries on the same datum (the Bruhat-order
// search asks about the same coweights over and over).
class DominanceCache {
 public:
  DominanceCache(const RootDatum& datum, int step_cap = 10000)
      : datum_(&datum), step_cap_(step_cap) {}

  const std::optional<DominanceResult>& get(const IntVec& lambda);
  int step_cap() const { return step_cap_; }

 private:
  const RootDatum* datum_;
  int step_cap_;
  std::map<IntVec, std::optional<DominanceResult>> memo_;
};

}  // namespace wplus
