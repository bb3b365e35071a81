#include "wplus/tits.hpp"

#include "wplus/errors.hpp"
#include "wplus/roots.hpp"

namespace wplus {

std::optional<DominanceResult> dominate(const RootDatum& datum, const IntVec& lambda,
                                        int step_cap) {
  if (step_cap < 1) throw Error(Errc::PreconditionViolated, "dominate: step_cap must be >= 1");
  const int n = datum.size();
  IntVec cur = lambda;
  std::vector<int> word;  // v = s_{word[0]} s_{word[1]} ... , so lambda = v(cur)
  for (int steps = 0;; ++steps) {
    int j = -1;
    for (int i = 0; i < n; ++i) {
      if (pairing(cur, datum.simple_roots[i]) < 0) {
        j = i;
        break;
      }
    }
    if (j < 0) break;
    if (steps >= step_cap) return std::nullopt;
    // cur <- s_j(cur); undoing the walk reads the word left to right.
    Int c = pairing(cur, datum.simple_roots[j]);
    cur = vec_add_mul(cur, -c, datum.simple_coroots[j]);
    word.push_back(j);
  }

  DominanceResult res;
  res.dominant = std::move(cur);
  for (int i = 0; i < n; ++i) {
    if (pairing(res.dominant, datum.simple_roots[i]) == 0) res.stabilizer_gens.push_back(i);
  }
  WeylElt v = weyl_from_word(datum, word);
  res.v_min = min_coset_rep(datum, v, res.stabilizer_gens);
  return res;
}

Int dominant_height(const RootDatum& datum, const IntVec& lambda, int step_cap) {
  auto res = dominate(datum, lambda, step_cap);
  if (!res) throw Error(Errc::NotInTitsCone, "dominant_height: dominance walk undetermined");
  return height(datum, res->dominant);
}

Int dominant_height_by_inversions(const RootDatum& datum, const IntVec& lambda, int step_cap) {
  auto res = dominate(datum, lambda, step_cap);
  if (!res) throw Error(Errc::NotInTitsCone, "dominant_height_by_inversions: undetermined");
  Int total = height(datum, lambda);
  WeylElt u_inv = inverse(datum, res->v_min);
  for (const Root& tau : inversion_set(datum, u_inv)) {
    Int c = pairing(lambda, tau.vec);
    if (c > 0) {
      throw Error(Errc::PreconditionViolated,
                  "dominant_height_by_inversions: positive summand contradicts minimality");
    }
    total -= c;
  }
  return total;
}

const std::optional<DominanceResult>& DominanceCache::get(const IntVec& lambda) {
  auto it = memo_.find(lambda);
  if (it == memo_.end()) {
    it = memo_.emplace(lambda, dominate(*datum_, lambda, step_cap_)).first;
  }
  return it->second;
}

}  // namespace wplus
