#include "wplus/roots.hpp"

#include <algorithm>
#include <map>

namespace wplus {

namespace {

// -1, 0, +1 by expansion signs; throws on mixed signs.
int expansion_sign(const IntVec& expansion) {
  int seen = 0;
  for (const Int& c : expansion) {
    int s = sgn(c);
    if (s == 0) continue;
    if (seen == 0) seen = s;
    else if (seen != s)
      throw Error(Errc::NotARealRoot, "mixed-sign simple-root expansion");
  }
  return seen;
}

}  // namespace

bool Root::positive() const {
  int s = expansion_sign(expansion);
  if (s == 0) throw Error(Errc::NotARealRoot, "zero vector is not a root");
  return s > 0;
}

Int Root::root_height() const {
  Int h = 0;
  for (const Int& c : expansion) h += c;
  return h;
}

Root Root::negated() const {
  return Root{vec_neg(vec), vec_neg(covec), vec_neg(expansion)};
}

bool root_less(const Root& a, const Root& b) {
  Int ha = a.root_height(), hb = b.root_height();
  if (ha != hb) return ha < hb;
  if (a.expansion != b.expansion) return a.expansion < b.expansion;
  return a.vec < b.vec;
}

Root simple_root(const RootDatum& datum, int i) {
  Root r;
  r.vec = datum.simple_roots[i];
  r.covec = datum.simple_coroots[i];
  r.expansion.assign(static_cast<std::size_t>(datum.size()), 0);
  r.expansion[static_cast<std::size_t>(i)] = 1;
  return r;
}

Root apply_simple_reflection(const RootDatum& datum, int i, const Root& root) {
  // s_i(beta) = beta - <alpha_i^vee, beta> alpha_i, and the mirror action on
  // the coroot side; the expansion only changes in coordinate i.
  Int c = pairing(datum.simple_coroots[i], root.vec);
  Int ccov = pairing(root.covec, datum.simple_roots[i]);
  Root out;
  out.vec = vec_add_mul(root.vec, -c, datum.simple_roots[i]);
  out.covec = vec_add_mul(root.covec, -ccov, datum.simple_coroots[i]);
  out.expansion = root.expansion;
  out.expansion[static_cast<std::size_t>(i)] -= c;
  return out;
}

Root root_from_vector(const RootDatum& datum, const IntVec& vec, const IntVec& covec) {
  auto expansion = datum.root_expander.solve(vec);
  if (!expansion) throw Error(Errc::NotARealRoot, "not in the root lattice");
  Root r{vec, covec, *expansion};
  (void)expansion_sign(r.expansion);  // reject mixed signs
  if (pairing(covec, vec) != 2) throw Error(Errc::NotARealRoot, "coroot pairing is not 2");
  return r;
}

RootEnumeration enumerate_positive_roots(const RootDatum& datum, long height_bound) {
  RootEnumeration out;
  out.complete_system = true;
  if (height_bound < 1) return out;

  std::map<IntVec, Root> seen;  // keyed by expansion (canonical for a datum)
  std::vector<Root> frontier;
  for (int i = 0; i < datum.size(); ++i) {
    Root a = simple_root(datum, i);
    seen.emplace(a.expansion, a);
    frontier.push_back(a);
  }
  while (!frontier.empty()) {
    std::vector<Root> next;
    for (const Root& beta : frontier) {
      for (int i = 0; i < datum.size(); ++i) {
        Root g = apply_simple_reflection(datum, i, beta);
        if (!g.positive()) continue;  // only crossing alpha_i -> -alpha_i
        if (g.root_height() > height_bound) {
          out.complete_system = false;
          continue;
        }
        auto [it, inserted] = seen.emplace(g.expansion, g);
        if (inserted) next.push_back(g);
      }
    }
    frontier = std::move(next);
  }
  out.roots.reserve(seen.size());
  for (auto& [exp, r] : seen) out.roots.push_back(std::move(r));
  std::sort(out.roots.begin(), out.roots.end(), root_less);
  return out;
}

}  // namespace wplus
