#include "wplus/weyl.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace wplus {

std::size_t hash_weyl(const WeylElt& w) { return hash_mat(w.ymat); }

namespace {

// ymat/xmat of s_i without going through WeylElt.
IntMat simple_ymat(const RootDatum& d, int i) {
  IntMat m = IntMat::identity(d.rank);
  const IntVec& covec = d.simple_coroots[i];
  const IntVec& vec = d.simple_roots[i];
  for (int r = 0; r < d.rank; ++r)
    for (int c = 0; c < d.rank; ++c) m.at(r, c) -= covec[r] * vec[c];
  return m;
}

IntMat simple_xmat(const RootDatum& d, int i) {
  IntMat m = IntMat::identity(d.rank);
  const IntVec& covec = d.simple_coroots[i];
  const IntVec& vec = d.simple_roots[i];
  for (int r = 0; r < d.rank; ++r)
    for (int c = 0; c < d.rank; ++c) m.at(r, c) -= vec[r] * covec[c];
  return m;
}

// Smallest i with (w^{-1})(alpha_i) < 0, reading the inverse's X-action off
// ymat^T. Returns -1 when there is none (i.e. w = e, for genuine elements).
int smallest_left_descent_of_ymat(const RootDatum& d, const IntMat& ymat) {
  for (int i = 0; i < d.size(); ++i) {
    IntVec v = mat_transpose_vec(ymat, d.simple_roots[i]);
    if (root_vector_sign(d, v) < 0) return i;
  }
  return -1;
}

std::vector<int> strip_word_from_ymat(const RootDatum& d, IntMat ymat, unsigned long step_cap) {
  std::vector<int> word;
  const IntMat id = IntMat::identity(d.rank);
  unsigned long steps = 0;
  while (!(ymat == id)) {
    if (steps++ >= step_cap)
      throw Error(Errc::NotAWeylMatrix, "descent stripping exceeded " + std::to_string(step_cap) + " steps");
    int i;
    try {
      i = smallest_left_descent_of_ymat(d, ymat);
    } catch (const Error&) {
      throw Error(Errc::NotAWeylMatrix, "image of a simple root is not a root vector");
    }
    if (i < 0) throw Error(Errc::NotAWeylMatrix, "no descent but not the identity");
    word.push_back(i);
    ymat = mat_mul(simple_ymat(d, i), ymat);
  }
  return word;
}

WeylElt build_from_canonical_word(const RootDatum& d, std::vector<int> word) {
  WeylElt w;
  w.ymat = IntMat::identity(d.rank);
  w.xmat = IntMat::identity(d.rank);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    w.ymat = mat_mul(simple_ymat(d, *it), w.ymat);
    w.xmat = mat_mul(simple_xmat(d, *it), w.xmat);
  }
  w.word = std::move(word);
  return w;
}

}  // namespace

int root_vector_sign(const RootDatum& datum, const IntVec& vec) {
  auto expansion = datum.root_expander.solve(vec);
  if (!expansion) throw Error(Errc::NotARealRoot, "vector outside the root lattice");
  int seen = 0;
  for (const Int& c : *expansion) {
    int s = sgn(c);
    if (s == 0) continue;
    if (seen == 0) seen = s;
    else if (seen != s)
      throw Error(Errc::NotARealRoot, "mixed-sign simple-root expansion");
  }
  if (seen == 0) throw Error(Errc::NotARealRoot, "zero vector");
  return seen;
}

WeylElt weyl_identity(const RootDatum& datum) {
  WeylElt w;
  w.ymat = IntMat::identity(datum.rank);
  w.xmat = IntMat::identity(datum.rank);
  return w;
}

WeylElt simple_reflection(const RootDatum& datum, int i) {
  WeylElt w;
  w.word = {i};
  w.ymat = simple_ymat(datum, i);
  w.xmat = simple_xmat(datum, i);
  return w;
}

WeylElt weyl_from_word(const RootDatum& datum, std::span<const int> word) {
  IntMat ymat = IntMat::identity(datum.rank);
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    ymat = mat_mul(simple_ymat(datum, *it), ymat);
  return build_from_canonical_word(datum,
                                   strip_word_from_ymat(datum, ymat, 4 * word.size() + 16));
}

WeylElt weyl_from_ymat(const RootDatum& datum, const IntMat& ymat, unsigned long step_cap) {
  if (ymat.n != datum.rank) throw Error(Errc::DimensionMismatch, "matrix size differs from rank");
  return build_from_canonical_word(datum, strip_word_from_ymat(datum, ymat, step_cap));
}

WeylElt multiply(const RootDatum& datum, const WeylElt& a, const WeylElt& b) {
  IntMat ymat = mat_mul(a.ymat, b.ymat);
  WeylElt w;
  w.word = strip_word_from_ymat(datum, ymat, 4 * (a.word.size() + b.word.size()) + 16);
  w.ymat = std::move(ymat);
  w.xmat = mat_mul(a.xmat, b.xmat);
  return w;
}

WeylElt inverse(const RootDatum& datum, const WeylElt& a) {
  WeylElt w;
  w.ymat = mat_transpose(a.xmat);
  w.xmat = mat_transpose(a.ymat);
  std::vector<int> word(a.word.rbegin(), a.word.rend());
  // A reversed reduced word is reduced but not necessarily canonical.
  w.word = strip_word_from_ymat(datum, w.ymat, 4 * word.size() + 16);
  return w;
}

IntVec apply(const RootDatum& datum, const WeylElt& w, const IntVec& coweight) {
  if (static_cast<int>(coweight.size()) != datum.rank)
    throw Error(Errc::DimensionMismatch, "coweight length differs from rank");
  return mat_vec(w.ymat, coweight);
}

IntVec coapply(const RootDatum& datum, const WeylElt& w, const IntVec& weight) {
  if (static_cast<int>(weight.size()) != datum.rank)
    throw Error(Errc::DimensionMismatch, "weight length differs from rank");
  return mat_vec(w.xmat, weight);
}

Root apply(const RootDatum& datum, const WeylElt& w, const Root& root) {
  return root_from_vector(datum, mat_vec(w.xmat, root.vec), mat_vec(w.ymat, root.covec));
}

Root apply_inverse(const RootDatum& datum, const WeylElt& w, const Root& root) {
  return root_from_vector(datum, mat_transpose_vec(w.ymat, root.vec),
                          mat_transpose_vec(w.xmat, root.covec));
}

bool is_left_descent(const RootDatum& datum, const WeylElt& w, int i) {
  return root_vector_sign(datum, mat_transpose_vec(w.ymat, datum.simple_roots[i])) < 0;
}

bool is_right_descent(const RootDatum& datum, const WeylElt& w, int i) {
  return root_vector_sign(datum, mat_vec(w.xmat, datum.simple_roots[i])) < 0;
}

std::vector<Root> inversion_set(const RootDatum& datum, const WeylElt& w) {
  // With w^{-1} = s_{i_1} ... s_{i_n} reduced (the reversed canonical word of
  // w), Inv(w) = { s_{i_1} ... s_{i_{k-1}}(alpha_{i_k}) }.
  std::vector<int> rev(w.word.rbegin(), w.word.rend());
  std::vector<Root> out;
  out.reserve(rev.size());
  for (std::size_t k = 0; k < rev.size(); ++k) {
    Root r = simple_root(datum, rev[k]);
    for (std::size_t t = k; t-- > 0;) r = apply_simple_reflection(datum, rev[t], r);
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), root_less);
  return out;
}

WeylElt reflection_of_root(const RootDatum& datum, const Root& beta) {
  IntMat ymat = IntMat::identity(datum.rank);
  IntMat xmat = IntMat::identity(datum.rank);
  for (int r = 0; r < datum.rank; ++r)
    for (int c = 0; c < datum.rank; ++c) {
      ymat.at(r, c) -= beta.covec[r] * beta.vec[c];
      xmat.at(r, c) -= beta.vec[r] * beta.covec[c];
    }
  WeylElt w;
  std::vector<int> word;
  try {
    word = strip_word_from_ymat(datum, ymat, 1u << 20);
  } catch (const Error&) {
    throw Error(Errc::NotARealRoot, "reflection matrix does not strip to the identity");
  }
  w.word = std::move(word);
  w.ymat = std::move(ymat);
  w.xmat = std::move(xmat);
  return w;
}

std::optional<Root> root_of_reflection(const RootDatum& datum, const WeylElt& w) {
  if (w.length() % 2 == 0) return std::nullopt;
  // s_gamma inverts exactly +-gamma among the roots; gamma lies in Inv(s_gamma).
  for (const Root& delta : inversion_set(datum, w)) {
    if (mat_vec(w.xmat, delta.vec) == vec_neg(delta.vec)) {
      if (reflection_of_root(datum, delta) == w) return delta;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

bool bruhat_le(const RootDatum& datum, const WeylElt& v, const WeylElt& w) {
  if (v.length() > w.length()) return false;
  // Scan form of the descent-lifting recursion: walk the canonical word of w;
  // each letter is the smallest left descent of the remaining suffix product.
  IntMat u = v.ymat;
  int ulen = v.length();
  for (int s : w.word) {
    if (ulen == 0) return true;
    if (root_vector_sign(datum, mat_transpose_vec(u, datum.simple_roots[s])) < 0) {
      u = mat_mul(simple_ymat(datum, s), u);
      --ulen;
    }
  }
  return ulen == 0;
}

Int relative_length(const RootDatum& datum, const WeylElt& v, const WeylElt& w) {
  return Int(multiply(datum, inverse(datum, v), w).length() - v.length());
}

Int relative_length_by_sets(const RootDatum& datum, const WeylElt& v, const WeylElt& w) {
  std::vector<Root> invw = inversion_set(datum, inverse(datum, w));
  std::vector<Root> invv = inversion_set(datum, inverse(datum, v));
  std::map<IntVec, bool> in_v;  // keyed by expansion
  for (const Root& r : invv) in_v.emplace(r.expansion, true);
  Int val = 0;
  for (const Root& r : invw) val += in_v.count(r.expansion) ? -1 : 1;
  return val;
}

WeylElt min_coset_rep(const RootDatum& datum, const WeylElt& w, const std::vector<int>& J) {
  WeylElt u = w;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int j : J) {
      if (is_right_descent(datum, u, j)) {
        u = multiply(datum, u, simple_reflection(datum, j));
        moved = true;
        break;
      }
    }
  }
  return u;
}

WeylElt coset_projection(const RootDatum& datum, const WeylElt& v, const std::vector<int>& J,
                         const WeylElt& w) {
  // Minimize l(w^{-1} v u) over u in W_J: strip right J-descents from
  // g = w^{-1} v, collecting the letters into u0; the gate is v u0.
  WeylElt g = multiply(datum, inverse(datum, w), v);
  WeylElt u0 = weyl_identity(datum);
  bool moved = true;
  while (moved) {
    moved = false;
    for (int j : J) {
      if (is_right_descent(datum, g, j)) {
        WeylElt sj = simple_reflection(datum, j);
        g = multiply(datum, g, sj);
        u0 = multiply(datum, u0, sj);
        moved = true;
        break;
      }
    }
  }
  return multiply(datum, v, u0);
}

WeylElt vectorial_distance(const RootDatum& datum, const WeylElt& v, const WeylElt& w) {
  return multiply(datum, inverse(datum, v), w);
}

Int numeric_distance(const RootDatum& datum, const WeylElt& v, const WeylElt& w) {
  return Int(vectorial_distance(datum, v, w).length());
}

bool on_minimal_gallery(const RootDatum& datum, const WeylElt& a, const WeylElt& z,
                        const WeylElt& b) {
  return numeric_distance(datum, a, z) + numeric_distance(datum, z, b) ==
         numeric_distance(datum, a, b);
}

std::vector<Root> separating_walls(const RootDatum& datum, const WeylElt& x, const WeylElt& y) {
  // alpha separates C_x from C_y iff x^{-1}(alpha) and y^{-1}(alpha) have
  // opposite signs; those alpha are |x(gamma)| for gamma in Inv(y^{-1} x).
  WeylElt g = multiply(datum, inverse(datum, y), x);
  std::vector<Root> out;
  for (const Root& gamma : inversion_set(datum, g)) {
    Root a = apply(datum, x, gamma);
    if (!a.positive()) a = a.negated();
    out.push_back(std::move(a));
  }
  std::sort(out.begin(), out.end(), root_less);
  return out;
}

namespace {

int chamber_side(const RootDatum& datum, const WeylElt& u, const Root& alpha) {
  return root_vector_sign(datum, mat_transpose_vec(u.ymat, alpha.vec));
}

}  // namespace

Root separating_reflection(const RootDatum& datum, const WeylElt& v1, const WeylElt& v2,
                           const WeylElt& w) {
  if (on_minimal_gallery(datum, v1, v2, w))
    throw Error(Errc::PreconditionViolated, "v2 lies on a minimal gallery from v1 to w");
  std::vector<Root> candidates = separating_walls(datum, v2, v1);
  {
    std::vector<Root> more = separating_walls(datum, v2, w);
    candidates.insert(candidates.end(), more.begin(), more.end());
    std::sort(candidates.begin(), candidates.end(), root_less);
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  }
  for (const Root& alpha : candidates) {
    // The wall is unsigned: all that matters is that v1 and w share a side
    // and v2 sits on the other one.
    int side1 = chamber_side(datum, v1, alpha);
    if (side1 == chamber_side(datum, w, alpha) && side1 != chamber_side(datum, v2, alpha))
      return alpha;
  }
  throw Error(Errc::PreconditionViolated, "no separating wall found");
}

std::vector<WeylElt> weyl_ball(const RootDatum& datum, int length_cap) {
  // Layered closure; elements of equal length are deduplicated within their
  // layer (lengths already separate the layers).
  std::vector<WeylElt> all{weyl_identity(datum)};
  std::size_t layer_begin = 0;
  for (int len = 1; len <= length_cap; ++len) {
    std::size_t layer_end = all.size();
    for (std::size_t k = layer_begin; k < layer_end; ++k) {
      for (int i = 0; i < datum.size(); ++i) {
        WeylElt next = multiply(datum, all[k], simple_reflection(datum, i));
        if (next.length() != len) continue;
        bool dup = false;
        for (std::size_t t = layer_end; t < all.size() && !dup; ++t) dup = all[t] == next;
        if (!dup) all.push_back(std::move(next));
      }
    }
    if (all.size() == layer_end) break;  // group exhausted
    layer_begin = layer_end;
  }
  std::sort(all.begin(), all.end(), [](const WeylElt& a, const WeylElt& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.word < b.word;
  });
  return all;
}

}  // namespace wplus
