// The vectorial Weyl group W^v of a root datum: elements as exact integer
// matrices acting on Y, with canonical reduced words, inversion sets, Bruhat
// order, coset projections and gallery utilities.
//
// Matrix conventions. An element w stores its action on Y (ymat) and on X
// (xmat); pairing invariance forces xmat = (ymat^{-1})^T, so the inverse
// element acts on Y by xmat^T and on X by ymat^T — no matrix inversion is
// ever needed. The ymat alone identifies the element (both simple families
// are independent, so the Y-action is faithful); words are kept canonical
// (greedy smallest left descent) for deterministic output.

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "wplus/roots.hpp"

namespace wplus {

struct WeylElt {
  std::vector<int> word;  // canonical reduced word, 0-based generator indices
  IntMat ymat;
  IntMat xmat;

  int length() const { return static_cast<int>(word.size()); }
  bool is_identity() const { return word.empty(); }

  friend bool operator==(const WeylElt& a, const WeylElt& b) { return a.ymat == b.ymat; }
};

std::size_t hash_weyl(const WeylElt& w);

WeylElt weyl_identity(const RootDatum& datum);
WeylElt simple_reflection(const RootDatum& datum, int i);
// Builds the element for an arbitrary word (canonicalizes; the input need not
// be reduced).
WeylElt weyl_from_word(const RootDatum& datum, std::span<const int> word);
// Recovers the canonical reduced word from a Y-action matrix by descent
// stripping; throws Error(NotAWeylMatrix) if no descent exists before
// reaching the identity or after step_cap steps.
WeylElt weyl_from_ymat(const RootDatum& datum, const IntMat& ymat, unsigned long step_cap = 100000);

WeylElt multiply(const RootDatum& datum, const WeylElt& a, const WeylElt& b);
WeylElt inverse(const RootDatum& datum, const WeylElt& a);

IntVec apply(const RootDatum& datum, const WeylElt& w, const IntVec& coweight);
IntVec coapply(const RootDatum& datum, const WeylElt& w, const IntVec& weight);
Root apply(const RootDatum& datum, const WeylElt& w, const Root& root);
Root apply_inverse(const RootDatum& datum, const WeylElt& w, const Root& root);

// Sign of an X-vector that is +-(real root): +1 positive, -1 negative.
// Throws Error(NotARealRoot) for vectors outside +-(root lattice cone).
int root_vector_sign(const RootDatum& datum, const IntVec& vec);

bool is_left_descent(const RootDatum& datum, const WeylElt& w, int i);   // l(s_i w) < l(w)
bool is_right_descent(const RootDatum& datum, const WeylElt& w, int i);  // l(w s_i) < l(w)

// Inv(w) = {positive gamma : w(gamma) < 0}, sorted by root_less;
// |Inv(w)| = l(w).
std::vector<Root> inversion_set(const RootDatum& datum, const WeylElt& w);

// The reflection s_beta as a group element (beta of either sign).
WeylElt reflection_of_root(const RootDatum& datum, const Root& beta);
// The positive root whose reflection this element is, if it is one.
std::optional<Root> root_of_reflection(const RootDatum& datum, const WeylElt& w);

// Bruhat order on W^v, by the subword property along the canonical reduced
// word of w (scan version of the descent-lifting recursion).
bool bruhat_le(const RootDatum& datum, const WeylElt& v, const WeylElt& w);

// l_v(w) = l(v^{-1} w) - l(v); can be negative. The inversion-set form
// |Inv(w^{-1}) \ Inv(v^{-1})| - |Inv(w^{-1}) cap Inv(v^{-1})| is exposed
// separately so the two routes can be compared.
Int relative_length(const RootDatum& datum, const WeylElt& v, const WeylElt& w);
Int relative_length_by_sets(const RootDatum& datum, const WeylElt& v, const WeylElt& w);

// Unique minimal-length element of w W_J (right strip of J-descents).
WeylElt min_coset_rep(const RootDatum& datum, const WeylElt& w, const std::vector<int>& J);

// The gate of the coset v W_J seen from w: the unique p in v W_J with
// d(w, q) = d(w, p) + d(p, q) for all q in v W_J.
WeylElt coset_projection(const RootDatum& datum, const WeylElt& v, const std::vector<int>& J,
                         const WeylElt& w);

// Chamber-distance helpers: d^W(v,w) = v^{-1} w, d^N = its length.
WeylElt vectorial_distance(const RootDatum& datum, const WeylElt& v, const WeylElt& w);
Int numeric_distance(const RootDatum& datum, const WeylElt& v, const WeylElt& w);
bool on_minimal_gallery(const RootDatum& datum, const WeylElt& a, const WeylElt& z,
                        const WeylElt& b);

// Positive roots whose walls separate the chambers of x and y
// (exactly d^N(x,y) of them), sorted by root_less.
std::vector<Root> separating_walls(const RootDatum& datum, const WeylElt& x, const WeylElt& y);

// Given v2 off every minimal gallery from v1 to w, a positive root alpha
// whose wall has v1 and w on the positive side and v2 on the negative side;
// the corresponding reflection r then satisfies d^N(v1, r w) > d^N(v1, w) and
// d^N(v2, r w) < d^N(v2, w). Throws Error(PreconditionViolated) if v2 lies on
// a minimal gallery.
Root separating_reflection(const RootDatum& datum, const WeylElt& v1, const WeylElt& v2,
                           const WeylElt& w);

// All elements of length <= length_cap, sorted by (length, word).
std::vector<WeylElt> weyl_ball(const RootDatum& datum, int length_cap);

}  // namespace wplus
