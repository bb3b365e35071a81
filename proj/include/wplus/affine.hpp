#pragma once

// The affinized Weyl semigroup. Elements pi^lambda w of Y x| W^v multiply by
// pi^lambda w . pi^mu v = pi^{lambda + w(mu)} (wv); the sub-semigroup W+ is
// cut out by lambda lying in the Tits cone, and only W+ carries the length
// functions. Affine roots beta + n*pi live in Phi x Z and the semidirect
// product acts on them; beta[n] denotes the positive normal form and
// s_{beta[n]} = pi^{n beta^vee} s_beta the reflection across its wall.

#include <optional>
#include <string>
#include <utility>

#include "wplus/tits.hpp"
#include "wplus/weyl.hpp"

namespace wplus {

struct AffineElt {
  IntVec lam;  // in Y
  WeylElt w;

  friend bool operator==(const AffineElt& a, const AffineElt& b) {
    return a.lam == b.lam && a.w == b.w;
  }
};

std::size_t hash_affine(const AffineElt& x);
// Deterministic order for reports: by coweight, then by canonical word.
bool affine_elt_less(const AffineElt& a, const AffineElt& b);

AffineElt affine_identity(const RootDatum& datum);
AffineElt multiply(const RootDatum& datum, const AffineElt& a, const AffineElt& b);
AffineElt inverse(const RootDatum& datum, const AffineElt& a);

// beta + n*pi, beta of either sign; no positivity constraint.
struct SignedAffineRoot {
  Root beta;
  Int n;

  bool positive() const { return n > 0 || (n == 0 && beta.positive()); }
  friend bool operator==(const SignedAffineRoot& a, const SignedAffineRoot& b) {
    return a.beta == b.beta && a.n == b.n;
  }
};

// pi^lam w (beta + n pi) = w(beta) + (n + <lam, w(beta)>) pi.
SignedAffineRoot act(const RootDatum& datum, const AffineElt& x, const SignedAffineRoot& a);

// The positive normal form beta[n]: level >= 0, and the root positive when the
// level vanishes. (The root may be negative at positive levels.)
struct AffineRoot {
  Root beta;
  Int n;

  friend bool operator==(const AffineRoot& a, const AffineRoot& b) {
    return a.beta == b.beta && a.n == b.n;
  }
};

// Order by (level, root height, root expansion): the deterministic scan order
// used by cover enumeration.
bool affine_root_less(const AffineRoot& a, const AffineRoot& b);

// (beta, n) -> beta[n] = sgn(n) beta + |n| pi, with (-beta)[-n] = beta[n] for
// n != 0. Throws Error(NegativeZeroLevel) for a negative root at level zero:
// that pair names no positive affine root, the caller must negate first.
AffineRoot normalize_affine_root(const Root& beta, const Int& n);

// s_{beta[n]} = pi^{n beta^vee} s_beta; an involution of Y x| W^v whose wall
// is fixed pointwise in the apartment.
AffineElt affine_reflection(const RootDatum& datum, const AffineRoot& a);

// An element together with the dominance certificate for its coweight: the
// witness that it belongs to W+. Everything length-related starts from here.
struct WPlusElt {
  AffineElt elt;
  DominanceResult dom;

  const IntVec& lam() const { return elt.lam; }
  const WeylElt& w() const { return elt.w; }
};

std::optional<WPlusElt> try_make_wplus(const RootDatum& datum, AffineElt x, int step_cap = 10000);
// Throws Error(NotInTitsCone) when the dominance walk does not resolve.
WPlusElt make_wplus(const RootDatum& datum, AffineElt x, int step_cap = 10000);

// The affine length in the form (2 ht(lam++), epsilon coefficient): the
// second entry counts Inv(w^{-1}) with sign +1 where <lam, alpha> >= 0 and
// -1 where <lam, alpha> < 0.
std::pair<Int, Int> affine_length_eps(const RootDatum& datum, const WPlusElt& x);
// epsilon = 1: the integral affine length. May be negative.
Int affine_length(const RootDatum& datum, const WPlusElt& x);
// Independent route: 2 ht(lam++) + relative length of w seen from v^lam.
Int affine_length_relative(const RootDatum& datum, const WPlusElt& x);

// Text form "pi[c1,...,cd] * s1 s2" with "e" for the empty word; parse also
// accepts a bare "e" for the identity element. Generators are 1-based.
std::string format_element(const AffineElt& x);
AffineElt parse_element(const RootDatum& datum, const std::string& text);

// Text form "(v1,...,vd)[n]" showing the root vector and the level.
std::string format_affine_root(const AffineRoot& a);

}  // namespace wplus
