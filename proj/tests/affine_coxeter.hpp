#pragma once

// A deliberately independent affine Coxeter engine for finite-type cross
// checks. Nothing here touches the main library: plain long arithmetic,
// its own root closure, and the textbook algorithms.
//
// Elements are affine transformations g = t_mu * u of the coweight space
// (mu in coroot coordinates, u in the finite Weyl group), acting on affine
// roots a = (beta, k) <-> the function y -> <y,beta> + k by
//   g(a) = a o g^{-1} = (u(beta), k - <mu, u(beta)>).
// Simple affine roots: a_i = (alpha_i, 0) for i = 1..r and a_0 = (-theta, 1),
// where theta is the highest root. Right descents are the simple affine
// roots sent negative; length = number of descent strips to the identity;
// Bruhat order by the standard descent recursion equivalent to the subword
// property.

#include <stdexcept>
#include <vector>

namespace affox {

using Vec = std::vector<long>;
using Mat = std::vector<Vec>;  // row-major; (M v)_i = sum_j M[i][j] v_j

inline Vec mat_apply(const Mat& m, const Vec& v) {
  const std::size_t n = m.size();
  Vec out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[i] += m[i][j] * v[j];
  }
  return out;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
  const std::size_t n = a.size();
  Mat out(n, Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

inline Mat mat_identity(std::size_t n) {
  Mat m(n, Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

// t_mu * u; rm acts on root expansions, cm on coweights (coroot coordinates).
struct Elt {
  Vec mu;
  Mat rm;
  Mat cm;

  friend bool operator==(const Elt& a, const Elt& b) { return a.mu == b.mu && a.rm == b.rm; }
};

// Affine root (beta expansion, level k).
struct ARoot {
  Vec beta;
  long k;
};

class Engine {
 public:
  explicit Engine(const Mat& cartan) : r_(cartan.size()), a_(cartan) {
    build_roots();
    build_generators();
  }

  int rank() const { return static_cast<int>(r_); }

  Elt identity() const { return Elt{Vec(r_, 0), mat_identity(r_), mat_identity(r_)}; }

  // i = 0 is the affine generator; i = 1..r the classical ones.
  const Elt& gen(int i) const { return gens_[static_cast<std::size_t>(i)]; }

  Elt mul(const Elt& x, const Elt& y) const {
    Vec mu = mat_apply(x.cm, y.mu);
    for (std::size_t i = 0; i < r_; ++i) mu[i] += x.mu[i];
    return Elt{std::move(mu), mat_mul(x.rm, y.rm), mat_mul(x.cm, y.cm)};
  }

  // t_mu * s_{w1} ... s_{wk} with 0-based classical letters.
  Elt from_translation_word(const Vec& mu, const std::vector<int>& word) const {
    Elt g = identity();
    g.mu = mu;
    for (int i : word) g = mul(g, gen(i + 1));
    return g;
  }

  bool is_identity(const Elt& g) const {
    for (long c : g.mu) {
      if (c != 0) return false;
    }
    return g.rm == mat_identity(r_);
  }

  ARoot act(const Elt& g, const ARoot& a) const {
    Vec beta = mat_apply(g.rm, a.beta);
    return ARoot{beta, a.k - pair_coweight_root(g.mu, beta)};
  }

  static bool positive(const ARoot& a) {
    if (a.k != 0) return a.k > 0;
    for (long c : a.beta) {
      if (c != 0) return c > 0;
    }
    throw std::logic_error("zero affine root");
  }

  ARoot simple_affine(int i) const {
    if (i == 0) {
      Vec neg = theta_;
      for (long& c : neg) c = -c;
      return ARoot{neg, 1};
    }
    Vec e(r_, 0);
    e[static_cast<std::size_t>(i - 1)] = 1;
    return ARoot{e, 0};
  }

  bool right_descent(const Elt& g, int i) const { return !positive(act(g, simple_affine(i))); }

  int length(Elt g) const {
    int len = 0;
    while (!is_identity(g)) {
      int i = first_descent(g);
      g = mul(g, gen(i));
      if (++len > 100000) throw std::logic_error("descent stripping diverged");
    }
    return len;
  }

  std::vector<int> reduced_word(Elt g) const {
    std::vector<int> rev;
    while (!is_identity(g)) {
      int i = first_descent(g);
      rev.push_back(i);
      g = mul(g, gen(i));
      if (rev.size() > 100000) throw std::logic_error("descent stripping diverged");
    }
    return {rev.rbegin(), rev.rend()};
  }

  // x <= y in Bruhat order: repeatedly pick a right descent i of y; then
  // x <= y iff (x s_i <= y s_i when i is also a descent of x, else x <= y s_i).
  bool bruhat_le(Elt x, Elt y) const {
    int lx = length(x);
    int ly = length(y);
    while (true) {
      if (lx > ly) return false;
      if (lx == 0) return true;
      int i = first_descent(y);
      y = mul(y, gen(i));
      --ly;
      if (right_descent(x, i)) {
        x = mul(x, gen(i));
        --lx;
      }
    }
  }

  const Vec& theta() const { return theta_; }
  const Vec& theta_vee() const { return theta_vee_; }
  std::size_t positive_root_count() const { return roots_.size(); }

 private:
  std::size_t r_;
  Mat a_;
  std::vector<Vec> roots_;    // positive roots, expansions
  std::vector<Vec> coroots_;  // matching coroot expansions
  Vec theta_;
  Vec theta_vee_;
  std::vector<Elt> gens_;

  long pair_coweight_root(const Vec& mu, const Vec& beta_exp) const {
    // <sum mu_i alpha_i^vee, beta> = mu . (A beta_exp)
    long total = 0;
    const Vec ab = mat_apply(a_, beta_exp);
    for (std::size_t i = 0; i < r_; ++i) total += mu[i] * ab[i];
    return total;
  }

  void build_roots() {
    // Closure under the simple reflections, keeping the positive ones:
    //   s_i: exp -> exp - (A exp)_i e_i,   coexp -> coexp - (A^T coexp)_i e_i.
    std::vector<std::pair<Vec, Vec>> frontier;
    for (std::size_t i = 0; i < r_; ++i) {
      Vec e(r_, 0), c(r_, 0);
      e[i] = 1;
      c[i] = 1;
      frontier.push_back({e, c});
      roots_.push_back(e);
      coroots_.push_back(c);
    }
    while (!frontier.empty()) {
      std::vector<std::pair<Vec, Vec>> next;
      for (const auto& [exp, coexp] : frontier) {
        for (std::size_t i = 0; i < r_; ++i) {
          Vec e2 = exp;
          const Vec ae = mat_apply(a_, exp);
          e2[i] -= ae[i];
          bool pos = false, neg = false;
          for (long c : e2) {
            if (c > 0) pos = true;
            if (c < 0) neg = true;
          }
          if (neg || !pos) continue;
          bool known = false;
          for (const Vec& known_root : roots_) {
            if (known_root == e2) known = true;
          }
          if (known) continue;
          Vec c2 = coexp;
          long atc = 0;
          for (std::size_t j = 0; j < r_; ++j) atc += a_[j][i] * coexp[j];
          c2[i] -= atc;
          roots_.push_back(e2);
          coroots_.push_back(c2);
          next.push_back({e2, c2});
        }
      }
      frontier = std::move(next);
      if (roots_.size() > 10000) throw std::logic_error("root closure diverged: not finite type");
    }
    std::size_t best = 0;
    long best_ht = -1;
    for (std::size_t k = 0; k < roots_.size(); ++k) {
      long ht = 0;
      for (long c : roots_[k]) ht += c;
      if (ht > best_ht) {
        best_ht = ht;
        best = k;
      }
    }
    theta_ = roots_[best];
    theta_vee_ = coroots_[best];
  }

  void build_generators() {
    gens_.resize(r_ + 1);
    for (std::size_t i = 0; i < r_; ++i) {
      Mat rm = mat_identity(r_);
      Mat cm = mat_identity(r_);
      for (std::size_t j = 0; j < r_; ++j) {
        rm[i][j] -= a_[i][j];  // exp -> exp - (A exp)_i e_i
        cm[i][j] -= a_[j][i];  // cow -> cow - (A^T cow)_i e_i
      }
      gens_[i + 1] = Elt{Vec(r_, 0), std::move(rm), std::move(cm)};
    }
    // s_0 = t_{theta_vee} s_theta.
    Mat rm = mat_identity(r_);
    Mat cm = mat_identity(r_);
    const Vec at = mat_apply(a_, theta_);
    for (std::size_t i = 0; i < r_; ++i) {
      // s_theta(beta) = beta - <theta_vee, beta> theta on expansions;
      // s_theta(y) = y - <y, theta> theta_vee on coweights.
      for (std::size_t j = 0; j < r_; ++j) {
        long form_j = 0;  // coefficient of beta_j in <theta_vee, beta>
        for (std::size_t k = 0; k < r_; ++k) form_j += theta_vee_[k] * a_[k][j];
        rm[i][j] -= theta_[i] * form_j;
        cm[i][j] -= theta_vee_[i] * at[j];
      }
    }
    gens_[0] = Elt{theta_vee_, std::move(rm), std::move(cm)};
  }

  int first_descent(const Elt& g) const {
    for (int i = 0; i <= static_cast<int>(r_); ++i) {
      if (right_descent(g, i)) return i;
    }
    throw std::logic_error("no descent on a non-identity element");
  }
};

}  // namespace affox
