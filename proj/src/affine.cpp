#include "wplus/affine.hpp"

#include <cctype>
#include <sstream>

#include "wplus/errors.hpp"

namespace wplus {

std::size_t hash_affine(const AffineElt& x) {
  return hash_mat(x.w.ymat, hash_vec(x.lam));
}

bool affine_elt_less(const AffineElt& a, const AffineElt& b) {
  if (a.lam != b.lam) return a.lam < b.lam;
  return a.w.word < b.w.word;
}

AffineElt affine_identity(const RootDatum& datum) {
  return {IntVec(static_cast<std::size_t>(datum.rank), 0), weyl_identity(datum)};
}

AffineElt multiply(const RootDatum& datum, const AffineElt& a, const AffineElt& b) {
  return {vec_add(a.lam, apply(datum, a.w, b.lam)), multiply(datum, a.w, b.w)};
}

AffineElt inverse(const RootDatum& datum, const AffineElt& a) {
  WeylElt winv = inverse(datum, a.w);
  return {vec_neg(apply(datum, winv, a.lam)), std::move(winv)};
}

SignedAffineRoot act(const RootDatum& datum, const AffineElt& x, const SignedAffineRoot& a) {
  Root moved = apply(datum, x.w, a.beta);
  Int level = a.n + pairing(x.lam, moved.vec);
  return {std::move(moved), std::move(level)};
}

bool affine_root_less(const AffineRoot& a, const AffineRoot& b) {
  if (a.n != b.n) return a.n < b.n;
  return root_less(a.beta, b.beta);
}

AffineRoot normalize_affine_root(const Root& beta, const Int& n) {
  if (n == 0) {
    if (!beta.positive())
      throw Error(Errc::NegativeZeroLevel,
                  "beta[0] with beta negative names no positive affine root");
    return {beta, 0};
  }
  // sgn(n) beta + |n| pi; covers the (-beta)[-n] identification as well.
  if (n > 0) return {beta, n};
  return {beta.negated(), -n};
}

AffineElt affine_reflection(const RootDatum& datum, const AffineRoot& a) {
  IntVec translation = a.beta.covec;
  for (Int& c : translation) c *= a.n;
  return {std::move(translation), reflection_of_root(datum, a.beta)};
}

std::optional<WPlusElt> try_make_wplus(const RootDatum& datum, AffineElt x, int step_cap) {
  auto dom = dominate(datum, x.lam, step_cap);
  if (!dom) return std::nullopt;
  return WPlusElt{std::move(x), std::move(*dom)};
}

WPlusElt make_wplus(const RootDatum& datum, AffineElt x, int step_cap) {
  auto res = try_make_wplus(datum, std::move(x), step_cap);
  if (!res)
    throw Error(Errc::NotInTitsCone, "coweight not certified inside the Tits cone");
  return std::move(*res);
}

std::pair<Int, Int> affine_length_eps(const RootDatum& datum, const WPlusElt& x) {
  Int two_ht = 2 * height(datum, x.dom.dominant);
  Int eps = 0;
  for (const Root& alpha : inversion_set(datum, inverse(datum, x.w()))) {
    if (pairing(x.lam(), alpha.vec) >= 0)
      ++eps;
    else
      --eps;
  }
  return {std::move(two_ht), std::move(eps)};
}

Int affine_length(const RootDatum& datum, const WPlusElt& x) {
  auto [two_ht, eps] = affine_length_eps(datum, x);
  return two_ht + eps;
}

Int affine_length_relative(const RootDatum& datum, const WPlusElt& x) {
  return 2 * height(datum, x.dom.dominant) + relative_length(datum, x.dom.v_min, x.w());
}

std::string format_element(const AffineElt& x) {
  std::string out = "pi[";
  for (std::size_t i = 0; i < x.lam.size(); ++i) {
    if (i) out += ",";
    out += x.lam[i].get_str();
  }
  out += "] * ";
  if (x.w.is_identity()) {
    out += "e";
  } else {
    for (std::size_t k = 0; k < x.w.word.size(); ++k) {
      if (k) out += " ";
      out += "s" + std::to_string(x.w.word[k] + 1);
    }
  }
  return out;
}

std::string format_affine_root(const AffineRoot& a) {
  std::string out = "(";
  for (std::size_t i = 0; i < a.beta.vec.size(); ++i) {
    if (i) out += ",";
    out += a.beta.vec[i].get_str();
  }
  out += ")[" + a.n.get_str() + "]";
  return out;
}

namespace {

std::string trimmed(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

AffineElt parse_element(const RootDatum& datum, const std::string& text) {
  std::string s = trimmed(text);
  if (s == "e") return affine_identity(datum);

  if (s.rfind("pi[", 0) != 0)
    throw Error(Errc::ParseError, "element must start with 'pi[' (or be 'e'): '" + text + "'");
  std::size_t close = s.find(']');
  if (close == std::string::npos)
    throw Error(Errc::ParseError, "unterminated coordinate list in '" + text + "'");

  IntVec lam;
  {
    std::string coords = s.substr(3, close - 3);
    for (char& c : coords)
      if (c == ',') c = ' ';
    std::istringstream in(coords);
    std::string tok;
    while (in >> tok) {
      try {
        lam.emplace_back(tok);
      } catch (const std::invalid_argument&) {
        throw Error(Errc::ParseError, "bad coordinate '" + tok + "'");
      }
    }
  }
  if (static_cast<int>(lam.size()) != datum.rank)
    throw Error(Errc::ParseError, "expected " + std::to_string(datum.rank) +
                                      " coordinates, got " + std::to_string(lam.size()));

  std::istringstream rest(s.substr(close + 1));
  std::string tok;
  if (!(rest >> tok) || tok != "*")
    throw Error(Errc::ParseError, "expected '*' after the coordinate list");

  std::vector<int> word;
  bool saw_e = false;
  while (rest >> tok) {
    if (tok == "e") {
      saw_e = true;
      continue;
    }
    if (tok.size() < 2 || tok.size() > 8 || tok[0] != 's' ||
        tok.find_first_not_of("0123456789", 1) != std::string::npos)
      throw Error(Errc::ParseError, "bad generator token '" + tok + "'");
    int idx = std::stoi(tok.substr(1));
    if (idx < 1 || idx > datum.size())
      throw Error(Errc::ParseError, "generator index out of range: '" + tok + "'");
    word.push_back(idx - 1);
  }
  if (word.empty() && !saw_e)
    throw Error(Errc::ParseError, "missing word: write 'e' for the identity");
  if (saw_e && !word.empty())
    throw Error(Errc::ParseError, "'e' cannot be mixed with generators");

  return {std::move(lam), weyl_from_word(datum, word)};
}

}  // namespace wplus
