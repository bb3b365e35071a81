#include "wplus/root_datum.hpp"

#include <cctype>
#include <sstream>

namespace wplus {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::DiagonalNotTwo: return "DiagonalNotTwo";
    case Errc::PositiveOffDiagonal: return "PositiveOffDiagonal";
    case Errc::AsymmetricZero: return "AsymmetricZero";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotARealRoot: return "NotARealRoot";
    case Errc::NotAWeylMatrix: return "NotAWeylMatrix";
    case Errc::NotInTitsCone: return "NotInTitsCone";
    case Errc::NegativeZeroLevel: return "NegativeZeroLevel";
    case Errc::ParseError: return "ParseError";
    case Errc::RankNotTwo: return "RankNotTwo";
    case Errc::PreconditionViolated: return "PreconditionViolated";
  }
  return "UnknownError";
}

namespace {

std::string entry_pos(int i, int j) {
  return "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

}  // namespace

Gcm validate_gcm(const std::vector<IntVec>& rows) {
  const int n = static_cast<int>(rows.size());
  if (n == 0) throw Error(Errc::ParseError, "empty Cartan matrix");
  Gcm g;
  g.size = n;
  g.entries.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw Error(Errc::DimensionMismatch,
                  "Cartan row " + std::to_string(i + 1) + " has " +
                      std::to_string(rows[i].size()) + " entries, expected " + std::to_string(n));
    for (int j = 0; j < n; ++j) g.entries[static_cast<std::size_t>(i) * n + j] = rows[i][j];
  }
  for (int i = 0; i < n; ++i) {
    if (g.at(i, i) != 2) throw Error(Errc::DiagonalNotTwo, entry_pos(i, i));
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (sgn(g.at(i, j)) > 0) throw Error(Errc::PositiveOffDiagonal, entry_pos(i, j));
      if (sgn(g.at(i, j)) == 0 && sgn(g.at(j, i)) != 0)
        throw Error(Errc::AsymmetricZero, entry_pos(i, j));
    }
  }
  return g;
}

namespace {

void finish_datum(RootDatum& d) {
  d.rho.assign(static_cast<std::size_t>(d.rank), 0);
  for (const IntVec& w : d.fundamental_weights) d.rho = vec_add(d.rho, w);
  d.root_expander = ColumnSolver(d.simple_roots);
  d.coroot_expander = ColumnSolver(d.simple_coroots);
}

void validate_realization(const RootDatum& d) {
  const int n = d.size();
  auto check_dim = [&](const std::vector<IntVec>& vs, const char* what) {
    if (static_cast<int>(vs.size()) != n)
      throw Error(Errc::DimensionMismatch, std::string(what) + ": expected " + std::to_string(n) + " vectors");
    for (const IntVec& v : vs)
      if (static_cast<int>(v.size()) != d.rank)
        throw Error(Errc::DimensionMismatch, std::string(what) + ": vector of length " +
                                                 std::to_string(v.size()) + ", rank is " +
                                                 std::to_string(d.rank));
  };
  check_dim(d.simple_coroots, "coroots");
  check_dim(d.simple_roots, "roots");
  check_dim(d.fundamental_weights, "weights");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (pairing(d.simple_coroots[i], d.simple_roots[j]) != d.gcm.at(i, j))
        throw Error(Errc::DimensionMismatch,
                    "pairing(coroot " + std::to_string(i + 1) + ", root " + std::to_string(j + 1) +
                        ") differs from the Cartan entry");
      Int delta = (i == j) ? 1 : 0;
      if (pairing(d.simple_coroots[i], d.fundamental_weights[j]) != delta)
        throw Error(Errc::DimensionMismatch,
                    "pairing(coroot " + std::to_string(i + 1) + ", weight " + std::to_string(j + 1) +
                        ") is not " + delta.get_str());
    }
  if (rational_rank(d.simple_roots) != n)
    throw Error(Errc::DimensionMismatch, "simple roots are linearly dependent");
  if (rational_rank(d.simple_coroots) != n)
    throw Error(Errc::DimensionMismatch, "simple coroots are linearly dependent");
}

}  // namespace

RootDatum build_minimal_realization(const Gcm& gcm) {
  const int n = gcm.size;

  // Rows of A^T, i.e. row j lists <alpha_i^vee, alpha_j> over i.
  std::vector<IntVec> at_rows(static_cast<std::size_t>(n), IntVec(static_cast<std::size_t>(n)));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) at_rows[j][i] = gcm.at(i, j);

  // Lexicographically-first maximal independent subset of those rows; every
  // row outside it receives a fresh unit coordinate.
  std::vector<int> dependent;
  {
    std::vector<IntVec> kept;
    for (int j = 0; j < n; ++j) {
      kept.push_back(at_rows[j]);
      if (rational_rank(kept) < static_cast<int>(kept.size())) {
        kept.pop_back();
        dependent.push_back(j);
      }
    }
  }
  const int corank = static_cast<int>(dependent.size());
  const int d = n + corank;

  RootDatum datum;
  datum.gcm = gcm;
  datum.rank = d;
  datum.simple_coroots.assign(static_cast<std::size_t>(n), IntVec(static_cast<std::size_t>(d)));
  datum.simple_roots.assign(static_cast<std::size_t>(n), IntVec(static_cast<std::size_t>(d)));
  datum.fundamental_weights.assign(static_cast<std::size_t>(n), IntVec(static_cast<std::size_t>(d)));
  for (int i = 0; i < n; ++i) {
    datum.simple_coroots[i][i] = 1;
    datum.fundamental_weights[i][i] = 1;
    for (int r = 0; r < n; ++r) datum.simple_roots[i][r] = gcm.at(r, i);
    for (int k = 0; k < corank; ++k)
      if (dependent[k] == i) datum.simple_roots[i][n + k] = 1;
  }
  finish_datum(datum);
  validate_realization(datum);
  return datum;
}

RootDatum make_root_datum(const Gcm& gcm, int rank, std::vector<IntVec> coroots,
                          std::vector<IntVec> roots, std::vector<IntVec> weights) {
  RootDatum datum;
  datum.gcm = gcm;
  datum.rank = rank;
  datum.simple_coroots = std::move(coroots);
  datum.simple_roots = std::move(roots);
  datum.fundamental_weights = std::move(weights);
  if (rank < gcm.size)
    throw Error(Errc::DimensionMismatch, "rank smaller than the Cartan matrix size");
  validate_realization(datum);
  finish_datum(datum);
  return datum;
}

Int pairing(const IntVec& y, const IntVec& x) {
  if (y.size() != x.size())
    throw Error(Errc::DimensionMismatch, "pairing of vectors of lengths " +
                                             std::to_string(y.size()) + " and " +
                                             std::to_string(x.size()));
  return dot(y, x);
}

Int height(const RootDatum& datum, const IntVec& lam) {
  return pairing(lam, datum.rho);
}

namespace {

IntVec parse_int_list(const std::string& s, const std::string& context) {
  IntVec out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) {
    try {
      out.emplace_back(tok);
    } catch (const std::invalid_argument&) {
      throw Error(Errc::ParseError, context + ": bad integer '" + tok + "'");
    }
  }
  return out;
}

}  // namespace

std::vector<IntVec> parse_cartan_rows(const std::string& text) {
  std::vector<IntVec> rows;
  std::string row;
  std::string normalized;
  normalized.reserve(text.size());
  for (char c : text) normalized.push_back(c == ',' ? ' ' : c);
  std::istringstream in(normalized);
  while (std::getline(in, row, ';')) {
    IntVec r = parse_int_list(row, "cartan");
    if (!r.empty()) rows.push_back(std::move(r));
  }
  if (rows.empty()) throw Error(Errc::ParseError, "cartan: no rows");
  return rows;
}

RootDatum parse_datum_file(const std::string& text) {
  std::vector<IntVec> cartan_rows;
  std::vector<IntVec> coroots, roots, weights;
  long rank = -1;

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (std::size_t h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    std::string rest;
    std::getline(ls, rest);
    const std::string where = "line " + std::to_string(lineno);

    if (key == "cartan") {
      if (rest.find_first_not_of(" \t") == std::string::npos)
        throw Error(Errc::ParseError, where + ": cartan requires rows on the same line, ';'-separated");
      cartan_rows = parse_cartan_rows(rest);
    } else if (key == "rank") {
      IntVec v = parse_int_list(rest, where);
      if (v.size() != 1 || !v[0].fits_slong_p())
        throw Error(Errc::ParseError, where + ": rank expects one small integer");
      rank = v[0].get_si();
    } else if (key == "coroot") {
      coroots.push_back(parse_int_list(rest, where));
    } else if (key == "root") {
      roots.push_back(parse_int_list(rest, where));
    } else if (key == "weight") {
      weights.push_back(parse_int_list(rest, where));
    } else {
      throw Error(Errc::ParseError, where + ": unknown directive '" + key + "'");
    }
  }

  if (cartan_rows.empty()) throw Error(Errc::ParseError, "missing cartan directive");
  Gcm gcm = validate_gcm(cartan_rows);

  const bool has_realization = !coroots.empty() || !roots.empty() || !weights.empty();
  if (!has_realization) {
    if (rank >= 0) {
      RootDatum minimal = build_minimal_realization(gcm);
      if (minimal.rank != rank)
        throw Error(Errc::DimensionMismatch,
                    "declared rank " + std::to_string(rank) + " but the minimal realization has rank " +
                        std::to_string(minimal.rank) + "; supply explicit coroot/root/weight blocks");
      return minimal;
    }
    return build_minimal_realization(gcm);
  }
  if (coroots.empty() || roots.empty() || weights.empty())
    throw Error(Errc::ParseError,
                "explicit realizations need all three of coroot/root/weight blocks");
  if (rank < 0)
    throw Error(Errc::ParseError, "explicit realizations require a rank directive");
  return make_root_datum(gcm, static_cast<int>(rank), std::move(coroots), std::move(roots),
                         std::move(weights));
}

}  // namespace wplus
