#include "wplus/numeric.hpp"

#include <cassert>
#include <cstdlib>
#include <stdexcept>

namespace wplus {

IntMat IntMat::identity(int size) {
  IntMat m(size);
  for (int i = 0; i < size; ++i) m.at(i, i) = 1;
  return m;
}

IntMat mat_mul(const IntMat& x, const IntMat& y) {
  assert(x.n == y.n);
  IntMat r(x.n);
  Int t;
  for (int i = 0; i < x.n; ++i)
    for (int k = 0; k < x.n; ++k) {
      const Int& xik = x.at(i, k);
      if (sgn(xik) == 0) continue;
      for (int j = 0; j < x.n; ++j) {
        t = xik * y.at(k, j);
        r.at(i, j) += t;
      }
    }
  return r;
}

IntMat mat_transpose(const IntMat& x) {
  IntMat r(x.n);
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j) r.at(j, i) = x.at(i, j);
  return r;
}

IntVec mat_vec(const IntMat& m, const IntVec& v) {
  assert(static_cast<int>(v.size()) == m.n);
  IntVec r(v.size());
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j)
      if (sgn(m.at(i, j)) != 0) r[i] += m.at(i, j) * v[j];
  return r;
}

IntVec mat_transpose_vec(const IntMat& m, const IntVec& v) {
  assert(static_cast<int>(v.size()) == m.n);
  IntVec r(v.size());
  for (int j = 0; j < m.n; ++j)
    for (int i = 0; i < m.n; ++i)
      if (sgn(m.at(i, j)) != 0) r[j] += m.at(i, j) * v[i];
  return r;
}

IntVec vec_add(const IntVec& a, const IntVec& b) {
  assert(a.size() == b.size());
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVec vec_sub(const IntVec& a, const IntVec& b) {
  assert(a.size() == b.size());
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IntVec vec_neg(const IntVec& a) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

IntVec vec_add_mul(const IntVec& a, const Int& c, const IntVec& b) {
  assert(a.size() == b.size());
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + c * b[i];
  return r;
}

bool vec_is_zero(const IntVec& a) {
  for (const Int& x : a)
    if (sgn(x) != 0) return false;
  return true;
}

Int dot(const IntVec& a, const IntVec& b) {
  assert(a.size() == b.size());
  Int r = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) r += a[i] * b[i];
  return r;
}

namespace {

// Gauss elimination over Q; returns the rank, and optionally records which
// column index was used as pivot for each eliminated row.
int gauss_rank(std::vector<std::vector<Rat>>& m) {
  if (m.empty()) return 0;
  const std::size_t cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t piv = row;
    while (piv < m.size() && sgn(m[piv][col]) == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[row], m[piv]);
    for (std::size_t r = row + 1; r < m.size(); ++r) {
      if (sgn(m[r][col]) == 0) continue;
      Rat f = m[r][col] / m[row][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
    }
    ++row;
  }
  return static_cast<int>(row);
}

}  // namespace

int rational_rank(const std::vector<IntVec>& rows) {
  std::vector<std::vector<Rat>> m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    m[i].reserve(rows[i].size());
    for (const Int& v : rows[i]) m[i].emplace_back(v);
  }
  return gauss_rank(m);
}

ColumnSolver::ColumnSolver(const std::vector<IntVec>& columns) : columns_(columns) {
  const int k = static_cast<int>(columns.size());
  if (k == 0) return;
  const int d = static_cast<int>(columns[0].size());

  // Pick k rows making the k x k block invertible: greedy over row index,
  // tracking rank with a running elimination.
  std::vector<std::vector<Rat>> elim;  // rows of the selected block, eliminated
  for (int r = 0; r < d && static_cast<int>(pivot_rows_.size()) < k; ++r) {
    std::vector<Rat> cand(k);
    for (int c = 0; c < k; ++c) cand[c] = Rat(columns[c][r]);
    std::vector<std::vector<Rat>> trial = elim;
    trial.push_back(cand);
    if (gauss_rank(trial) > static_cast<int>(elim.size())) {
      elim.clear();
      pivot_rows_.push_back(r);
      for (int rr : pivot_rows_) {
        std::vector<Rat> row(k);
        for (int c = 0; c < k; ++c) row[c] = Rat(columns[c][rr]);
        elim.push_back(row);
      }
      gauss_rank(elim);
    }
  }
  if (static_cast<int>(pivot_rows_.size()) != k)
    throw std::invalid_argument("ColumnSolver: columns are linearly dependent");

  // Invert the selected block by Gauss-Jordan on [B | I].
  std::vector<std::vector<Rat>> aug(k, std::vector<Rat>(2 * k));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) aug[i][j] = Rat(columns[j][pivot_rows_[i]]);
    aug[i][k + i] = 1;
  }
  for (int col = 0; col < k; ++col) {
    int piv = col;
    while (piv < k && sgn(aug[piv][col]) == 0) ++piv;
    if (piv == k) throw std::logic_error("ColumnSolver: singular pivot block");
    std::swap(aug[col], aug[piv]);
    Rat inv = 1 / aug[col][col];
    for (int c = 0; c < 2 * k; ++c) aug[col][c] *= inv;
    for (int r = 0; r < k; ++r) {
      if (r == col || sgn(aug[r][col]) == 0) continue;
      Rat f = aug[r][col];
      for (int c = 0; c < 2 * k; ++c) aug[r][c] -= f * aug[col][c];
    }
  }
  inverse_.resize(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) inverse_[static_cast<std::size_t>(i) * k + j] = aug[i][k + j];
}

std::optional<IntVec> ColumnSolver::solve(const IntVec& x) const {
  const int k = static_cast<int>(columns_.size());
  IntVec out(k);
  for (int i = 0; i < k; ++i) {
    Rat acc = 0;
    for (int j = 0; j < k; ++j)
      acc += inverse_[static_cast<std::size_t>(i) * k + j] * Rat(x[pivot_rows_[j]]);
    acc.canonicalize();
    if (acc.get_den() != 1) return std::nullopt;
    out[i] = acc.get_num();
  }
  // The pivot rows determine the candidate; verify the remaining coordinates.
  const int d = static_cast<int>(x.size());
  for (int r = 0; r < d; ++r) {
    Int acc = 0;
    for (int c = 0; c < k; ++c)
      if (sgn(out[c]) != 0) acc += out[c] * columns_[c][r];
    if (acc != x[r]) return std::nullopt;
  }
  return out;
}

namespace {

inline std::size_t mix(std::size_t h, std::size_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

}  // namespace

std::size_t hash_int(const Int& v, std::size_t seed) {
  std::size_t h = mix(seed, static_cast<std::size_t>(sgn(v) + 1));
  const mpz_srcptr p = v.get_mpz_t();
  const std::size_t limbs = mpz_size(p);
  for (std::size_t i = 0; i < limbs; ++i)
    h = mix(h, static_cast<std::size_t>(mpz_getlimbn(p, static_cast<mp_size_t>(i))));
  return h;
}

std::size_t hash_vec(const IntVec& v, std::size_t seed) {
  std::size_t h = mix(seed, v.size());
  for (const Int& x : v) h = hash_int(x, h);
  return h;
}

std::size_t hash_mat(const IntMat& m, std::size_t seed) {
  std::size_t h = mix(seed, static_cast<std::size_t>(m.n));
  for (const Int& x : m.a) h = hash_int(x, h);
  return h;
}

std::string fixed_decimal(const Rat& q, int digits) {
  // round(q * 10^digits), half away from zero, then re-insert the point.
  Int scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  Int num = q.get_num() * scale;
  Int den = q.get_den();
  Int scaled, rem;
  mpz_tdiv_qr(scaled.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (sgn(rem) != 0 && abs(rem) * 2 >= den) scaled += (sgn(num) < 0) ? -1 : 1;

  bool neg = sgn(scaled) < 0;
  Int mag = abs(scaled);
  std::string s = mag.get_str();
  if (digits > 0) {
    if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits + 1 - s.size()), '0');
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  }
  if (neg && s.find_first_not_of("0.") != std::string::npos) s.insert(0, "-");
  return s;
}

}  // namespace wplus
