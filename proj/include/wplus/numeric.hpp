// Exact integer/rational linear algebra on top of GMP.
//
// Everything the library computes (pairings, heights, affine levels, matrix
// entries) lives in mpz_class; the only rational computations are the
// realization solver (expansion of a lattice vector in the simple-root basis)
// and screen-coordinate math for SVG output.

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace wplus {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;

// Square integer matrix, row-major.
struct IntMat {
  int n = 0;
  std::vector<Int> a;

  IntMat() = default;
  explicit IntMat(int size) : n(size), a(static_cast<std::size_t>(size) * size) {}

  static IntMat identity(int size);

  Int& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  const Int& at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }

  friend bool operator==(const IntMat&, const IntMat&) = default;
};

IntMat mat_mul(const IntMat& x, const IntMat& y);
IntMat mat_transpose(const IntMat& x);
IntVec mat_vec(const IntMat& m, const IntVec& v);
// y^T * M, i.e. apply the transpose without materializing it.
IntVec mat_transpose_vec(const IntMat& m, const IntVec& v);

IntVec vec_add(const IntVec& a, const IntVec& b);
IntVec vec_sub(const IntVec& a, const IntVec& b);
IntVec vec_neg(const IntVec& a);
// a + c*b
IntVec vec_add_mul(const IntVec& a, const Int& c, const IntVec& b);
bool vec_is_zero(const IntVec& a);
Int dot(const IntVec& a, const IntVec& b);

// Rank of a rectangular integer matrix (rows of equal length) over Q.
int rational_rank(const std::vector<IntVec>& rows);

// Solves R c = x for the (d x k) matrix R with the given columns (full column
// rank k <= d), over Q. Precomputes a rational left inverse once; solve()
// answers "is x an *integral* combination of the columns, and which one".
class ColumnSolver {
 public:
  ColumnSolver() = default;
  // columns: k vectors of dimension d, linearly independent over Q.
  explicit ColumnSolver(const std::vector<IntVec>& columns);

  // Integral expansion of x in the columns, if one exists.
  std::optional<IntVec> solve(const IntVec& x) const;

  bool valid() const { return !columns_.empty(); }

 private:
  std::vector<IntVec> columns_;     // d-dimensional, k of them
  std::vector<int> pivot_rows_;     // k row indices selected for inversion
  std::vector<Rat> inverse_;        // k x k rational inverse of the pivot block
};

// FNV-style hashing of GMP values/vectors/matrices, for unordered containers.
std::size_t hash_int(const Int& v, std::size_t seed = 0x9e3779b97f4a7c15ull);
std::size_t hash_vec(const IntVec& v, std::size_t seed = 0x9e3779b97f4a7c15ull);
std::size_t hash_mat(const IntMat& m, std::size_t seed = 0x9e3779b97f4a7c15ull);

// Exact fixed-point decimal rendering of a rational (round half away from
// zero), used for deterministic SVG output. digits >= 0.
std::string fixed_decimal(const Rat& q, int digits);

}  // namespace wplus
