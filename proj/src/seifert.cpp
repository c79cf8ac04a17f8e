#include <knotform/seifert.hpp>

#include <algorithm>
#include <map>

namespace knotform {
namespace seifert {

SeifertMatrix::SeifertMatrix(IntMat entries) : m_(std::move(entries)) {
  if (m_.rows != m_.cols) throw InvalidSeifertMatrix("matrix is not square");
  if (m_.rows % 2 != 0) throw InvalidSeifertMatrix("matrix size is odd");
  if (bareiss_det(m_ - transpose(m_)) != 1)
    throw InvalidSeifertMatrix("det(V - V^T) is not 1");
}

std::vector<Brick> brick_basis(const braid::BraidWord& w) {
  std::map<int, std::vector<int>> occurrences;
  for (int i = 0; i < w.length(); ++i) occurrences[w.letters[static_cast<size_t>(i)]].push_back(i + 1);
  std::vector<Brick> bricks;
  for (const auto& [col, times] : occurrences)
    for (size_t k = 0; k + 1 < times.size(); ++k)
      bricks.push_back({col, times[k], times[k + 1]});
  return bricks;
}

SeifertMatrix from_positive_braid(const braid::BraidWord& w) {
  const int g = braid::positive_braid_genus(w);
  const std::vector<Brick> bricks = brick_basis(w);
  const int n = static_cast<int>(bricks.size());
  if (n != 2 * g) throw Error("brick count does not match the Betti number");

  IntMat v(n, n);
  for (int i = 0; i < n; ++i) v.at(i, i) = -1;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const Brick& u = bricks[static_cast<size_t>(i)];
      const Brick& x = bricks[static_cast<size_t>(j)];
      if (u.column == x.column) {
        if (u.end_time == x.start_time) v.at(i, j) = 1;  // u is the earlier of a consecutive pair
      } else if (x.column - u.column == 1) {
        // Interleaved bricks of adjacent columns link once; the linking
        // number sits on the left column's row and its sign is fixed by
        // which brick starts first.
        if (u.start_time < x.start_time && x.start_time < u.end_time && u.end_time < x.end_time)
          v.at(i, j) = 1;
        else if (x.start_time < u.start_time && u.start_time < x.end_time && x.end_time < u.end_time)
          v.at(i, j) = -1;
      }
    }
  }
  return SeifertMatrix(std::move(v));
}

namespace {

using LauMat = std::vector<std::vector<LaurentPolynomial>>;

LauMat lau_identity(int n) {
  LauMat m(static_cast<size_t>(n), std::vector<LaurentPolynomial>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(i)] = LaurentPolynomial::one();
  return m;
}

// Reduced Burau matrix of a single positive generator: identity except
// row i, which reads (..., t, -t, 1, ...) centered on the diagonal.
LauMat burau_generator(int i, int strands) {
  const int n = strands - 1;
  LauMat m = lau_identity(n);
  const int r = i - 1;
  const LaurentPolynomial t = LaurentPolynomial::monomial(Int(1), 1);
  m[static_cast<size_t>(r)][static_cast<size_t>(r)] = -t;
  if (r >= 1) m[static_cast<size_t>(r)][static_cast<size_t>(r - 1)] = t;
  if (r + 1 < n) m[static_cast<size_t>(r)][static_cast<size_t>(r + 1)] = LaurentPolynomial::one();
  return m;
}

LauMat lau_mul(const LauMat& a, const LauMat& b) {
  const size_t n = a.size();
  LauMat p(n, std::vector<LaurentPolynomial>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (size_t j = 0; j < n; ++j) {
        if (b[k][j].is_zero()) continue;
        p[i][j] += a[i][k] * b[k][j];
      }
    }
  return p;
}

// Determinant by dynamic programming over column subsets, expanding the
// submatrix of the first k rows along its last row.
LaurentPolynomial lau_det(const LauMat& m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return LaurentPolynomial::one();
  if (n > 16) throw Error("determinant dimension too large");
  std::vector<LaurentPolynomial> dp(static_cast<size_t>(1) << n);
  dp[0] = LaurentPolynomial::one();
  for (unsigned mask = 1; mask < dp.size(); ++mask) {
    const int k = __builtin_popcount(mask);
    const size_t row = static_cast<size_t>(k - 1);
    int pos = 0;
    for (int j = 0; j < n; ++j) {
      if (!(mask & (1u << j))) continue;
      if (!m[row][static_cast<size_t>(j)].is_zero() && !dp[mask ^ (1u << j)].is_zero()) {
        LaurentPolynomial term = m[row][static_cast<size_t>(j)] * dp[mask ^ (1u << j)];
        if ((k - 1 + pos) % 2 == 0) dp[mask] += term;
        else dp[mask] -= term;
      }
      ++pos;
    }
  }
  return dp.back();
}

}  // namespace

LaurentPolynomial burau_alexander(const braid::BraidWord& w) {
  if (!braid::closure_is_knot(w)) throw NotAKnot("closure of '" + braid::print_braid_word(w) + "' is not a knot");
  const int n = w.strands - 1;
  LauMat m = lau_identity(n);
  for (int l : w.letters) m = lau_mul(m, burau_generator(l, w.strands));
  const LauMat id = lau_identity(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[static_cast<size_t>(i)][static_cast<size_t>(j)] -= id[static_cast<size_t>(i)][static_cast<size_t>(j)];
  const LaurentPolynomial det = lau_det(m);
  return center_symmetric_unit(divide_exact(det, geometric_sum(w.strands)));
}

SeifertMatrix mirror(const SeifertMatrix& v) { return SeifertMatrix(-transpose(v.entries())); }

SeifertMatrix block_sum(const SeifertMatrix& a, const SeifertMatrix& b) {
  return SeifertMatrix(block_diag_mat(a.entries(), b.entries()));
}

SeifertMatrix power(const SeifertMatrix& v, int n) {
  if (n < 1) throw InvalidPower("block power must be at least 1");
  IntMat m = v.entries();
  for (int k = 1; k < n; ++k) m = block_diag_mat(m, v.entries());
  return SeifertMatrix(std::move(m));
}

}  // namespace seifert
}  // namespace knotform
