#include <knotform/matrix.hpp>

#include <utility>

namespace knotform {

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::from_rows(const std::vector<IntVec>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  IntMat m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw DimensionMismatch("ragged rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][static_cast<size_t>(j)];
  }
  return m;
}

IntMat transpose(const IntMat& m) {
  IntMat t(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
  return t;
}

IntMat operator*(const IntMat& a, const IntMat& b) {
  if (a.cols != b.rows) throw DimensionMismatch("matrix product shape");
  IntMat p(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      const Int& v = a.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < b.cols; ++j) p.at(i, j) += v * b.at(k, j);
    }
  return p;
}

IntMat operator+(const IntMat& a, const IntMat& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw DimensionMismatch("matrix sum shape");
  IntMat s(a.rows, a.cols);
  for (size_t k = 0; k < a.a.size(); ++k) s.a[k] = a.a[k] + b.a[k];
  return s;
}

IntMat operator-(const IntMat& a, const IntMat& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw DimensionMismatch("matrix difference shape");
  IntMat s(a.rows, a.cols);
  for (size_t k = 0; k < a.a.size(); ++k) s.a[k] = a.a[k] - b.a[k];
  return s;
}

IntMat operator-(const IntMat& m) {
  IntMat s(m.rows, m.cols);
  for (size_t k = 0; k < m.a.size(); ++k) s.a[k] = -m.a[k];
  return s;
}

IntMat block_diag_mat(const IntMat& a, const IntMat& b) {
  IntMat s(a.rows + b.rows, a.cols + b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) s.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows; ++i)
    for (int j = 0; j < b.cols; ++j) s.at(a.rows + i, a.cols + j) = b.at(i, j);
  return s;
}

bool is_symmetric(const IntMat& m) {
  if (m.rows != m.cols) return false;
  for (int i = 0; i < m.rows; ++i)
    for (int j = i + 1; j < m.cols; ++j)
      if (m.at(i, j) != m.at(j, i)) return false;
  return true;
}

Int bareiss_det(IntMat m) {
  if (m.rows != m.cols) throw DimensionMismatch("determinant of non-square matrix");
  const int n = m.rows;
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) { p = i; break; }
      if (p < 0) return 0;
      for (int j = k; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

Int bilinear(const IntMat& m, const IntVec& x, const IntVec& y) {
  if (static_cast<int>(x.size()) != m.rows || static_cast<int>(y.size()) != m.cols)
    throw DimensionMismatch("bilinear form shape");
  Int s = 0;
  for (int i = 0; i < m.rows; ++i) {
    if (x[static_cast<size_t>(i)] == 0) continue;
    Int row = 0;
    for (int j = 0; j < m.cols; ++j) row += m.at(i, j) * y[static_cast<size_t>(j)];
    s += x[static_cast<size_t>(i)] * row;
  }
  return s;
}

Int bilinear_power(const IntMat& m, const IntVec& x, const IntVec& y) {
  if (m.rows != m.cols) throw DimensionMismatch("block power of non-square matrix");
  if (x.size() != y.size()) throw DimensionMismatch("block vectors of unequal length");
  const int n = m.rows;
  if (n == 0) {
    if (!x.empty()) throw DimensionMismatch("nonempty vector over empty matrix");
    return 0;
  }
  if (x.size() % static_cast<size_t>(n) != 0)
    throw DimensionMismatch("vector length not a multiple of the block size");
  Int s = 0;
  for (size_t off = 0; off < x.size(); off += static_cast<size_t>(n)) {
    IntVec xb(x.begin() + off, x.begin() + off + n);
    IntVec yb(y.begin() + off, y.begin() + off + n);
    s += bilinear(m, xb, yb);
  }
  return s;
}

namespace {

using RatVec = std::vector<Rat>;

struct RatGrid {
  int n;
  std::vector<Rat> a;
  explicit RatGrid(const IntMat& m) : n(m.rows), a(static_cast<size_t>(m.rows) * m.rows) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) at(i, j) = Rat(m.at(i, j));
  }
  Rat& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
};

// row_j -= c * row_i and the mirrored column operation, keeping s symmetric;
// basis tracks the row operations, so basis[j] S basis[j]^T stays the (j,j)
// entry of the transformed form.
void eliminate(RatGrid& s, std::vector<RatVec>& basis, int j, int i, const Rat& c) {
  if (c == 0) return;
  for (int k = 0; k < s.n; ++k) s.at(j, k) -= c * s.at(i, k);
  for (int k = 0; k < s.n; ++k) s.at(k, j) -= c * s.at(k, i);
  for (int k = 0; k < s.n; ++k) basis[static_cast<size_t>(j)][static_cast<size_t>(k)] -= c * basis[static_cast<size_t>(i)][static_cast<size_t>(k)];
}

}  // namespace

Congruence congruence_diagonalize(const IntMat& sym, int prefer_sign) {
  if (!is_symmetric(sym)) throw DimensionMismatch("congruence of a non-symmetric matrix");
  const int n = sym.rows;
  RatGrid s(sym);
  std::vector<RatVec> basis(static_cast<size_t>(n), RatVec(static_cast<size_t>(n), Rat(0)));
  for (int i = 0; i < n; ++i) basis[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
  std::vector<bool> done(static_cast<size_t>(n), false);

  Congruence out;
  for (;;) {
    int pick = -1;
    if (prefer_sign != 0)
      for (int i = 0; i < n && pick < 0; ++i)
        if (!done[static_cast<size_t>(i)] && sign_of(s.at(i, i)) == prefer_sign) pick = i;
    for (int i = 0; i < n && pick < 0; ++i)
      if (!done[static_cast<size_t>(i)] && s.at(i, i) != 0) pick = i;

    if (pick >= 0) {
      const Rat p = s.at(pick, pick);
      for (int j = 0; j < n; ++j)
        if (j != pick && !done[static_cast<size_t>(j)]) eliminate(s, basis, j, pick, s.at(j, pick) / p);
      out.pivots.push_back({p, basis[static_cast<size_t>(pick)]});
      done[static_cast<size_t>(pick)] = true;
      continue;
    }

    // Remaining diagonal is zero; look for an off-diagonal entry.
    int bi = -1, bj = -1;
    for (int i = 0; i < n && bi < 0; ++i) {
      if (done[static_cast<size_t>(i)]) continue;
      for (int j = i + 1; j < n && bi < 0; ++j)
        if (!done[static_cast<size_t>(j)] && s.at(i, j) != 0) { bi = i; bj = j; }
    }
    if (bi < 0) break;  // form is zero on the remaining subspace

    // Hyperbolic pair: clear every other row against it, then split it
    // into the two definite directions e_i + e_j and e_i - e_j.
    const Rat a = s.at(bi, bj);
    for (int k = 0; k < n; ++k) {
      if (k == bi || k == bj || done[static_cast<size_t>(k)]) continue;
      const Rat ci = s.at(k, bj) / a;
      const Rat cj = s.at(k, bi) / a;
      eliminate(s, basis, k, bi, ci);
      eliminate(s, basis, k, bj, cj);
    }
    RatVec u = basis[static_cast<size_t>(bi)], v = basis[static_cast<size_t>(bi)];
    for (int k = 0; k < n; ++k) {
      u[static_cast<size_t>(k)] += basis[static_cast<size_t>(bj)][static_cast<size_t>(k)];
      v[static_cast<size_t>(k)] -= basis[static_cast<size_t>(bj)][static_cast<size_t>(k)];
    }
    CongruencePivot pos{2 * a, u}, neg{-2 * a, v};
    if (a < 0) std::swap(pos, neg);
    if (prefer_sign < 0) {
      out.pivots.push_back(neg);
      out.pivots.push_back(pos);
    } else {
      out.pivots.push_back(pos);
      out.pivots.push_back(neg);
    }
    done[static_cast<size_t>(bi)] = done[static_cast<size_t>(bj)] = true;
  }

  for (int i = 0; i < n; ++i)
    if (!done[static_cast<size_t>(i)]) ++out.null_dim;
  return out;
}

int signature_form(const IntMat& sym) {
  const Congruence c = congruence_diagonalize(sym);
  if (c.null_dim > 0) throw DegenerateForm("symmetric form has a radical");
  int s = 0;
  for (const CongruencePivot& p : c.pivots) s += sign_of(p.value);
  return s;
}

}  // namespace knotform
