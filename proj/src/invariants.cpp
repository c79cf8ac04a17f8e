#include <knotform/invariants.hpp>

namespace knotform {
namespace invariants {

int signature(const seifert::SeifertMatrix& v) {
  return signature_form(v.entries() + transpose(v.entries()));
}

namespace {

// det(tV - V^T) as a polynomial in t, by evaluation at n+1 integers and
// Lagrange interpolation; every determinant is an exact integer via
// fraction-free elimination, and the interpolated coefficients must come
// out integral.
LaurentPolynomial char_form_determinant(const IntMat& v) {
  const int n = v.rows;
  const IntMat vt = transpose(v);
  std::vector<Int> xs, ys;
  Int x = 0;
  for (int k = 0; k <= n; ++k) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = x * v.at(i, j) - vt.at(i, j);
    xs.push_back(x);
    ys.push_back(bareiss_det(std::move(m)));
    x = x > 0 ? Int(-x) : Int(-x + 1);  // 0, 1, -1, 2, -2, ...
  }

  // Lagrange: base(t) = prod (t - x_i); each basis polynomial is base
  // divided synthetically by (t - x_i), scaled by y_i / base_i(x_i).
  std::vector<Rat> acc(static_cast<size_t>(n) + 1, Rat(0));
  std::vector<Rat> base(static_cast<size_t>(n) + 2, Rat(0));
  base[0] = 1;
  int deg = 0;
  for (int i = 0; i <= n; ++i) {
    for (int d = deg; d >= 0; --d) {
      base[static_cast<size_t>(d) + 1] += base[static_cast<size_t>(d)];
      base[static_cast<size_t>(d)] *= -Rat(xs[static_cast<size_t>(i)]);
    }
    ++deg;
  }
  for (int i = 0; i <= n; ++i) {
    if (ys[static_cast<size_t>(i)] == 0) continue;
    // synthetic division of base by (t - x_i)
    std::vector<Rat> q(static_cast<size_t>(n) + 1, Rat(0));
    Rat carry(0);
    for (int d = n + 1; d >= 1; --d) {
      q[static_cast<size_t>(d) - 1] = base[static_cast<size_t>(d)] + carry;
      carry = q[static_cast<size_t>(d) - 1] * Rat(xs[static_cast<size_t>(i)]);
    }
    Rat at_xi(0);
    for (int d = n; d >= 0; --d) at_xi = at_xi * Rat(xs[static_cast<size_t>(i)]) + q[static_cast<size_t>(d)];
    const Rat scale = Rat(ys[static_cast<size_t>(i)]) / at_xi;
    for (int d = 0; d <= n; ++d) acc[static_cast<size_t>(d)] += q[static_cast<size_t>(d)] * scale;
  }

  LaurentPolynomial p;
  for (int d = 0; d <= n; ++d) {
    const Rat& c = acc[static_cast<size_t>(d)];
    if (c == 0) continue;
    if (boost::multiprecision::denominator(c) != 1)
      throw Error("interpolated determinant coefficient is not integral");
    p += LaurentPolynomial::monomial(boost::multiprecision::numerator(c), d);
  }
  return p;
}

}  // namespace

LaurentPolynomial alexander_from_entries(const IntMat& v) {
  if (v.rows != v.cols) throw InvalidSeifertMatrix("matrix is not square");
  if (v.rows % 2 != 0) throw InvalidSeifertMatrix("matrix size is odd");
  if (v.rows == 0) return LaurentPolynomial::one();
  const LaurentPolynomial p = char_form_determinant(v);
  if (p.is_zero()) throw InvalidSeifertMatrix("det(tV - V^T) vanishes identically");
  LaurentPolynomial q;
  try {
    q = center_symmetric_unit(p);
  } catch (const Error& e) {
    throw InvalidSeifertMatrix(e.what());
  }
  if (!q.palindromic()) throw InvalidSeifertMatrix("polynomial is not symmetric under t -> 1/t");
  return q;
}

LaurentPolynomial alexander(const seifert::SeifertMatrix& v) {
  return alexander_from_entries(v.entries());
}

Int framing(const seifert::SeifertMatrix& v, const IntVec& x) {
  return bilinear_power(v.entries(), x, x);
}

BoundReport bound_report(const seifert::SeifertMatrix& v) {
  BoundReport r;
  r.genus = v.genus();
  r.signature = v.size() == 0 ? 0 : signature(v);
  r.lower_bound = Rat(r.signature < 0 ? -r.signature : r.signature, 2);
  r.equality = (r.lower_bound == r.genus);
  return r;
}

}  // namespace invariants
}  // namespace knotform
