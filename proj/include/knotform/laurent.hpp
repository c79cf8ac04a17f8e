#pragma once

// Laurent polynomials in one variable t with integer coefficients,
// stored sparsely as exponent -> coefficient. Exponents may be negative;
// this is the natural home of Alexander polynomials, which are centered
// so that p(t) = p(1/t).

#include <knotform/errors.hpp>
#include <knotform/numeric.hpp>

#include <map>
#include <string>

namespace knotform {

class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;  // zero
  explicit LaurentPolynomial(Int constant);

  static LaurentPolynomial one();
  static LaurentPolynomial monomial(Int coeff, long exp);

  bool is_zero() const { return c_.empty(); }
  long min_exp() const;  // requires nonzero
  long max_exp() const;  // requires nonzero
  long span() const { return max_exp() - min_exp(); }
  Int coeff(long exp) const;
  const std::map<long, Int>& terms() const { return c_; }

  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  LaurentPolynomial& operator*=(const LaurentPolynomial& o);

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  LaurentPolynomial operator-() const;

  bool operator==(const LaurentPolynomial& o) const { return c_ == o.c_; }

  LaurentPolynomial shifted(long k) const;     // multiply by t^k
  LaurentPolynomial reciprocal() const;        // substitute t -> 1/t
  bool palindromic() const { return *this == reciprocal(); }

  Int eval_one() const;           // value at t = 1
  Rat eval(const Rat& t) const;   // t must be nonzero when negative exponents occur

  // Rendered with descending exponents, e.g. "t^3 - t + 2 - t^-2".
  std::string str() const;

 private:
  std::map<long, Int> c_;
  void add_term(long exp, const Int& v);
};

// Quotient of an exact division; throws Error if the division leaves a
// remainder or a fractional coefficient.
LaurentPolynomial divide_exact(const LaurentPolynomial& num, const LaurentPolynomial& den);

// 1 + t + ... + t^(n-1), the multiplicity correction between a braid
// determinant and the invariant of its closure.
LaurentPolynomial geometric_sum(int n);

// Shift the support so it is centered at exponent 0 (the midpoint must be
// integral), then fix the overall sign so the value at t = 1 is +1 (it
// must be +/-1 beforehand). This is the normal form of an Alexander
// polynomial; violations throw Error.
LaurentPolynomial center_symmetric_unit(LaurentPolynomial p);

}  // namespace knotform
