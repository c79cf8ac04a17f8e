#include <knotform/laurent.hpp>

#include <sstream>
#include <vector>

namespace knotform {

LaurentPolynomial::LaurentPolynomial(Int constant) {
  if (constant != 0) c_[0] = std::move(constant);
}

LaurentPolynomial LaurentPolynomial::one() { return LaurentPolynomial(Int(1)); }

LaurentPolynomial LaurentPolynomial::monomial(Int coeff, long exp) {
  LaurentPolynomial p;
  if (coeff != 0) p.c_[exp] = std::move(coeff);
  return p;
}

long LaurentPolynomial::min_exp() const {
  if (c_.empty()) throw Error("min_exp of zero polynomial");
  return c_.begin()->first;
}

long LaurentPolynomial::max_exp() const {
  if (c_.empty()) throw Error("max_exp of zero polynomial");
  return c_.rbegin()->first;
}

Int LaurentPolynomial::coeff(long exp) const {
  auto it = c_.find(exp);
  return it == c_.end() ? Int(0) : it->second;
}

void LaurentPolynomial::add_term(long exp, const Int& v) {
  if (v == 0) return;
  Int& slot = c_[exp];
  slot += v;
  if (slot == 0) c_.erase(exp);
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  for (const auto& [e, v] : o.c_) add_term(e, v);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  for (const auto& [e, v] : o.c_) add_term(e, -v);
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial out;
  for (const auto& [ea, va] : a.c_)
    for (const auto& [eb, vb] : b.c_) out.add_term(ea + eb, va * vb);
  return out;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& o) {
  *this = *this * o;
  return *this;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial out;
  for (const auto& [e, v] : c_) out.c_[e] = -v;
  return out;
}

LaurentPolynomial LaurentPolynomial::shifted(long k) const {
  LaurentPolynomial out;
  for (const auto& [e, v] : c_) out.c_[e + k] = v;
  return out;
}

LaurentPolynomial LaurentPolynomial::reciprocal() const {
  LaurentPolynomial out;
  for (const auto& [e, v] : c_) out.c_[-e] = v;
  return out;
}

Int LaurentPolynomial::eval_one() const {
  Int s = 0;
  for (const auto& [e, v] : c_) s += v;
  return s;
}

static Rat rat_pow(const Rat& t, long e) {
  if (e == 0) return Rat(1);
  Rat base = e > 0 ? t : Rat(1) / t;
  long n = e > 0 ? e : -e;
  Rat acc(1);
  while (n > 0) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

Rat LaurentPolynomial::eval(const Rat& t) const {
  if (t == 0 && !c_.empty() && min_exp() < 0) throw Error("evaluating a pole at t = 0");
  Rat s(0);
  for (const auto& [e, v] : c_) s += Rat(v) * rat_pow(t, e);
  return s;
}

std::string LaurentPolynomial::str() const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    const long e = it->first;
    const Int& v = it->second;
    if (first) {
      if (v < 0) out << "-";
      first = false;
    } else {
      out << (v < 0 ? " - " : " + ");
    }
    Int a = boost::multiprecision::abs(v);
    if (a != 1 || e == 0) out << a.str();
    if (e != 0) {
      if (a != 1) out << "*";
      out << "t";
      if (e != 1) out << "^" << e;
    }
  }
  return out.str();
}

LaurentPolynomial divide_exact(const LaurentPolynomial& num, const LaurentPolynomial& den) {
  if (den.is_zero()) throw Error("division by zero polynomial");
  if (num.is_zero()) return LaurentPolynomial();

  // Shift both to ordinary polynomials, divide, shift back.
  const long ns = num.min_exp(), ds = den.min_exp();
  const long ndeg = num.max_exp() - ns, ddeg = den.max_exp() - ds;
  if (ndeg < ddeg) throw Error("inexact polynomial division");

  std::vector<Int> r(static_cast<size_t>(ndeg) + 1), d(static_cast<size_t>(ddeg) + 1);
  for (const auto& [e, v] : num.terms()) r[static_cast<size_t>(e - ns)] = v;
  for (const auto& [e, v] : den.terms()) d[static_cast<size_t>(e - ds)] = v;

  const Int& lead = d[static_cast<size_t>(ddeg)];
  std::vector<Int> q(static_cast<size_t>(ndeg - ddeg) + 1);
  for (long k = ndeg - ddeg; k >= 0; --k) {
    Int top = r[static_cast<size_t>(k + ddeg)];
    if (top % lead != 0) throw Error("inexact polynomial division");
    Int qk = top / lead;
    q[static_cast<size_t>(k)] = qk;
    if (qk == 0) continue;
    for (long j = 0; j <= ddeg; ++j) r[static_cast<size_t>(k + j)] -= qk * d[static_cast<size_t>(j)];
  }
  for (const Int& rest : r)
    if (rest != 0) throw Error("inexact polynomial division");

  LaurentPolynomial out;
  for (long k = 0; k <= ndeg - ddeg; ++k)
    out += LaurentPolynomial::monomial(q[static_cast<size_t>(k)], k + ns - ds);
  return out;
}

LaurentPolynomial geometric_sum(int n) {
  LaurentPolynomial out;
  for (int k = 0; k < n; ++k) out += LaurentPolynomial::monomial(Int(1), k);
  return out;
}

LaurentPolynomial center_symmetric_unit(LaurentPolynomial p) {
  if (p.is_zero()) throw Error("zero polynomial has no unit normalization");
  const long lo = p.min_exp(), hi = p.max_exp();
  if ((lo + hi) % 2 != 0) throw Error("support midpoint is not integral");
  p = p.shifted(-(lo + hi) / 2);
  const Int at_one = p.eval_one();
  if (at_one == -1) p = -p;
  else if (at_one != 1) throw Error("value at t = 1 is not a unit");
  return p;
}

}  // namespace knotform
