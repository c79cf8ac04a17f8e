#pragma once

// Dense integer matrices with exact linear algebra: fraction-free
// determinants (Bareiss) and congruence diagonalization of symmetric
// forms over the rationals. Signatures fall out of the latter by
// counting pivot signs, with no eigenvalue computation and no rounding.

#include <knotform/errors.hpp>
#include <knotform/numeric.hpp>

#include <vector>

namespace knotform {

struct IntMat {
  int rows = 0;
  int cols = 0;
  std::vector<Int> a;

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * static_cast<size_t>(c)) {}

  Int& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Int& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  bool operator==(const IntMat&) const = default;

  static IntMat identity(int n);
  static IntMat from_rows(const std::vector<IntVec>& rows);
};

IntMat transpose(const IntMat& m);
IntMat operator*(const IntMat& a, const IntMat& b);
IntMat operator+(const IntMat& a, const IntMat& b);
IntMat operator-(const IntMat& a, const IntMat& b);
IntMat operator-(const IntMat& m);
IntMat block_diag_mat(const IntMat& a, const IntMat& b);

bool is_symmetric(const IntMat& m);

// Determinant by fraction-free Gaussian elimination; the 0x0 determinant
// is 1 (empty product).
Int bareiss_det(IntMat m);

// x^T m y.
Int bilinear(const IntMat& m, const IntVec& x, const IntVec& y);

// x^T (m (+) ... (+) m) y where the block sum has len(x)/m.rows blocks.
// Both vectors must have the same length, a multiple of m.rows; the block
// sum itself is never materialized.
Int bilinear_power(const IntMat& m, const IntVec& x, const IntVec& y);

// One diagonal entry of a congruent diagonalization, together with the
// row vector expressing it in the original basis: value = vec S vec^T.
struct CongruencePivot {
  Rat value;
  std::vector<Rat> vec;
};

struct Congruence {
  std::vector<CongruencePivot> pivots;  // in elimination order, values nonzero
  int null_dim = 0;                     // dimension of the radical
};

// Diagonalize the symmetric form S by simultaneous row/column operations.
// prefer_sign, when nonzero, makes the elimination pick a diagonal entry
// of that sign first whenever one is available, so a definite direction of
// the requested sign surfaces as early (and as simply) as possible.
// A stage whose remaining diagonal vanishes identically but whose form is
// nonzero is resolved through a hyperbolic pair, contributing pivots of
// value +2a and -2a.
Congruence congruence_diagonalize(const IntMat& sym, int prefer_sign = 0);

// Signature of a nondegenerate symmetric form; throws DegenerateForm when
// the radical is nonzero.
int signature_form(const IntMat& sym);

}  // namespace knotform
