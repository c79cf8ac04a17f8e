#pragma once

// Knot invariants read off a Seifert matrix V, all exact:
//   signature  = signature of the symmetrized form V + V^T,
//   Alexander  = det(tV - V^T) centered so p(t) = p(1/t) and p(1) = 1,
//   genus      = size(V) / 2 (the fiber genus for positive braids).
// The locally flat 4-genus obeys |signature|/2 <= g4 <= g; the two sides
// meet exactly when |signature| = 2 genus.

#include <knotform/laurent.hpp>
#include <knotform/matrix.hpp>
#include <knotform/seifert.hpp>

namespace knotform {
namespace invariants {

int signature(const seifert::SeifertMatrix& v);

LaurentPolynomial alexander(const seifert::SeifertMatrix& v);

// Same computation on raw entries, with the validation a SeifertMatrix
// would have enforced recreated as thrown InvalidSeifertMatrix; lets a
// certificate verifier probe a claimed form without trusting it.
LaurentPolynomial alexander_from_entries(const IntMat& v);

// Self-linking x^T V' x where V' is the block-sum power of V matching the
// length of x.
Int framing(const seifert::SeifertMatrix& v, const IntVec& x);

struct BoundReport {
  int genus = 0;
  int signature = 0;
  Rat lower_bound;  // |signature| / 2, a lower bound for the 4-genus
  bool equality = false;
};

BoundReport bound_report(const seifert::SeifertMatrix& v);

}  // namespace invariants
}  // namespace knotform
