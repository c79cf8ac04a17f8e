#pragma once

// Seifert forms of positive braid closures. The canonical fiber surface
// of a positive braid word deformation-retracts onto a wedge of circles
// indexed by bricks: pairs of consecutive occurrences of the same
// generator. The Seifert matrix V records the linking of a brick cycle
// with the pushoff of another; over this basis it is integral, of even
// size c - s + 1 = 2g, and det(V - V^T) = 1.
//
// Linking rules over the brick basis (bricks ordered by column, then by
// start time; all times are positions in the word, 1-based):
//   V(b, b) = -1 for every brick.
//   Same column, sharing an occurrence: V(earlier, later) = 1, the other
//   side 0. Disjoint bricks of a column do not link.
//   Adjacent columns i and i + 1: bricks u (column i) and x (column
//   i + 1) link exactly when their time intervals interleave, and the
//   linking number sits on the left column's row: V(u, x) = 1 when
//   u.start < x.start < u.end < x.end, V(u, x) = -1 when
//   x.start < u.start < x.end < u.end, and V(x, u) = 0 either way.
//   Nested or disjoint intervals give 0 on both sides. The opposite
//   signs of the two interleave orders are forced: with equal signs the
//   symmetrized form picks up flat triangles and goes indefinite on
//   torus words, and the Alexander polynomial breaks against the Burau
//   route.
//   Columns at distance >= 2 never link.

#include <knotform/braid.hpp>
#include <knotform/laurent.hpp>
#include <knotform/matrix.hpp>

#include <vector>

namespace knotform {
namespace seifert {

struct Brick {
  int column = 0;      // generator index, 1-based
  int start_time = 0;  // earlier occurrence, 1-based position in the word
  int end_time = 0;    // next occurrence of the same generator

  bool operator==(const Brick&) const = default;
};

// A validated Seifert matrix: square, even size, det(V - V^T) = 1.
class SeifertMatrix {
 public:
  explicit SeifertMatrix(IntMat entries);

  const IntMat& entries() const { return m_; }
  int size() const { return m_.rows; }
  int genus() const { return m_.rows / 2; }

  bool operator==(const SeifertMatrix&) const = default;

 private:
  IntMat m_;
};

std::vector<Brick> brick_basis(const braid::BraidWord& w);

// Seifert matrix of the closure over the brick basis. Requires the
// closure to be a knot.
SeifertMatrix from_positive_braid(const braid::BraidWord& w);

// Alexander polynomial of the closure computed through the reduced Burau
// representation: det(burau(w) - I) divided by 1 + t + ... + t^(s-1),
// centered and normalized to value 1 at t = 1. Entirely independent of
// the brick matrix; used to cross-check it.
LaurentPolynomial burau_alexander(const braid::BraidWord& w);

// Seifert matrix of the mirror image, -V^T.
SeifertMatrix mirror(const SeifertMatrix& v);

// Form of a connected sum / split union: block diagonal sum.
SeifertMatrix block_sum(const SeifertMatrix& a, const SeifertMatrix& b);

// n-fold block sum of v with itself; n >= 1, else InvalidPower.
SeifertMatrix power(const SeifertMatrix& v, int n);

}  // namespace seifert
}  // namespace knotform
