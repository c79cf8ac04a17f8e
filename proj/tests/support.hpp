#pragma once

// Shared test fixtures and independent oracles. The oracles deliberately
// use different algorithms from the library: cofactor expansion instead
// of interpolation for determinants, leading-principal-minor signs
// instead of congruence for signatures. Agreement between the two routes
// on random inputs is the backbone of the suite.

#include <knotform/braid.hpp>
#include <knotform/laurent.hpp>
#include <knotform/matrix.hpp>
#include <knotform/seifert.hpp>

#include <optional>
#include <random>
#include <vector>

namespace testsupport {

using knotform::Int;
using knotform::IntMat;
using knotform::IntVec;
using knotform::LaurentPolynomial;
using Rng = std::mt19937_64;

using LauGrid = std::vector<std::vector<LaurentPolynomial>>;

// Determinant by cofactor expansion along the first row.
inline LaurentPolynomial cofactor_det(const LauGrid& m) {
  const size_t n = m.size();
  if (n == 0) return LaurentPolynomial::one();
  if (n == 1) return m[0][0];
  LaurentPolynomial det;
  for (size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    LauGrid minor(n - 1, std::vector<LaurentPolynomial>(n - 1));
    for (size_t i = 1; i < n; ++i)
      for (size_t k = 0, c = 0; k < n; ++k) {
        if (k == j) continue;
        minor[i - 1][c++] = m[i][k];
      }
    const LaurentPolynomial term = m[0][j] * cofactor_det(minor);
    if (j % 2 == 0) det += term;
    else det -= term;
  }
  return det;
}

inline LaurentPolynomial cofactor_det_int(const IntMat& m) {
  LauGrid g(static_cast<size_t>(m.rows), std::vector<LaurentPolynomial>(static_cast<size_t>(m.cols)));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) g[static_cast<size_t>(i)][static_cast<size_t>(j)] = LaurentPolynomial(m.at(i, j));
  return cofactor_det(g);
}

// det(tV - V^T) by cofactor expansion, normalized locally: an oracle for
// the Alexander polynomial that shares no code with the library routine.
inline LaurentPolynomial alexander_oracle(const IntMat& v) {
  const size_t n = static_cast<size_t>(v.rows);
  if (n == 0) return LaurentPolynomial::one();
  LauGrid g(n, std::vector<LaurentPolynomial>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      g[i][j] = LaurentPolynomial::monomial(v.at(static_cast<int>(i), static_cast<int>(j)), 1);
      g[i][j] -= LaurentPolynomial(v.at(static_cast<int>(j), static_cast<int>(i)));
    }
  LaurentPolynomial p = cofactor_det(g);
  const long mid = (p.min_exp() + p.max_exp()) / 2;
  p = p.shifted(-mid);
  if (p.eval_one() < 0) p = -p;
  return p;
}

// Signature from the signs of leading principal minors (valid only when
// all of them are nonzero): the count of sign changes in the sequence
// 1, D_1, ..., D_n is the negative index.
inline std::optional<int> minor_signature(const IntMat& s) {
  const int n = s.rows;
  Int prev = 1;
  int changes = 0;
  for (int k = 1; k <= n; ++k) {
    IntMat lead(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) lead.at(i, j) = s.at(i, j);
    const Int d = knotform::bareiss_det(std::move(lead));
    if (d == 0) return std::nullopt;
    if ((d < 0) != (prev < 0)) ++changes;
    prev = d;
  }
  return n - 2 * changes;
}

inline IntMat trefoil_matrix() {
  IntMat v(2, 2);
  v.at(0, 0) = -1; v.at(0, 1) = 1;
  v.at(1, 0) = 0;  v.at(1, 1) = -1;
  return v;
}

inline IntMat annulus_matrix() {  // positive Hopf band pair: genus 1, unknotted
  IntMat v(2, 2);
  v.at(0, 1) = 1;
  return v;
}

inline int rand_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Random congruence V -> P V P^T with P a product of elementary
// unimodular moves; preserves det(V - V^T) and the closure invariants.
inline IntMat unimodular_conjugate(Rng& rng, IntMat v, int moves = 6) {
  const int n = v.rows;
  if (n < 2) return v;
  for (int m = 0; m < moves; ++m) {
    const int kind = rand_int(rng, 0, 2);
    int i = rand_int(rng, 0, n - 1);
    int j = rand_int(rng, 0, n - 2);
    if (j >= i) ++j;
    if (kind == 0) {
      const Int c = rand_int(rng, 1, 2) * (rand_int(rng, 0, 1) ? 1 : -1);
      for (int k = 0; k < n; ++k) v.at(i, k) += c * v.at(j, k);
      for (int k = 0; k < n; ++k) v.at(k, i) += c * v.at(k, j);
    } else if (kind == 1) {
      for (int k = 0; k < n; ++k) std::swap(v.at(i, k), v.at(j, k));
      for (int k = 0; k < n; ++k) std::swap(v.at(k, i), v.at(k, j));
    } else {
      for (int k = 0; k < n; ++k) v.at(i, k) = -v.at(i, k);
      for (int k = 0; k < n; ++k) v.at(k, i) = -v.at(k, i);
    }
  }
  return v;
}

// A random valid Seifert matrix: a block sum of small seed forms, scrambled
// by a random unimodular congruence. Size at most 2 * max_blocks.
inline knotform::seifert::SeifertMatrix random_seifert(Rng& rng, int max_blocks = 3) {
  using knotform::seifert::SeifertMatrix;
  std::vector<IntMat> seeds;
  seeds.push_back(trefoil_matrix());
  seeds.push_back(annulus_matrix());
  seeds.push_back(-transpose(trefoil_matrix()));
  IntMat acc = seeds[static_cast<size_t>(rand_int(rng, 0, 2))];
  const int blocks = rand_int(rng, 1, max_blocks);
  for (int b = 1; b < blocks; ++b)
    acc = knotform::block_diag_mat(acc, seeds[static_cast<size_t>(rand_int(rng, 0, 2))]);
  return SeifertMatrix(unimodular_conjugate(rng, acc, 2 * acc.rows));
}

// Random positive braid word whose closure is a knot. The letter count is
// bumped by one when its parity admits no knot closure (the first Betti
// number letters - strands + 1 must be even).
inline knotform::braid::BraidWord random_knot_word(Rng& rng, int strands, int letters) {
  if ((letters - strands + 1) % 2 != 0) ++letters;
  for (;;) {
    std::vector<int> w(static_cast<size_t>(letters));
    for (int& l : w) l = rand_int(rng, 1, strands - 1);
    knotform::braid::BraidWord bw;
    bw.strands = strands;
    bw.letters = std::move(w);
    if (knotform::braid::all_generators_occur(bw) && knotform::braid::closure_is_knot(bw)) return bw;
  }
}

}  // namespace testsupport
