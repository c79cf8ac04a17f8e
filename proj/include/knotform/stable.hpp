#pragma once

// Stabilized Seifert forms and the constructive genus-defect certificate.
//
// A framed class lives in a block-sum power V^(N) = V (+) ... (+) V of a
// Seifert matrix: a primitive integer vector together with its
// self-linking x^T V^(N) x. Adding a disjoint unit-framing class in a
// fresh block shifts the framing by +/-1 without disturbing anything
// else, so every framing on the far side of a unit class is reachable
// (one fresh block per unit step).
//
// Given a class a of framing +1 and any negative class, the torus
// construction produces, in some power N, a pair (a, d) of framing-0
// classes whose mutual linking matrix is [[0, e], [0, 0]] with e = +/-1:
// the Seifert form of an annulus spanning a torus. Such a pair caps the
// stabilized surface and yields the bound g4 <= genus - 1/N on the
// average (stable) 4-genus, strictly below the fiber genus. The
// certificate records the pair and is checkable without rerunning the
// construction.

#include <knotform/invariants.hpp>
#include <knotform/matrix.hpp>
#include <knotform/seifert.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace knotform {
namespace stable {

struct FramedClass {
  int power = 1;  // vec lives in V^(power)
  IntVec vec;
  Int framing;

  bool operator==(const FramedClass&) const = default;
};

// Validates the length (power * size), primitivity, and caches the
// framing.
FramedClass make_framed_class(const seifert::SeifertMatrix& v, int power, IntVec vec);

// A primitive class whose framing has the requested sign, found by
// congruence diagonalization of V + V^T with pivots of that sign
// preferred; when a diagonal entry of V + V^T already has the sign, the
// result is the corresponding standard basis vector. Throws DefiniteForm
// when no direction of that sign exists.
FramedClass find_signed_class(const seifert::SeifertMatrix& v, int sign);

// Append copies of a unit-framing class in fresh blocks until the framing
// of base reaches target. The unit must have framing +/-1
// (NotUnitFraming) and its sign must point from base's framing toward the
// target (UnreachableFraming). |target - framing(base)| copies are used.
FramedClass realize_framing(const seifert::SeifertMatrix& v, const FramedClass& base,
                            const FramedClass& unit, const Int& target);

// The algebraic dual of a primitive class a in a single block: the
// shortest integer vector d with a^T (V - V^T) d = 1, minimizing in order
// the sup norm, the l1 norm, and lexicographic comparison. Exists because
// V - V^T is unimodular, so the row a^T (V - V^T) is primitive.
IntVec dual_class(const seifert::SeifertMatrix& v, const FramedClass& a);

struct TranscriptStep {
  std::string kind;  // picked-dual | framing-correction | base-change | mirror-reflection
  std::map<std::string, std::string> data;

  bool operator==(const TranscriptStep&) const = default;
};

struct SliceCertificate {
  int n_power = 1;     // the power N of V in which the pair lives
  IntVec a, d;         // framing-0 classes of length size(V) * N
  IntMat final_form;   // 2x2 linking matrix [[V(a,a), V(a,d)], [V(d,a), V(d,d)]]
  Rat genus_bound;     // genus - 1/N
  bool realizability_attested = false;
  std::vector<TranscriptStep> transcript;

  bool operator==(const SliceCertificate&) const = default;
};

// The torus construction. Requires framing(a) = +1 (NotUnitFraming), a
// and helper in the base block (power 1), framing(helper) < 0. Returns a
// certificate whose pair verifies against v with final form
// [[0, 1], [0, 0]].
SliceCertificate build_torus_pair(const seifert::SeifertMatrix& v, const FramedClass& a,
                                  const FramedClass& helper_negative);

struct VerifyCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  bool ok() const;
};

// Recomputes every claim of the certificate against v: dimensions,
// primitivity, zero framings, unimodular one-sided linking, the stored
// final form, its shape, triviality of its Alexander polynomial, and the
// value of the genus bound. Never trusts the transcript; never throws on
// tampered data (failures become failed checks).
VerifyReport verify_certificate(const seifert::SeifertMatrix& v, const SliceCertificate& cert);

struct Dichotomy {
  bool equality = false;  // |signature| = 2 genus: the bound is tight
  invariants::BoundReport report;
  std::optional<SliceCertificate> certificate;  // present iff not equality
};

// The decision procedure: either the signature bound is tight, or (given
// an attested unit-framing annulus witness in the fiber surface) a
// verified certificate drives the stable 4-genus strictly below the fiber
// genus. A witness of framing -1 is handled by running the construction
// on the mirror form -V^T and reflecting the certificate back, which
// flips the final form to [[0, -1], [0, 0]].
Dichotomy decide_dichotomy(const seifert::SeifertMatrix& v, bool annulus_attested,
                           const FramedClass& witness);

}  // namespace stable
}  // namespace knotform
