#pragma once

// Exhaustive scan of positive braid knots in a strand/letter budget,
// testing the classification of those whose signature bound is tight
// (|signature| = 2 genus) against the torus knots in range.
//
// Words are enumerated up to the moves that do not change the closure as
// an embedded fiber surface: cyclic rotation and swapping adjacent
// commuting letters (|i - j| >= 2). A word is emitted only when no single
// such move lowers it lexicographically; every orbit's lexicographic
// minimum survives, so no closure is missed (orbits may still contribute
// more than one local minimum, which only repeats a row).

#include <knotform/braid.hpp>
#include <knotform/invariants.hpp>
#include <knotform/laurent.hpp>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace knotform {
namespace census {

// The standard positive braid of the (p, q) torus knot:
// (sigma_1 ... sigma_{p-1})^q on p strands. Requires p, q >= 2 coprime.
braid::BraidWord torus_braid(int p, int q);

// All canonical positive words with 2 <= strands <= s_max, all generators
// occurring, strands <= letters <= c_max, and knot closure, in
// deterministic order (strands, then length, then lexicographic).
void enumerate_positive_knot_words(int s_max, int c_max,
                                   const std::function<void(const braid::BraidWord&)>& emit);
std::vector<braid::BraidWord> enumerate_positive_knot_words(int s_max, int c_max);

struct CensusRecord {
  braid::BraidWord word;
  int genus = 0;
  int signature = 0;
  LaurentPolynomial alexander;
  bool equality = false;                       // |signature| = 2 genus
  std::optional<std::pair<int, int>> torus_match;  // (p, q) with matching genus and polynomial
  std::string certificate_path;                // filled by callers that write certificates
};

struct ScanReport {
  int s_max = 0;
  int c_max = 0;
  std::vector<CensusRecord> records;
  int equality_count = 0;
  bool verdict_pass = false;  // every equality record matches an expected torus knot
  std::vector<std::string> violations;
};

// Scan the full range and compare every record with tight signature bound
// against the torus knots representable in the same budget. The expected
// family is T(2, odd), T(3, 4) and T(3, 5): the verdict fails if a tight
// record matches no torus knot in range, or only ones outside that family.
ScanReport classification_scan(int s_max, int c_max);

}  // namespace census
}  // namespace knotform
