#pragma once

// Positive braid words. A word on s strands is a sequence of generator
// indices in 1..s-1, each letter the positive crossing of strands i and
// i+1. The closure of a word is a knot exactly when the induced strand
// permutation is a single s-cycle; in that case the canonical fiber
// surface has first Betti number c - s + 1 = 2g with c the letter count.

#include <knotform/errors.hpp>

#include <string>
#include <vector>

namespace knotform {
namespace braid {

struct BraidWord {
  int strands = 2;
  std::vector<int> letters;  // values in 1..strands-1

  int length() const { return static_cast<int>(letters.size()); }
  bool operator==(const BraidWord&) const = default;
};

// Validates letters (positive, bounded by the strand count) and infers
// the strand count as max letter + 1 when strands = 0. An explicit strand
// count may exceed the inferred one (extra trivial strands) but never
// undercut it.
BraidWord make_braid_word(std::vector<int> letters, int strands = 0);

// Whitespace-separated generator indices, e.g. "1 2 1 2". Throws
// NonPositiveLetter on zero/negative/non-numeric tokens, EmptyWord when
// no token is present.
BraidWord parse_braid_word(const std::string& text, int strands = 0);

std::string print_braid_word(const BraidWord& w);

BraidWord rotated(const BraidWord& w, int k);  // cyclic rotation by k letters

// Permutation data of the closure: image[i] is the ending position of the
// strand entering at position i (0-based), and cycles its cycle count.
struct ClosurePermutation {
  std::vector<int> image;
  int cycles = 0;
};

ClosurePermutation closure_permutation(const BraidWord& w);

bool closure_is_knot(const BraidWord& w);

bool all_generators_occur(const BraidWord& w);

// Genus of the fiber surface of the closure, (c - s + 1) / 2. Throws
// NotAKnot when the closure has more than one component.
int positive_braid_genus(const BraidWord& w);

}  // namespace braid
}  // namespace knotform
