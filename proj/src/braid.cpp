#include <knotform/braid.hpp>

#include <algorithm>
#include <sstream>

namespace knotform {
namespace braid {

BraidWord make_braid_word(std::vector<int> letters, int strands) {
  if (letters.empty()) throw EmptyWord("braid word has no letters");
  int maxgen = 0;
  for (int l : letters) {
    if (l < 1) throw NonPositiveLetter("letter " + std::to_string(l) + " is not a positive generator index");
    maxgen = std::max(maxgen, l);
  }
  const int inferred = maxgen + 1;
  if (strands == 0) strands = inferred;
  if (strands < inferred)
    throw NonPositiveLetter("strand count " + std::to_string(strands) + " too small for generator " + std::to_string(maxgen));
  BraidWord w;
  w.strands = strands;
  w.letters = std::move(letters);
  return w;
}

BraidWord parse_braid_word(const std::string& text, int strands) {
  std::istringstream in(text);
  std::vector<int> letters;
  std::string tok;
  while (in >> tok) {
    size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw NonPositiveLetter("token '" + tok + "' is not a generator index");
    }
    if (pos != tok.size()) throw NonPositiveLetter("token '" + tok + "' is not a generator index");
    letters.push_back(v);
  }
  if (letters.empty()) throw EmptyWord("braid word has no letters");
  return make_braid_word(std::move(letters), strands);
}

std::string print_braid_word(const BraidWord& w) {
  std::ostringstream out;
  for (size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out << ' ';
    out << w.letters[i];
  }
  return out.str();
}

BraidWord rotated(const BraidWord& w, int k) {
  const int c = w.length();
  BraidWord r = w;
  if (c == 0) return r;
  k = ((k % c) + c) % c;
  std::rotate(r.letters.begin(), r.letters.begin() + k, r.letters.end());
  return r;
}

ClosurePermutation closure_permutation(const BraidWord& w) {
  const int s = w.strands;
  std::vector<int> at(static_cast<size_t>(s));  // at[p] = strand currently at position p
  for (int p = 0; p < s; ++p) at[static_cast<size_t>(p)] = p;
  for (int l : w.letters) std::swap(at[static_cast<size_t>(l - 1)], at[static_cast<size_t>(l)]);

  ClosurePermutation out;
  out.image.assign(static_cast<size_t>(s), 0);
  for (int p = 0; p < s; ++p) out.image[static_cast<size_t>(at[static_cast<size_t>(p)])] = p;

  std::vector<bool> seen(static_cast<size_t>(s), false);
  for (int i = 0; i < s; ++i) {
    if (seen[static_cast<size_t>(i)]) continue;
    ++out.cycles;
    for (int j = i; !seen[static_cast<size_t>(j)]; j = out.image[static_cast<size_t>(j)]) seen[static_cast<size_t>(j)] = true;
  }
  return out;
}

bool closure_is_knot(const BraidWord& w) { return closure_permutation(w).cycles == 1; }

bool all_generators_occur(const BraidWord& w) {
  std::vector<bool> hit(static_cast<size_t>(w.strands), false);
  for (int l : w.letters) hit[static_cast<size_t>(l)] = true;
  for (int g = 1; g < w.strands; ++g)
    if (!hit[static_cast<size_t>(g)]) return false;
  return true;
}

int positive_braid_genus(const BraidWord& w) {
  if (!closure_is_knot(w)) throw NotAKnot("closure of '" + print_braid_word(w) + "' is not a knot");
  return (w.length() - w.strands + 1) / 2;
}

}  // namespace braid
}  // namespace knotform
