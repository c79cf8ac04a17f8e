#include <knotform/census.hpp>

#include <knotform/seifert.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace knotform {
namespace census {

braid::BraidWord torus_braid(int p, int q) {
  if (p < 2 || q < 2) throw Error("torus parameters must be at least 2");
  if (std::gcd(p, q) != 1) throw NotCoprime("torus parameters " + std::to_string(p) + ", " + std::to_string(q) + " share a factor");
  std::vector<int> letters;
  letters.reserve(static_cast<size_t>(p - 1) * static_cast<size_t>(q));
  for (int rep = 0; rep < q; ++rep)
    for (int i = 1; i < p; ++i) letters.push_back(i);
  return braid::make_braid_word(std::move(letters), p);
}

namespace {

// No cyclic rotation and no single swap of adjacent commuting letters may
// lower the word lexicographically.
bool is_canonical(const std::vector<int>& w) {
  const size_t c = w.size();
  for (size_t k = 1; k < c; ++k) {
    for (size_t i = 0; i < c; ++i) {
      const int a = w[(i + k) % c];
      const int b = w[i];
      if (a != b) {
        if (a < b) return false;  // rotation by k is smaller
        break;
      }
    }
  }
  for (size_t i = 0; i + 1 < c; ++i)
    if (w[i] - w[i + 1] >= 2) return false;  // descending commuting pair
  return true;
}

void enumerate_for_strands(int s, int c_max, const std::function<void(const braid::BraidWord&)>& emit) {
  // Lexicographic depth-first generation of words over generators 1..s-1.
  for (int c = s; c <= c_max; ++c) {
    std::vector<int> w(static_cast<size_t>(c), 1);
    for (;;) {
      if (is_canonical(w)) {
        braid::BraidWord bw;
        bw.strands = s;
        bw.letters = w;
        if (braid::closure_is_knot(bw)) emit(bw);
      }
      int pos = c - 1;
      while (pos >= 0 && w[static_cast<size_t>(pos)] == s - 1) {
        w[static_cast<size_t>(pos)] = 1;
        --pos;
      }
      if (pos < 0) break;
      ++w[static_cast<size_t>(pos)];
    }
  }
}

}  // namespace

void enumerate_positive_knot_words(int s_max, int c_max,
                                   const std::function<void(const braid::BraidWord&)>& emit) {
  if (s_max < 2) throw Error("strand bound must be at least 2");
  for (int s = 2; s <= s_max; ++s) enumerate_for_strands(s, c_max, emit);
}

std::vector<braid::BraidWord> enumerate_positive_knot_words(int s_max, int c_max) {
  std::vector<braid::BraidWord> out;
  enumerate_positive_knot_words(s_max, c_max, [&out](const braid::BraidWord& w) { out.push_back(w); });
  return out;
}

namespace {

std::string poly_key(const LaurentPolynomial& p) { return p.str(); }

}  // namespace

ScanReport classification_scan(int s_max, int c_max) {
  if (s_max < 2 || c_max < 1) throw Error("scan bounds must satisfy s_max >= 2, c_max >= 1");

  ScanReport rep;
  rep.s_max = s_max;
  rep.c_max = c_max;

  // Torus references in the same budget, keyed by (genus, Alexander).
  // q < p duplicates (same knot with the roles of the parameters swapped)
  // collapse onto the first key.
  std::map<std::pair<int, std::string>, std::pair<int, int>> references;
  for (int p = 2; p <= s_max; ++p) {
    for (int q = 2; (p - 1) * q <= c_max; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const braid::BraidWord w = torus_braid(p, q);
      const seifert::SeifertMatrix v = seifert::from_positive_braid(w);
      const auto key = std::make_pair(v.genus(), poly_key(invariants::alexander(v)));
      const auto norm = std::minmax(p, q);
      const std::pair<int, int> label{norm.first, norm.second};
      auto it = references.find(key);
      if (it == references.end() || label < it->second) references[key] = label;
    }
  }

  const auto allowed = [](const std::pair<int, int>& pq) {
    return pq.first == 2 || (pq.first == 3 && (pq.second == 4 || pq.second == 5));
  };

  enumerate_positive_knot_words(s_max, c_max, [&](const braid::BraidWord& w) {
    const seifert::SeifertMatrix v = seifert::from_positive_braid(w);
    const invariants::BoundReport b = invariants::bound_report(v);
    CensusRecord rec;
    rec.word = w;
    rec.genus = b.genus;
    rec.signature = b.signature;
    rec.alexander = invariants::alexander(v);
    rec.equality = b.equality;
    const auto it = references.find(std::make_pair(rec.genus, poly_key(rec.alexander)));
    if (it != references.end()) rec.torus_match = it->second;
    if (rec.equality) {
      ++rep.equality_count;
      if (!rec.torus_match) {
        rep.violations.push_back("word '" + braid::print_braid_word(w) +
                                 "' has |signature| = 2 genus but matches no torus knot in range");
      } else if (!allowed(*rec.torus_match)) {
        rep.violations.push_back("word '" + braid::print_braid_word(w) + "' matches T(" +
                                 std::to_string(rec.torus_match->first) + ", " +
                                 std::to_string(rec.torus_match->second) +
                                 "), outside the expected family");
      }
    }
    rep.records.push_back(std::move(rec));
  });

  rep.verdict_pass = rep.violations.empty();
  return rep;
}

}  // namespace census
}  // namespace knotform
