#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <knotform/census.hpp>
#include <knotform/invariants.hpp>
#include <knotform/seifert.hpp>
#include <knotform/serial.hpp>

#include <algorithm>
#include <set>

#include "support.hpp"

using namespace knotform;
using namespace knotform::census;
using knotform::braid::BraidWord;
using knotform::braid::parse_braid_word;
using knotform::braid::print_braid_word;

TEST_CASE("torus braids") {
  CHECK(torus_braid(2, 3) == parse_braid_word("1 1 1"));
  CHECK(torus_braid(2, 7) == parse_braid_word("1 1 1 1 1 1 1"));
  CHECK(torus_braid(3, 4) == parse_braid_word("1 2 1 2 1 2 1 2"));
  CHECK(torus_braid(4, 3) == parse_braid_word("1 2 3 1 2 3 1 2 3"));

  // the two presentations close to the same knot
  const auto v34 = seifert::from_positive_braid(torus_braid(3, 4));
  const auto v43 = seifert::from_positive_braid(torus_braid(4, 3));
  CHECK(v34.genus() == v43.genus());
  CHECK(invariants::alexander(v34) == invariants::alexander(v43));
  CHECK(invariants::signature(v34) == invariants::signature(v43));

  CHECK_THROWS_AS(torus_braid(2, 4), NotCoprime);
  CHECK_THROWS_AS(torus_braid(3, 6), NotCoprime);
  CHECK_THROWS_AS(torus_braid(1, 5), Error);
  CHECK_THROWS_AS(torus_braid(2, 1), Error);
}

TEST_CASE("enumeration in a small budget") {
  const auto words = enumerate_positive_knot_words(2, 5);
  REQUIRE(words.size() == 2);
  CHECK(words[0] == parse_braid_word("1 1 1"));
  CHECK(words[1] == parse_braid_word("1 1 1 1 1"));

  CHECK(enumerate_positive_knot_words(2, 2).empty());
  CHECK_THROWS_AS(enumerate_positive_knot_words(1, 5), Error);
}

TEST_CASE("enumeration emits canonical knot words deterministically") {
  const auto words = enumerate_positive_knot_words(3, 8);
  CHECK(words.size() == 36);  // frozen size of this budget

  std::set<std::string> seen;
  for (const BraidWord& w : words) {
    CHECK(w.strands <= 3);
    CHECK(w.length() >= w.strands);
    CHECK(w.length() <= 8);
    CHECK(braid::all_generators_occur(w));
    CHECK(braid::closure_is_knot(w));
    CHECK(seen.insert(print_braid_word(w) + "@" + std::to_string(w.strands)).second);

    // no rotation of an emitted word is lexicographically smaller
    for (int k = 1; k < w.length(); ++k) {
      const BraidWord r = braid::rotated(w, k);
      CHECK_FALSE(std::lexicographical_compare(r.letters.begin(), r.letters.end(),
                                               w.letters.begin(), w.letters.end()));
    }
  }

  const auto t34 = torus_braid(3, 4);
  CHECK(std::find(words.begin(), words.end(), t34) != words.end());

  CHECK(enumerate_positive_knot_words(3, 8) == words);
}

TEST_CASE("two strand scan finds exactly the odd torus knots") {
  const ScanReport rep = classification_scan(2, 9);
  REQUIRE(rep.records.size() == 4);
  CHECK(rep.equality_count == 4);
  CHECK(rep.verdict_pass);
  CHECK(rep.violations.empty());

  const std::vector<std::pair<int, int>> expected = {{2, 3}, {2, 5}, {2, 7}, {2, 9}};
  for (size_t i = 0; i < 4; ++i) {
    const CensusRecord& r = rep.records[i];
    CHECK(r.equality);
    REQUIRE(r.torus_match.has_value());
    CHECK(*r.torus_match == expected[i]);
    CHECK(r.genus == static_cast<int>(i) + 1);
    CHECK(r.signature == -2 * (static_cast<int>(i) + 1));
  }
}

TEST_CASE("three strand scan flags the composite tight closures") {
  const ScanReport rep = classification_scan(3, 10);
  CHECK_FALSE(rep.verdict_pass);
  REQUIRE_FALSE(rep.violations.empty());

  // the square-of-trefoil word is tight but is no torus knot
  bool granny_flagged = false;
  for (const std::string& v : rep.violations) {
    CHECK(v.find("matches no torus knot") != std::string::npos);
    if (v.find("1 1 1 2 2 2") != std::string::npos) granny_flagged = true;
  }
  CHECK(granny_flagged);

  const auto granny = std::find_if(rep.records.begin(), rep.records.end(), [](const CensusRecord& r) {
    return r.word == parse_braid_word("1 1 1 2 2 2");
  });
  REQUIRE(granny != rep.records.end());
  CHECK(granny->equality);
  CHECK_FALSE(granny->torus_match.has_value());
  CHECK(granny->genus == 2);
  CHECK(granny->signature == -4);
  const LaurentPolynomial trefoil = LaurentPolynomial::monomial(Int(1), 1) +
                                    LaurentPolynomial::monomial(Int(-1), 0) +
                                    LaurentPolynomial::monomial(Int(1), -1);
  CHECK(granny->alexander == trefoil * trefoil);

  const auto t34 = std::find_if(rep.records.begin(), rep.records.end(), [](const CensusRecord& r) {
    return r.word == torus_braid(3, 4);
  });
  REQUIRE(t34 != rep.records.end());
  CHECK(t34->equality);
  REQUIRE(t34->torus_match.has_value());
  CHECK(*t34->torus_match == std::make_pair(3, 4));

  // every tight record either matches an expected torus knot or is flagged
  int flagged = 0;
  for (const CensusRecord& r : rep.records) {
    if (!r.equality) continue;
    if (r.torus_match) {
      const auto [p, q] = *r.torus_match;
      CHECK((p == 2 || (p == 3 && (q == 4 || q == 5))));
    } else {
      ++flagged;
    }
  }
  CHECK(flagged == static_cast<int>(rep.violations.size()));
}

TEST_CASE("degenerate scan budgets") {
  const ScanReport rep = classification_scan(2, 1);
  CHECK(rep.records.empty());
  CHECK(rep.equality_count == 0);
  CHECK(rep.verdict_pass);
  CHECK_THROWS_AS(classification_scan(1, 5), Error);
  CHECK_THROWS_AS(classification_scan(2, 0), Error);
}

TEST_CASE("csv rendering is exact and deterministic") {
  const ScanReport rep = classification_scan(2, 7);
  const std::string csv = serial::census_to_csv(rep);
  const std::string expected =
      "word,strands,letters,genus,signature,lower_bound,equality,alexander,torus_match,"
      "certificate_path\n"
      "\"1 1 1\",2,3,1,-2,1,yes,\"t - 1 + t^-1\",\"T(2,3)\",\"\"\n"
      "\"1 1 1 1 1\",2,5,2,-4,2,yes,\"t^2 - t + 1 - t^-1 + t^-2\",\"T(2,5)\",\"\"\n"
      "\"1 1 1 1 1 1 1\",2,7,3,-6,3,yes,\"t^3 - t^2 + t - 1 + t^-1 - t^-2 + t^-3\",\"T(2,7)\","
      "\"\"\n";
  CHECK(csv == expected);

  CHECK(serial::census_to_csv(classification_scan(2, 7)) == csv);
  CHECK(serial::census_to_csv(classification_scan(3, 9)) ==
        serial::census_to_csv(classification_scan(3, 9)));
}
