#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <knotform/braid.hpp>

#include "support.hpp"

using namespace knotform::braid;

TEST_CASE("parsing and printing") {
  const BraidWord w = parse_braid_word("1 2 1 2");
  CHECK(w.strands == 3);
  CHECK(w.letters == std::vector<int>{1, 2, 1, 2});
  CHECK(print_braid_word(w) == "1 2 1 2");

  CHECK(parse_braid_word("  3   1\n2 ").letters == std::vector<int>{3, 1, 2});
  CHECK(parse_braid_word("1", 5).strands == 5);

  CHECK_THROWS_AS(parse_braid_word(""), knotform::EmptyWord);
  CHECK_THROWS_AS(parse_braid_word("   "), knotform::EmptyWord);
  CHECK_THROWS_AS(parse_braid_word("1 0 1"), knotform::NonPositiveLetter);
  CHECK_THROWS_AS(parse_braid_word("1 -2"), knotform::NonPositiveLetter);
  CHECK_THROWS_AS(parse_braid_word("1 x"), knotform::NonPositiveLetter);
  CHECK_THROWS_AS(parse_braid_word("2 2", 2), knotform::NonPositiveLetter);  // strand count too small
}

TEST_CASE("closure permutations") {
  CHECK(closure_permutation(parse_braid_word("1")).cycles == 1);        // unknot
  CHECK(closure_permutation(parse_braid_word("1 1")).cycles == 2);      // Hopf link
  CHECK(closure_permutation(parse_braid_word("1 1 1")).cycles == 1);    // trefoil
  CHECK(closure_permutation(parse_braid_word("1 2 1 2")).cycles == 1);  // torus knot on 3 strands
  CHECK(closure_permutation(parse_braid_word("1 1 2 2")).cycles == 3);

  CHECK(closure_is_knot(parse_braid_word("1 1 1")));
  CHECK_FALSE(closure_is_knot(parse_braid_word("1 1")));

  // a missing generator splits the closure
  CHECK_FALSE(closure_is_knot(parse_braid_word("1 1 1", 3)));
}

TEST_CASE("genus of fiber surfaces") {
  CHECK(positive_braid_genus(parse_braid_word("1")) == 0);
  CHECK(positive_braid_genus(parse_braid_word("1 1 1")) == 1);
  CHECK(positive_braid_genus(parse_braid_word("1 2 1 2")) == 1);
  CHECK(positive_braid_genus(parse_braid_word("1 2 1 2 1 2 1 2")) == 3);
  CHECK_THROWS_AS(positive_braid_genus(parse_braid_word("1 1")), knotform::NotAKnot);
}

TEST_CASE("rotation preserves the closure data") {
  testsupport::Rng rng(101);
  for (int trial = 0; trial < 100; ++trial) {
    const int s = testsupport::rand_int(rng, 2, 4);
    const int c = testsupport::rand_int(rng, s, 9);
    const BraidWord w = testsupport::random_knot_word(rng, s, c);
    const BraidWord r = rotated(w, testsupport::rand_int(rng, 0, c));
    CHECK(closure_permutation(r).cycles == 1);
    CHECK(positive_braid_genus(r) == positive_braid_genus(w));
  }
}

TEST_CASE("commuting swaps preserve the closure permutation") {
  testsupport::Rng rng(102);
  int used = 0;
  for (int trial = 0; trial < 300 && used < 100; ++trial) {
    const int s = testsupport::rand_int(rng, 3, 5);
    const int c = testsupport::rand_int(rng, s, 10);
    const BraidWord w = testsupport::random_knot_word(rng, s, c);
    for (int i = 0; i + 1 < c; ++i) {
      const int a = w.letters[static_cast<size_t>(i)], b = w.letters[static_cast<size_t>(i) + 1];
      if (a - b >= 2 || b - a >= 2) {
        BraidWord sw = w;
        std::swap(sw.letters[static_cast<size_t>(i)], sw.letters[static_cast<size_t>(i) + 1]);
        CHECK(closure_permutation(sw).image == closure_permutation(w).image);
        ++used;
        break;
      }
    }
  }
  CHECK(used >= 100);
}

TEST_CASE("knot closures have even first Betti number") {
  testsupport::Rng rng(103);
  for (int trial = 0; trial < 200; ++trial) {
    const int s = testsupport::rand_int(rng, 2, 5);
    const int c = testsupport::rand_int(rng, s, 10);
    const BraidWord w = testsupport::random_knot_word(rng, s, c);
    CHECK((w.length() - w.strands + 1) % 2 == 0);
  }
}
