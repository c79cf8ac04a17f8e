#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <knotform/census.hpp>
#include <knotform/invariants.hpp>
#include <knotform/seifert.hpp>

#include "support.hpp"

using namespace knotform;
using namespace knotform::seifert;
using knotform::braid::parse_braid_word;

namespace {

IntMat mat(std::vector<std::vector<long long>> rows) {
  const int n = static_cast<int>(rows.size());
  IntMat m(n, static_cast<int>(rows.empty() ? 0 : rows[0].size()));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
  return m;
}

}  // namespace

TEST_CASE("brick bases") {
  const auto trefoil = brick_basis(parse_braid_word("1 1 1"));
  REQUIRE(trefoil.size() == 2);
  CHECK(trefoil[0] == Brick{1, 1, 2});
  CHECK(trefoil[1] == Brick{1, 2, 3});

  const auto pair = brick_basis(parse_braid_word("1 2 1 2"));
  REQUIRE(pair.size() == 2);
  CHECK(pair[0] == Brick{1, 1, 3});
  CHECK(pair[1] == Brick{2, 2, 4});

  CHECK(brick_basis(parse_braid_word("1")).empty());
}

TEST_CASE("matrix construction validates") {
  CHECK_NOTHROW(SeifertMatrix(testsupport::trefoil_matrix()));
  CHECK_NOTHROW(SeifertMatrix(IntMat(0, 0)));
  CHECK_THROWS_AS(SeifertMatrix(IntMat(2, 3)), InvalidSeifertMatrix);
  CHECK_THROWS_AS(SeifertMatrix(IntMat::identity(3)), InvalidSeifertMatrix);
  CHECK_THROWS_AS(SeifertMatrix(IntMat::identity(2)), InvalidSeifertMatrix);  // det(V - V^T) = 0
  CHECK_THROWS_AS(SeifertMatrix(mat({{0, 2}, {0, 0}})), InvalidSeifertMatrix);  // det = 4
}

TEST_CASE("seifert matrices of small closures") {
  CHECK(from_positive_braid(parse_braid_word("1 1 1")).entries() ==
        mat({{-1, 1}, {0, -1}}));

  CHECK(from_positive_braid(parse_braid_word("1 1 1 1 1")).entries() ==
        mat({{-1, 1, 0, 0}, {0, -1, 1, 0}, {0, 0, -1, 1}, {0, 0, 0, -1}}));

  CHECK(from_positive_braid(parse_braid_word("1")).size() == 0);  // unknot

  // two-column word: bricks (1;1,3) and (2;2,4) interleave
  CHECK(from_positive_braid(parse_braid_word("1 2 1 2")).entries() ==
        mat({{-1, 1}, {0, -1}}));

  // torus word on three strands: column-1 bricks (1,3) (3,5) (5,7) against
  // column-2 bricks (2,4) (4,6) (6,8); each column-1 brick interleaves the
  // neighbour that starts after it (+1) and the one that starts before (-1)
  CHECK(from_positive_braid(parse_braid_word("1 2 1 2 1 2 1 2")).entries() ==
        mat({{-1, 1, 0, 1, 0, 0},
             {0, -1, 1, -1, 1, 0},
             {0, 0, -1, 0, -1, 1},
             {0, 0, 0, -1, 1, 0},
             {0, 0, 0, 0, -1, 1},
             {0, 0, 0, 0, 0, -1}}));

  CHECK_THROWS_AS(from_positive_braid(parse_braid_word("1 1")), NotAKnot);
}

TEST_CASE("mirror, block sum, power") {
  const SeifertMatrix t = from_positive_braid(parse_braid_word("1 1 1"));
  CHECK(mirror(t).entries() == mat({{1, 0}, {-1, 1}}));
  CHECK(mirror(mirror(t)) == t);

  const SeifertMatrix s = block_sum(t, mirror(t));
  CHECK(s.size() == 4);
  CHECK(s.genus() == 2);
  CHECK(power(t, 3).size() == 6);
  CHECK(power(t, 1) == t);
  CHECK_THROWS_AS(power(t, 0), InvalidPower);
  CHECK_THROWS_AS(power(t, -2), InvalidPower);

  testsupport::Rng rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const SeifertMatrix v = testsupport::random_seifert(rng);
    CHECK(mirror(mirror(v)) == v);
  }
}

TEST_CASE("burau route on known closures") {
  const LaurentPolynomial trefoil = LaurentPolynomial::monomial(Int(1), 1) +
                                    LaurentPolynomial::monomial(Int(-1), 0) +
                                    LaurentPolynomial::monomial(Int(1), -1);
  CHECK(burau_alexander(parse_braid_word("1 1 1")) == trefoil);
  CHECK(burau_alexander(parse_braid_word("1")) == LaurentPolynomial::one());
  CHECK(burau_alexander(parse_braid_word("1 2")) == LaurentPolynomial::one());  // unknot on 3 strands

  // t^2 - t + 1 - t^-1 + t^-2
  LaurentPolynomial cinq;
  for (long e = -2; e <= 2; ++e) cinq += LaurentPolynomial::monomial(Int(e % 2 ? -1 : 1), e);
  CHECK(burau_alexander(parse_braid_word("1 1 1 1 1")) == cinq);

  // t^3 - t^2 + 1 - t^-2 + t^-3
  const LaurentPolynomial t34 = LaurentPolynomial::monomial(Int(1), 3) +
                                LaurentPolynomial::monomial(Int(-1), 2) +
                                LaurentPolynomial::monomial(Int(1), 0) +
                                LaurentPolynomial::monomial(Int(-1), -2) +
                                LaurentPolynomial::monomial(Int(1), -3);
  CHECK(burau_alexander(parse_braid_word("1 2 1 2 1 2 1 2")) == t34);

  CHECK_THROWS_AS(burau_alexander(parse_braid_word("1 1")), NotAKnot);
}

TEST_CASE("brick matrices and the burau route agree on every census word") {
  int words = 0;
  census::enumerate_positive_knot_words(4, 10, [&](const braid::BraidWord& w) {
    const SeifertMatrix v = from_positive_braid(w);
    CHECK(v.size() == 2 * braid::positive_braid_genus(w));
    const LaurentPolynomial from_form = invariants::alexander(v);
    const LaurentPolynomial from_burau = burau_alexander(w);
    if (from_form != from_burau) {
      CAPTURE(braid::print_braid_word(w));
      CHECK(from_form == from_burau);
    }
    ++words;
  });
  CHECK(words == 772);
}
