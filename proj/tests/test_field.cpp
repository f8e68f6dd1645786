#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "repscheme/errors.hpp"
#include "repscheme/field.hpp"
#include "repscheme/matrix.hpp"
#include "test_support.hpp"

using namespace repscheme;

TEST_CASE("adjoin_sqrt detects perfect squares over Q") {
  auto q = FieldTower::rationals();
  auto r = adjoin_sqrt(q, FieldElement(Rational(4)));
  CHECK_FALSE(r.extended);
  CHECK(r.tower->height() == 0);
  CHECK(r.root == FieldElement(Rational(2)));

  auto r2 = adjoin_sqrt(q, FieldElement(rational(9, 4)));
  CHECK_FALSE(r2.extended);
  CHECK(r2.root == FieldElement(rational(3, 2)));
}

TEST_CASE("adjoin_sqrt extends by a genuine radical once") {
  auto q = FieldTower::rationals();
  auto s2 = adjoin_sqrt(q, FieldElement(Rational(2)));
  CHECK(s2.extended);
  CHECK(s2.tower->height() == 1);
  CHECK(s2.root * s2.root == FieldElement(Rational(2), s2.tower));

  // idempotent on an already-present radical
  auto again = adjoin_sqrt(s2.tower, FieldElement(Rational(2), s2.tower));
  CHECK_FALSE(again.extended);
  CHECK(again.tower->height() == 1);
  CHECK(again.root == s2.root);
}

TEST_CASE("squares that only exist upstairs are found") {
  auto q = FieldTower::rationals();
  auto s2 = adjoin_sqrt(q, FieldElement(Rational(2)));
  // 3 + 2*sqrt(2) = (1 + sqrt(2))^2
  FieldElement x = FieldElement(Rational(3), s2.tower) + FieldElement(Rational(2)) * s2.root;
  auto root = sqrt_in_tower(x);
  REQUIRE(root.has_value());
  CHECK(*root * *root == x);

  // 8 is a square in Q(sqrt 2): (2 sqrt2)^2
  auto eight = adjoin_sqrt(s2.tower, FieldElement(Rational(8), s2.tower));
  CHECK_FALSE(eight.extended);
  CHECK(eight.root == FieldElement(Rational(2)) * s2.root);

  CHECK_FALSE(sqrt_in_tower(FieldElement(Rational(3), s2.tower)).has_value());
}

TEST_CASE("adjoining i = sqrt(-1) works like any radical") {
  auto q = FieldTower::rationals();
  auto im = adjoin_sqrt(q, FieldElement(Rational(-1)));
  CHECK(im.extended);
  CHECK(im.root * im.root == FieldElement(Rational(-1), im.tower));
  // -4 = (2i)^2
  auto m4 = adjoin_sqrt(im.tower, FieldElement(Rational(-4), im.tower));
  CHECK_FALSE(m4.extended);
  CHECK(m4.root == FieldElement(Rational(2)) * im.root);
}

TEST_CASE("field axioms on random elements of Q(sqrt2, i)") {
  auto t1 = adjoin_sqrt(FieldTower::rationals(), FieldElement(Rational(2))).tower;
  auto t = adjoin_sqrt(t1, FieldElement(Rational(-1), t1)).tower;
  auto gen = testing::rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    FieldElement a = testing::random_element(gen, t);
    FieldElement b = testing::random_element(gen, t);
    FieldElement c = testing::random_element(gen, t);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    if (!a.is_zero()) {
      CHECK(a * a.inverse() == FieldElement(Rational(1), t));
    }
  }
}

TEST_CASE("element text format round-trips") {
  auto t1 = adjoin_sqrt(FieldTower::rationals(), FieldElement(Rational(2))).tower;
  auto t = adjoin_sqrt(t1, FieldElement(Rational(-1), t1)).tower;
  auto gen = testing::rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    FieldElement a = testing::random_element(gen, t);
    CHECK(parse_field_element(a.to_string(), t) == a);
  }
  CHECK(FieldElement().to_string() == "0");
  CHECK(parse_field_element("-1/3 + 3/2*r1*r2", t).to_string() == "-1/3 + 3/2*r1*r2");
}

TEST_CASE("tower headers round-trip") {
  auto t1 = adjoin_sqrt(FieldTower::rationals(), FieldElement(Rational(2))).tower;
  auto t2 = adjoin_sqrt(t1, FieldElement(Rational(-1), t1)).tower;
  // sqrt(1 + sqrt 2) needs a nested radicand
  FieldElement nested = FieldElement(Rational(1), t2) + FieldElement::radical(t2, 0);
  auto t3 = adjoin_sqrt(t2, nested).tower;
  REQUIRE(t3->height() == 3);
  auto lines = tower_header(t3);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "radical r1 = sqrt(2)");
  CHECK(lines[1] == "radical r2 = sqrt(-1)");
  CHECK(lines[2] == "radical r3 = sqrt(1 + r1)");
  auto parsed = parse_tower_header(lines);
  CHECK(parsed->height() == 3);
  CHECK(parsed->is_prefix_of(*t3));
  CHECK(t3->is_prefix_of(*parsed));
}

TEST_CASE("adjoin_sqrt rejects zero") {
  CHECK_THROWS_AS(adjoin_sqrt(FieldTower::rationals(), FieldElement()), ValidationError);
}

TEST_CASE("kernel of simple 3x3 matrices") {
  ExactMatrix zero(3, 3);
  CHECK(kernel(zero).dimension == 3);

  CHECK(kernel(ExactMatrix::identity(3)).dimension == 0);

  // all-ones matrix: rank 1, kernel dim 2 (hand elimination)
  ExactMatrix ones = ExactMatrix::from_rationals(3, 3, std::vector<Rational>(9, Rational(1)));
  auto k = kernel(ones);
  CHECK(k.rank == 1);
  CHECK(k.dimension == 2);
  for (const auto& v : k.basis) {
    auto img = matvec(ones, v);
    for (const auto& e : img) CHECK(e.is_zero());
  }
}

TEST_CASE("rank-nullity and exact kernels over Q(sqrt2)") {
  auto t = adjoin_sqrt(FieldTower::rationals(), FieldElement(Rational(2))).tower;
  auto gen = testing::rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    int rows = 2 + static_cast<int>(gen() % 3);
    int cols = 2 + static_cast<int>(gen() % 3);
    ExactMatrix m = testing::random_matrix(gen, t, rows, cols);
    auto k = kernel(m);
    CHECK(k.rank + k.dimension == cols);
    for (const auto& v : k.basis) {
      auto img = matvec(m, v);
      for (const auto& e : img) CHECK(e.is_zero());
    }
  }
}

TEST_CASE("singular structured matrix over a tower has exact kernel") {
  auto t = adjoin_sqrt(FieldTower::rationals(), FieldElement(Rational(2))).tower;
  FieldElement s = FieldElement::radical(t, 0);
  // rows: (1, s, 0), (s, 2, 0), (0, 0, 1); row2 = s * row1 => kernel dim 1
  ExactMatrix m(3, 3, t);
  m.at(0, 0) = FieldElement(Rational(1), t);
  m.at(0, 1) = s;
  m.at(1, 0) = s;
  m.at(1, 1) = FieldElement(Rational(2), t);
  m.at(2, 2) = FieldElement(Rational(1), t);
  auto k = kernel(m);
  CHECK(k.rank == 2);
  CHECK(k.dimension == 1);
  auto img = matvec(m, k.basis[0]);
  for (const auto& e : img) CHECK(e.is_zero());
}
