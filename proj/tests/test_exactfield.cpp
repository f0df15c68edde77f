#include <random>

#include "doctest.h"
#include "qj/exactfield.hpp"

using namespace qj;

namespace {

FieldElem random_elem(const TowerPtr& tower, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  std::vector<Rational> coords;
  for (int i = 0; i < tower->dim(); ++i) coords.emplace_back(num(rng), den(rng));
  return FieldElem::from_coords(tower, std::move(coords));
}

}  // namespace

TEST_CASE("rational arithmetic stays reduced") {
  Rational r(BigInt(6), BigInt(-4));
  CHECK(r.num() == -3);
  CHECK(r.den() == 2);
  CHECK((r + Rational(1, 2)) == Rational(-1));
  CHECK((Rational(2, 3) * Rational(3, 2)).is_one());
  CHECK(Rational(4, 9).is_square());
  CHECK(!Rational(-4).is_square());
  CHECK(!Rational(8).is_square());
  CHECK(Rational(1, 2).inverse() == Rational(2));
  CHECK_THROWS_AS((void)(Rational(1) / Rational(0)), DivisionByZero);
}

TEST_CASE("tower construction accepts the paper fields and rejects squares") {
  CHECK(TowerSpec::make(std::vector<Rational>{Rational(5)})->dim() == 2);
  CHECK(TowerSpec::make(std::vector<Rational>{Rational(-7), Rational(5)})->dim() == 4);
  CHECK(TowerSpec::make(std::vector<Rational>{Rational(-1), Rational(5)})->dim() == 4);
  CHECK_THROWS_AS(TowerSpec::make(std::vector<Rational>{Rational(4)}), RadicandIsSquare);
  CHECK_THROWS_AS(TowerSpec::make(std::vector<Rational>{Rational(9, 4)}), RadicandIsSquare);
  CHECK_THROWS_AS(TowerSpec::make(std::vector<Rational>{Rational(2), Rational(3), Rational(5)}),
                  TowerTooDeep);

  // 6 + 2*sqrt(5) = (1 + sqrt(5))^2 is a square at level 1.
  TowerPtr q5 = TowerSpec::make(std::vector<Rational>{Rational(5)});
  FieldElem s = FieldElem::from_coords(q5, {Rational(6), Rational(2)});
  std::vector<FieldElem> rads = {FieldElem::of(TowerSpec::rationals(), Rational(5)), s};
  CHECK_THROWS_AS(TowerSpec::make(rads), RadicandIsSquare);

  // 5 is a square in Q(sqrt(5)) even though it is not one in Q.
  std::vector<FieldElem> rads5 = {FieldElem::of(TowerSpec::rationals(), Rational(5)),
                                  FieldElem::of(q5, Rational(5))};
  CHECK_THROWS_AS(TowerSpec::make(rads5), RadicandIsSquare);
}

TEST_CASE("difference of squares and radical products") {
  TowerPtr q5 = TowerSpec::make(std::vector<Rational>{Rational(5)});
  FieldElem one = FieldElem::one(q5);
  FieldElem r5 = FieldElem::radical(q5, 0);
  CHECK((one + r5) * (one - r5) == FieldElem::of(q5, Rational(-4)));

  TowerPtr t = TowerSpec::make(std::vector<Rational>{Rational(-7), Rational(5)});
  FieldElem m7 = FieldElem::radical(t, 0);
  FieldElem s5 = FieldElem::radical(t, 1);
  FieldElem prod = m7 * s5;  // the basis element sqrt(-7)*sqrt(5)
  CHECK(prod.coord(3).is_one());
  CHECK(prod.coord(0).is_zero());
  CHECK(prod * prod == FieldElem::of(t, Rational(-35)));

  TowerPtr qi = TowerSpec::make(std::vector<Rational>{Rational(-1)});
  FieldElem i = FieldElem::radical(qi, 0);
  CHECK(i * i == FieldElem::of(qi, Rational(-1)));
}

TEST_CASE("exact inverses") {
  TowerPtr q5 = TowerSpec::make(std::vector<Rational>{Rational(5)});
  CHECK(FieldElem::of(q5, Rational(2)).inverse() == FieldElem::of(q5, Rational(1, 2)));

  FieldElem x = FieldElem::one(q5) + FieldElem::radical(q5, 0);  // 1 + sqrt(5)
  FieldElem expect = FieldElem::from_coords(q5, {Rational(-1, 4), Rational(1, 4)});
  CHECK(x.inverse() == expect);
  CHECK(x * x.inverse() == FieldElem::one(q5));

  TowerPtr t = TowerSpec::make(std::vector<Rational>{Rational(-7), Rational(5)});
  FieldElem z = FieldElem::radical(t, 0) * FieldElem::radical(t, 1) - FieldElem::one(t);
  CHECK(z * z.inverse() == FieldElem::one(t));
  CHECK_THROWS_AS(FieldElem::zero(t).inverse(), DivisionByZero);
}

TEST_CASE("random inverses and galois homomorphism over both two-level towers") {
  std::mt19937_64 rng(0x5eed);
  for (auto rads : {std::vector<Rational>{Rational(-7), Rational(5)},
                    std::vector<Rational>{Rational(-1), Rational(5)}}) {
    TowerPtr t = TowerSpec::make(rads);
    for (int trial = 0; trial < 40; ++trial) {
      FieldElem x = random_elem(t, rng);
      FieldElem y = random_elem(t, rng);
      if (!x.is_zero()) CHECK(x * x.inverse() == FieldElem::one(t));
      for (int level = 0; level < 2; ++level) {
        CHECK(x.galois_conj(level).galois_conj(level) == x);
        CHECK((x * y).galois_conj(level) == x.galois_conj(level) * y.galois_conj(level));
        CHECK((x + y).galois_conj(level) == x.galois_conj(level) + y.galois_conj(level));
      }
      // Norm at the top level lands in the fixed subfield.
      FieldElem norm = x * x.galois_conj(1);
      CHECK(norm.coord(2).is_zero());
      CHECK(norm.coord(3).is_zero());
    }
  }
}

TEST_CASE("galois conjugation fixes the complementary radical") {
  TowerPtr t = TowerSpec::make(std::vector<Rational>{Rational(-7), Rational(5)});
  FieldElem m7 = FieldElem::radical(t, 0);
  FieldElem s5 = FieldElem::radical(t, 1);
  CHECK((m7 * s5).galois_conj(0) == -(m7 * s5));
  CHECK(s5.galois_conj(0) == s5);
  CHECK(m7.galois_conj(1) == m7);
  CHECK_THROWS_AS(s5.galois_conj(2), LevelOutOfRange);

  TowerPtr q5 = TowerSpec::make(std::vector<Rational>{Rational(5)});
  FieldElem a = FieldElem::from_coords(q5, {Rational(3), Rational(2)});  // 3 + 2 sqrt(5)
  CHECK(a.galois_conj(0) == FieldElem::from_coords(q5, {Rational(3), Rational(-2)}));
}

TEST_CASE("two-squares witnesses") {
  TowerPtr qi = TowerSpec::make(std::vector<Rational>{Rational(-1)});
  CHECK(verify_two_squares_witness(FieldElem::radical(qi, 0), FieldElem::zero(qi)));
  CHECK(!verify_two_squares_witness(FieldElem::one(qi), FieldElem::zero(qi)));

  TowerPtr t = TowerSpec::make(std::vector<Rational>{Rational(-7), Rational(5)});
  FieldElem m7 = FieldElem::radical(t, 0);
  FieldElem s5 = FieldElem::radical(t, 1);
  FieldElem denom = m7 * s5 - FieldElem::one(t);  // -1 + sqrt(-35)
  FieldElem x = (m7 + s5) * denom.inverse();
  FieldElem y = FieldElem::of(t, Rational(6)) * denom.inverse();
  CHECK(verify_two_squares_witness(x, y));
}

TEST_CASE("element parser handles the witness expression") {
  TowerPtr t = TowerSpec::make(std::vector<Rational>{Rational(-7), Rational(5)});
  FieldElem x = parse_element("(sqrt(-7)+sqrt(5))/(-1+sqrt(-7)*sqrt(5))", t);
  FieldElem y = parse_element("6/(-1+sqrt(-7)*sqrt(5))", t);
  CHECK(verify_two_squares_witness(x, y));
  CHECK(parse_element("1/2", t) == FieldElem::of(t, Rational(1, 2)));
  CHECK(parse_element("sqrt(5)*sqrt(5)", t) == FieldElem::of(t, Rational(5)));
  CHECK(parse_element("-3+2*sqrt(-7)", t) ==
        FieldElem::from_coords(t, {Rational(-3), Rational(2), Rational(0), Rational(0)}));
  CHECK_THROWS_AS(parse_element("sqrt(3)", t), ParseError);
  CHECK_THROWS_AS(parse_element("1+", t), ParseError);
  CHECK_THROWS_AS(parse_element("1/0", t), ParseError);
}

TEST_CASE("coordinates stay reduced after arithmetic") {
  TowerPtr q5 = TowerSpec::make(std::vector<Rational>{Rational(5)});
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    FieldElem x = random_elem(q5, rng);
    FieldElem y = random_elem(q5, rng);
    for (const FieldElem* e : {&x, &y}) {
      FieldElem combined = *e * *e + *e - *e;
      for (const Rational& c : combined.coords()) {
        CHECK(c.den() > 0);
        CHECK(boost::multiprecision::gcd(boost::multiprecision::abs(c.num()), c.den()) == 1);
      }
    }
  }
}
