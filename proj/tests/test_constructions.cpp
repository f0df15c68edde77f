#include "doctest.h"
#include "qj/constructions.hpp"
#include "qj/permgroup.hpp"

using namespace qj;

namespace {

TowerPtr tower_qi_sqrt5() {
  return TowerSpec::make(std::vector<Rational>{Rational(-1), Rational(5)});
}

A5Witness witness_qi() {
  TowerPtr t = tower_qi_sqrt5();
  return A5Witness::make(t, 1, FieldElem::radical(t, 1), FieldElem::radical(t, 0),
                         FieldElem::zero(t), FieldElem::zero(t), FieldElem::zero(t));
}

A5Witness witness_q7() {
  TowerPtr t = TowerSpec::make(std::vector<Rational>{Rational(-7), Rational(5)});
  FieldElem x = parse_element("(sqrt(-7)+sqrt(5))/(-1+sqrt(-7)*sqrt(5))", t);
  FieldElem y = parse_element("6/(-1+sqrt(-7)*sqrt(5))", t);
  return witness_from_two_squares(t, 1, FieldElem::radical(t, 1), x, y);
}

}  // namespace

TEST_CASE("witness validation rejects broken data") {
  TowerPtr t = tower_qi_sqrt5();
  FieldElem i = FieldElem::radical(t, 0);
  FieldElem zero = FieldElem::zero(t);
  FieldElem one = FieldElem::one(t);
  CHECK_THROWS_AS(A5Witness::make(t, 1, FieldElem::radical(t, 0), i, zero, zero, zero),
                  WitnessInvalid);  // sqrt5 wrong
  CHECK_THROWS_AS(A5Witness::make(t, 1, FieldElem::radical(t, 1), one, zero, zero, zero),
                  WitnessInvalid);  // 1^2 + 0^2 != -1
  CHECK_THROWS_AS(
      A5Witness::make(t, 1, FieldElem::radical(t, 1), FieldElem::radical(t, 1), zero, zero, zero),
      WitnessInvalid);  // coefficient contains sqrt(r)
}

TEST_CASE("raw lift scalars of the displayed relations") {
  auto w = witness_qi();
  auto [a_raw, c_raw] = a5_raw_matrices(w);
  TowerPtr t = w.tower;

  Mat2 a2 = a_raw.mul(a_raw);
  CHECK(a2.is_scalar());
  CHECK(a2.e[0] == FieldElem::of(t, Rational(-1)));

  Mat2 c5 = c_raw.mul(c_raw).mul(c_raw).mul(c_raw).mul(c_raw);
  CHECK(c5.is_scalar());
  // -2560*sqrt(5) + 5632
  FieldElem expect5 =
      FieldElem::of(t, Rational(5632)) - FieldElem::of(t, Rational(2560)) * FieldElem::radical(t, 1);
  CHECK(c5.e[0] == expect5);

  Mat2 ca = c_raw.mul(a_raw);
  Mat2 ca3 = ca.mul(ca).mul(ca);
  CHECK(ca3.is_scalar());
  FieldElem expect3 =
      FieldElem::of(t, Rational(128)) - FieldElem::of(t, Rational(64)) * FieldElem::radical(t, 1);
  CHECK(ca3.e[0] == expect3);
}

TEST_CASE("a5 matrix group over Q(i, sqrt5)") {
  GroupPtr g = a5_matrix_group(witness_qi());
  CHECK(g->order() == 60);
  CHECK(recognize(*g).kind == Recognition::Kind::A5);
  CHECK(jordan_constant(*g).constant == 60);
}

TEST_CASE("a5 matrix group from the Q(sqrt-7) witness") {
  auto w = witness_q7();
  // The derived coefficients are the stored fixture values.
  TowerPtr t = w.tower;
  CHECK(w.a == parse_element("-sqrt(-7)/6", t));
  CHECK(w.b == parse_element("1/6", t));
  CHECK(w.c == parse_element("-1/6", t));
  CHECK(w.d == parse_element("-sqrt(-7)/6", t));

  GroupPtr g = a5_matrix_group(w);
  CHECK(g->order() == 60);
  CHECK(recognize(*g).kind == Recognition::Kind::A5);
}

TEST_CASE("twisted S5 over Q(i, sqrt5)") {
  GroupPtr g = s5_twisted_group(witness_qi());
  CHECK(g->order() == 120);
  CHECK(center(*g).size() == 1);
  CHECK(recognize(*g).kind == Recognition::Kind::S5);
  CHECK(jordan_constant(*g).constant == 120);

  // (R,1) has order 2 inside the closure.
  auto w = witness_qi();
  ProjMatrix r = ProjMatrix::from(s5_r_matrix(w));
  int r_idx = g->index_of(twisted_key({r, 1}));
  REQUIRE(r_idx >= 0);
  CHECK(g->element_order(r_idx) == 2);

  // Flag-0 elements form the index-2 normal A5 generated by (A,0),(C,0).
  std::vector<int> flag0;
  for (int i = 0; i < g->order(); ++i)
    if (g->key(i)[0] == '0') flag0.push_back(i);
  CHECK(flag0.size() == 60);
  CHECK(is_normal(*g, flag0));
  auto [a, c] = a5_matrices(w);
  std::vector<int> gens = {g->index_of(twisted_key({a, 0})), g->index_of(twisted_key({c, 0}))};
  CHECK(subgroup_closure(*g, gens) == flag0);
  GroupPtr sub = subgroup_group(*g, flag0);
  CHECK(recognize(*sub).kind == Recognition::Kind::A5);
}

TEST_CASE("twisted context laws hold exhaustively on the order-120 construction") {
  GroupPtr g = s5_twisted_group(witness_qi());
  const auto& ctx = g->ctx();
  const int n = g->order();
  for (int i = 0; i < n; ++i) {
    CHECK(ctx.mul(g->key(i), ctx.identity()) == g->key(i));
    CHECK(ctx.mul(ctx.identity(), g->key(i)) == g->key(i));
    CHECK(ctx.mul(g->key(i), ctx.inv(g->key(i))) == ctx.identity());
  }
  // The multiplication table is populated from the context, so index-level
  // associativity certifies the context on the full group.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (g->mul(g->mul(i, j), k) != g->mul(i, g->mul(j, k)))
          FAIL("associativity broke at ", i, ",", j, ",", k);
}

TEST_CASE("square wreath orders and swap conjugation") {
  GroupPtr z2w = square_wreath(cyclic_group(2));
  CHECK(z2w->order() == 8);
  CHECK(recognize(*z2w) == Recognition{Recognition::Kind::Dihedral, 8});

  GroupPtr s3 = symmetric_group(3);
  GroupPtr w = square_wreath(s3);
  CHECK(w->order() == 72);

  // {(g,h,0)} is an index-2 normal subgroup; conjugation by (e,e,1) swaps.
  std::vector<int> flag0;
  for (int i = 0; i < w->order(); ++i)
    if (w->key(i)[0] == '0') flag0.push_back(i);
  CHECK(flag0.size() == 36);
  CHECK(is_normal(*w, flag0));

  const auto& ctx = w->ctx();
  ElemKey swap = ctx.identity();
  swap[0] = '1';
  for (int g1 = 0; g1 < 6; ++g1)
    for (int g2 = 0; g2 < 6; ++g2) {
      ElemKey x = ctx.identity();
      // encode (g1, g2, 0) through group indices of the enumeration
      int idx = g1 * 6 + g2;
      x = w->key(idx);
      ElemKey conj = ctx.mul(ctx.mul(swap, x), ctx.inv(swap));
      CHECK(conj == w->key(g2 * 6 + g1));
    }
  CHECK_THROWS_AS(square_wreath(symmetric_group(5)), ResultTooLarge);
}

TEST_CASE("wreath law 2 J(G)^2 on the catalog") {
  struct Row {
    GroupPtr g;
    std::uint64_t expect;
  };
  std::vector<Row> rows = {
      {cyclic_group(2), 2},  {cyclic_group(3), 2},     {symmetric_group(3), 8},
      {dihedral_group(4), 2}, {dihedral_group(8), 8},   {alternating_group(4), 18},
      {symmetric_group(4), 72},
  };
  for (const auto& row : rows) {
    auto jg = jordan_constant(*row.g).constant;
    auto jw = jordan_constant(*square_wreath(row.g)).constant;
    CHECK(jw == row.expect);
    CHECK(jw == 2 * jg * jg);
  }
}

TEST_CASE("direct products") {
  GroupPtr a5xz2 = direct_product(alternating_group(5), cyclic_group(2));
  CHECK(a5xz2->order() == 120);
  CHECK(center(*a5xz2).size() == 2);

  CHECK(jordan_constant(*direct_product(alternating_group(4), alternating_group(4))).constant ==
        9);

  GroupPtr triv = cyclic_group(1);
  CHECK(direct_product(triv, symmetric_group(4))->order() == 24);
}

TEST_CASE("a5 presentation verifier") {
  GroupPtr s5 = symmetric_group(5);
  CtxPtr perm5 = s5->ctx_ptr();
  CHECK(verify_presentation_a5(Permutation::parse("(12345)").key(),
                               Permutation::parse("(12)(34)", 5).key(), perm5));
  auto w = witness_qi();
  auto [a, c] = a5_matrices(w);
  CHECK(verify_presentation_a5(c.key(), a.key(), pgl2_context(w.tower)));

  CtxPtr perm4 = permutation_context(4);
  CHECK(!verify_presentation_a5(Permutation::parse("(1234)").key(),
                                Permutation::parse("(12)", 4).key(), perm4));
}
