#include "doctest.h"
#include "qj/permgroup.hpp"

using namespace qj;

TEST_CASE("permutation basics") {
  Permutation p = Permutation::parse("(12)", 2);
  CHECK(p.compose(p) == Permutation::identity(2));
  CHECK(Permutation::parse("(12345)").cycle_type() == std::vector<int>{5});
  CHECK(Permutation::parse("(12)(34)").is_even());
  CHECK(!Permutation::parse("(12)", 4).is_even());
  CHECK(Permutation::parse("(1 2 3)(4 5)", 6).cycle_type() == std::vector<int>{3, 2, 1});
  Permutation q = Permutation::parse("(123)(45)", 5);
  CHECK(q.compose(q.inverse()) == Permutation::identity(5));
  CHECK_THROWS_AS(Permutation::parse("(12)").compose(Permutation::parse("(123)")),
                  DegreeMismatch);
  CHECK_THROWS_AS(Permutation::parse("(1 2 13)"), DegreeTooLarge);
  CHECK(Permutation::parse("(10 11 12)", 12).cycle_type() ==
        std::vector<int>{3, 1, 1, 1, 1, 1, 1, 1, 1, 1});
}

TEST_CASE("parse matches composition order for overlapping cycles") {
  // (12)(23) means: apply (23) first, then (12).
  Permutation p = Permutation::parse("(12)(23)", 3);
  Permutation q = Permutation::parse("(23)", 3).compose(Permutation::parse("(12)", 3));
  CHECK(p == q);
}

TEST_CASE("symmetric and alternating groups enumerate with the right orders") {
  CHECK(symmetric_group(5)->order() == 120);
  CHECK(alternating_group(5)->order() == 60);
  CHECK(alternating_group(4)->order() == 12);
  CHECK(symmetric_group(4)->order() == 24);
  CHECK(alternating_group(7)->order() == 2520);
  CHECK_THROWS_AS(symmetric_group(9), DegreeTooLarge);
}

TEST_CASE("permutation context satisfies the group laws exhaustively for degree <= 4") {
  for (int n : {3, 4}) {
    GroupPtr g = symmetric_group(n);
    const auto& ctx = g->ctx();
    for (int i = 0; i < g->order(); ++i) {
      CHECK(ctx.mul(g->key(i), ctx.identity()) == g->key(i));
      CHECK(ctx.mul(ctx.identity(), g->key(i)) == g->key(i));
      CHECK(ctx.mul(g->key(i), ctx.inv(g->key(i))) == ctx.identity());
      for (int j = 0; j < g->order(); ++j)
        for (int k = 0; k < g->order(); ++k)
          CHECK(g->mul(g->mul(i, j), k) == g->mul(i, g->mul(j, k)));
    }
  }
  // Degree 5: identity and inverse laws exhaustively, associativity sampled.
  GroupPtr s5 = symmetric_group(5);
  const auto& ctx = s5->ctx();
  for (int i = 0; i < s5->order(); ++i)
    CHECK(ctx.mul(s5->key(i), ctx.inv(s5->key(i))) == ctx.identity());
  for (int t = 0; t < 4000; ++t) {
    int i = (t * 37) % 120, j = (t * 59 + 11) % 120, k = (t * 83 + 29) % 120;
    CHECK(s5->mul(s5->mul(i, j), k) == s5->mul(i, s5->mul(j, k)));
  }
}

TEST_CASE("splitting criterion on stated cycle types") {
  CHECK(class_splits_in_alternating({5}));
  CHECK(!class_splits_in_alternating({3, 1, 1}));  // two fixed points share length 1
  CHECK(!class_splits_in_alternating({2, 2, 1}));  // even cycle present
  CHECK_THROWS_AS(class_splits_in_alternating({2, 1, 1}), OddPermutation);
}

TEST_CASE("splitting criterion clauses") {
  CHECK(class_splits_in_alternating({3, 1}));          // degree 4
  CHECK(!class_splits_in_alternating({2, 2}));         // even-length cycles present
  CHECK(!class_splits_in_alternating({3, 3, 1}));      // repeated odd length
  CHECK(class_splits_in_alternating({7}));
  CHECK(class_splits_in_alternating({5, 3, 1}));       // degree 9, distinct odd
}

TEST_CASE("three-cycle counting identity holds only at k = 1") {
  for (int n = 7; n <= 12; ++n) {
    auto result = verify_three_cycle_counting(n);
    for (const auto& [k, holds] : result) CHECK(holds == (k == 1));
    CHECK(result.at(1));
    CHECK(result.size() == static_cast<size_t>(n / 3));
  }
  CHECK(verify_three_cycle_counting(7) == std::map<int, bool>{{1, true}, {2, false}});
  CHECK_THROWS_AS(verify_three_cycle_counting(6), PreconditionFailed);
}
