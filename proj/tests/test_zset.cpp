#include "conductor/zset.hpp"

#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "conductor/oracle.hpp"

namespace conductor {
namespace {

cofinite_set s35() { return cofinite_set::make({0, 3, 5, 6}, 8); }
cofinite_set s357() { return cofinite_set::make({0, 3}, 5); }

TEST(cofinite_set, make_keeps_canonical_input) {
  const auto a = s35();
  EXPECT_EQ(a.min_elt(), 0);
  EXPECT_EQ(a.tail_bound(), 8);
  EXPECT_EQ(a.window(), (std::vector<std::int64_t>{0, 3, 5, 6}));
}

TEST(cofinite_set, make_keeps_gap_below_tail) {
  const auto a = cofinite_set::make({0, 3, 5, 6, 7}, 9);
  EXPECT_EQ(a.tail_bound(), 9);
  EXPECT_TRUE(a.member(7));
  EXPECT_FALSE(a.member(8));
  EXPECT_TRUE(a.member(9));
}

TEST(cofinite_set, make_merges_run_into_tail) {
  const auto a = cofinite_set::make({0, 3, 5, 6, 7}, 8);
  EXPECT_EQ(a.tail_bound(), 5);
  EXPECT_EQ(a.window(), (std::vector<std::int64_t>{0, 3}));
}

TEST(cofinite_set, make_normalizes_duplicates_and_order) {
  EXPECT_EQ(cofinite_set::make({6, 0, 3, 6, 5}, 8), s35());
}

TEST(cofinite_set, make_absorbs_members_above_tail) {
  EXPECT_EQ(cofinite_set::make({0, 3, 12}, 8), cofinite_set::make({0, 3}, 8));
}

TEST(cofinite_set, make_with_empty_window_is_pure_tail) {
  EXPECT_EQ(cofinite_set::make({}, 5), cofinite_set::from_tail(5));
  EXPECT_EQ(cofinite_set::make({}, 0), cofinite_set::naturals());
}

TEST(cofinite_set, naturals_membership) {
  const auto n = cofinite_set::naturals();
  EXPECT_EQ(n.min_elt(), 0);
  EXPECT_EQ(n.tail_bound(), 0);
  EXPECT_TRUE(n.window().empty());
  EXPECT_FALSE(n.member(-1));
  EXPECT_TRUE(n.member(0));
}

TEST(cofinite_set, membership_fixture) {
  const auto a = s35();
  EXPECT_TRUE(a.member(0));
  EXPECT_FALSE(a.member(1));
  EXPECT_TRUE(a.member(6));
  EXPECT_FALSE(a.member(7));
  EXPECT_TRUE(a.member(8));
  EXPECT_FALSE(a.member(-5));
  EXPECT_TRUE(a.member(1000000));
}

TEST(cofinite_set, members_in_half_open_range) {
  EXPECT_EQ(s35().members_in(1, 9), (std::vector<std::int64_t>{3, 5, 6, 8}));
  EXPECT_EQ(s35().members_in(8, 8), (std::vector<std::int64_t>{}));
  EXPECT_EQ(s35().members_in(-4, 1), (std::vector<std::int64_t>{0}));
}

TEST(cofinite_set, translate_fixture) {
  const auto m = cofinite_set::make({0}, 2).translate(2);
  EXPECT_EQ(m.window(), (std::vector<std::int64_t>{2}));
  EXPECT_EQ(m.tail_bound(), 4);
  EXPECT_EQ(m.translate(-2), cofinite_set::make({0}, 2));
  EXPECT_EQ(s35().translate(0), s35());
}

TEST(cofinite_set, sum_fixture) {
  const auto a = cofinite_set::make({3, 5, 6}, 8);
  const auto b = cofinite_set::make({0}, 7);
  EXPECT_EQ(sum(a, b), a);
  EXPECT_EQ(sum(b, a), a);
  EXPECT_EQ(sum(cofinite_set::naturals(), cofinite_set::naturals()), cofinite_set::naturals());
  EXPECT_EQ(sum(cofinite_set::from_tail(-3), cofinite_set::from_tail(5)),
            cofinite_set::from_tail(2));
}

TEST(cofinite_set, colon_fixture) {
  EXPECT_EQ(colon(s35(), s357()), cofinite_set::make({3, 5, 6}, 8));
  EXPECT_EQ(colon(s35(), cofinite_set::naturals()), cofinite_set::from_tail(8));
  EXPECT_EQ(colon(cofinite_set::naturals(), cofinite_set::from_tail(-2)),
            cofinite_set::from_tail(2));
}

TEST(cofinite_set, union_and_intersection) {
  const auto a = s35();
  const auto b = s357();
  EXPECT_EQ(set_union(a, b), b);
  EXPECT_EQ(set_intersection(a, b), a);
  EXPECT_EQ(set_union(a, a), a);
  EXPECT_EQ(set_intersection(a, a), a);
  const auto c = cofinite_set::make({-2, 1}, 3);
  EXPECT_EQ(set_union(a, c), cofinite_set::make({-2, 0, 1}, 3));
  EXPECT_EQ(set_intersection(a, c), cofinite_set::make({3, 5, 6}, 8));
}

TEST(cofinite_set, subset_fixture) {
  EXPECT_TRUE(is_subset(s35(), s357()));
  EXPECT_FALSE(is_subset(s357(), s35()));
  EXPECT_TRUE(is_subset(s35(), s35()));
  EXPECT_TRUE(is_subset(cofinite_set::from_tail(8), s35()));
  EXPECT_FALSE(is_subset(cofinite_set::from_tail(7), s35()));
}

TEST(cofinite_set, colength_fixture) {
  EXPECT_EQ(colength(s35(), cofinite_set::naturals()), 4);
  EXPECT_EQ(colength(s35(), s357()), 1);
  EXPECT_EQ(colength(s35(), s35()), 0);
  EXPECT_THROW(colength(s357(), s35()), std::invalid_argument);
}

TEST(cofinite_set, to_string_format) {
  EXPECT_EQ(s35().to_string(), "{0,3,5,6}∪[8,∞)");
  EXPECT_EQ(cofinite_set::from_tail(2).to_string(), "[2,∞)");
  EXPECT_EQ(cofinite_set::naturals().to_string(), "[0,∞)");
  EXPECT_EQ(cofinite_set::make({-1, 2, 4, 5}, 7).to_string(), "{-1,2,4,5}∪[7,∞)");
}

TEST(cofinite_set, ordering_is_total_and_consistent) {
  const auto a = s35();
  const auto b = s357();
  EXPECT_TRUE(a <=> b != 0);
  EXPECT_TRUE((a <=> b) == (a <=> b));
  EXPECT_TRUE(a <=> a == 0);
  EXPECT_TRUE(a == a);
  EXPECT_FALSE(a == b);
}

TEST(cofinite_set, arithmetic_overflow_throws) {
  const auto top = cofinite_set::from_tail(std::numeric_limits<std::int64_t>::max() - 1);
  EXPECT_THROW(top.translate(10), std::overflow_error);
  EXPECT_THROW(sum(top, top), std::overflow_error);
}

TEST(cofinite_set, oversized_window_throws) {
  EXPECT_THROW(cofinite_set::make({0}, (std::int64_t{1} << 22) + 10), std::invalid_argument);
}

cofinite_set random_set(std::mt19937_64& rng, std::vector<std::int64_t>& members,
                        std::int64_t& tail) {
  members.clear();
  const std::int64_t lo = std::uniform_int_distribution<std::int64_t>(-10, 10)(rng);
  const std::int64_t len = std::uniform_int_distribution<std::int64_t>(0, 20)(rng);
  for (std::int64_t i = 0; i < len; ++i)
    if (std::uniform_int_distribution<int>(0, 2)(rng) != 0) members.push_back(lo + i);
  tail = lo + len;
  return cofinite_set::make(members, tail);
}

TEST(cofinite_set, random_pairs_agree_with_naive_tables) {
  std::mt19937_64 rng(7);
  std::vector<std::int64_t> ma, mb;
  std::int64_t ta = 0, tb = 0;
  for (int round = 0; round < 200; ++round) {
    const auto a = random_set(rng, ma, ta);
    const auto na = naive_from_members(ma, ta, -200, 200);
    const auto b = random_set(rng, mb, tb);
    const auto nb = naive_from_members(mb, tb, -200, 200);
    ASSERT_TRUE(naive_agrees(a, na, -70, 70));
    ASSERT_TRUE(naive_agrees(sum(a, b), naive_sum(na, nb, -70, 70), -70, 70))
        << naive_diff(sum(a, b), naive_sum(na, nb, -70, 70), -70, 70);
    ASSERT_TRUE(naive_agrees(colon(a, b), naive_colon(na, nb, -70, 70), -70, 70))
        << naive_diff(colon(a, b), naive_colon(na, nb, -70, 70), -70, 70);
    ASSERT_TRUE(naive_agrees(set_union(a, b), naive_union(na, nb, -70, 70), -70, 70));
    ASSERT_TRUE(
        naive_agrees(set_intersection(a, b), naive_intersection(na, nb, -70, 70), -70, 70));
    ASSERT_EQ(is_subset(a, b), naive_subset(na, nb, -70, 70));
    if (is_subset(a, b)) {
      ASSERT_EQ(colength(a, b), naive_colength(na, nb, -70, 70));
    }
  }
}

TEST(cofinite_set, random_algebraic_laws) {
  std::mt19937_64 rng(11);
  std::vector<std::int64_t> scratch;
  std::int64_t tail = 0;
  for (int round = 0; round < 200; ++round) {
    const auto a = random_set(rng, scratch, tail);
    const auto b = random_set(rng, scratch, tail);
    const auto c = random_set(rng, scratch, tail);
    const std::int64_t d = std::uniform_int_distribution<std::int64_t>(-7, 7)(rng);

    // Canonical rebuild and translation laws.
    ASSERT_EQ(cofinite_set::make(a.window(), a.tail_bound()), a);
    ASSERT_EQ(a.translate(d).translate(-d), a);
    ASSERT_EQ(sum(a.translate(d), b), sum(a, b).translate(d));
    ASSERT_EQ(colon(a.translate(d), b), colon(a, b).translate(d));
    ASSERT_EQ(colon(a, b.translate(d)), colon(a, b).translate(-d));

    // Sum is commutative and associative; union/intersection bracket subsets.
    ASSERT_EQ(sum(a, b), sum(b, a));
    ASSERT_EQ(sum(sum(a, b), c), sum(a, sum(b, c)));
    ASSERT_TRUE(is_subset(set_intersection(a, b), a));
    ASSERT_TRUE(is_subset(a, set_union(a, b)));

    // z ∈ (a : b) exactly when z + b ⊆ a; check via the sum.
    ASSERT_TRUE(is_subset(sum(colon(a, b), b), a));
    // Double dual grows the set, the triple colon collapses back.
    ASSERT_TRUE(is_subset(b, colon(a, colon(a, b))));
    ASSERT_EQ(colon(a, colon(a, colon(a, b))), colon(a, b));
  }
}

}  // namespace
}  // namespace conductor
