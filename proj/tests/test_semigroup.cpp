#include "conductor/semigroup.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "conductor/errors.hpp"

namespace conductor {
namespace {

numerical_semigroup s35() { return numerical_semigroup::from_generators({3, 5}); }

TEST(numerical_semigroup, from_generators_fixture) {
  const auto s = s35();
  EXPECT_EQ(s.carrier(), cofinite_set::make({0, 3, 5, 6}, 8));
  EXPECT_EQ(s.frobenius(), 7);
  EXPECT_EQ(s.genus(), 4);
  EXPECT_EQ(s.multiplicity(), 3);
  EXPECT_EQ(s.generators(), (std::vector<std::int64_t>{3, 5}));
  EXPECT_TRUE(s.is_symmetric());
}

TEST(numerical_semigroup, generator_list_is_minimized) {
  const auto s = numerical_semigroup::from_generators({3, 5, 7});
  EXPECT_EQ(s.carrier(), cofinite_set::make({0, 3}, 5));
  EXPECT_EQ(s.frobenius(), 4);
  EXPECT_EQ(s.genus(), 3);
  EXPECT_FALSE(s.is_symmetric());
  EXPECT_EQ(s.generators(), (std::vector<std::int64_t>{3, 5, 7}));
  // Redundant generators disappear.
  EXPECT_EQ(numerical_semigroup::from_generators({3, 5, 8}).generators(),
            (std::vector<std::int64_t>{3, 5}));
  EXPECT_EQ(numerical_semigroup::from_generators({2, 3, 4, 5}).generators(),
            (std::vector<std::int64_t>{2, 3}));
}

TEST(numerical_semigroup, small_fixtures) {
  const auto s23 = numerical_semigroup::from_generators({2, 3});
  EXPECT_EQ(s23.carrier(), cofinite_set::make({0}, 2));
  EXPECT_EQ(s23.frobenius(), 1);
  EXPECT_EQ(s23.genus(), 1);
  EXPECT_TRUE(s23.is_symmetric());

  const auto s25 = numerical_semigroup::from_generators({2, 5});
  EXPECT_EQ(s25.carrier(), cofinite_set::make({0, 2}, 4));
  EXPECT_EQ(s25.frobenius(), 3);
  EXPECT_EQ(s25.genus(), 2);
  EXPECT_TRUE(s25.is_symmetric());

  const auto n = numerical_semigroup::from_generators({1});
  EXPECT_EQ(n.carrier(), cofinite_set::naturals());
  EXPECT_EQ(n.frobenius(), -1);
  EXPECT_EQ(n.genus(), 0);
  EXPECT_EQ(n.multiplicity(), 1);
  EXPECT_EQ(n.generators(), (std::vector<std::int64_t>{1}));
  EXPECT_TRUE(n.is_symmetric());
}

TEST(numerical_semigroup, from_generators_validates) {
  EXPECT_THROW(numerical_semigroup::from_generators({}), std::invalid_argument);
  EXPECT_THROW(numerical_semigroup::from_generators({0, 3}), std::invalid_argument);
  EXPECT_THROW(numerical_semigroup::from_generators({-2, 3}), std::invalid_argument);
  EXPECT_THROW(numerical_semigroup::from_generators({4, 6}), std::invalid_argument);
}

TEST(numerical_semigroup, from_carrier_roundtrip_and_validation) {
  const auto s = numerical_semigroup::from_carrier(cofinite_set::make({0, 3, 5, 6}, 8));
  EXPECT_EQ(s, s35());
  // 0 must be a member and the set must be closed under addition.
  EXPECT_THROW(numerical_semigroup::from_carrier(cofinite_set::make({1}, 3)),
               std::invalid_argument);
  EXPECT_THROW(numerical_semigroup::from_carrier(cofinite_set::make({0, 2, 3}, 7)),
               std::invalid_argument);
  EXPECT_THROW(numerical_semigroup::from_carrier(cofinite_set::make({-2, 0}, 2)),
               std::invalid_argument);
}

TEST(numerical_semigroup, gaps_fixture) {
  EXPECT_EQ(s35().gaps(), (std::vector<std::int64_t>{1, 2, 4, 7}));
  EXPECT_EQ(numerical_semigroup::from_generators({1}).gaps(), (std::vector<std::int64_t>{}));
}

TEST(numerical_semigroup, apery_fixture) {
  EXPECT_EQ(s35().apery(3), (std::vector<std::int64_t>{0, 10, 5}));
  EXPECT_EQ(numerical_semigroup::from_generators({2, 3}).apery(2),
            (std::vector<std::int64_t>{0, 3}));
  EXPECT_EQ(numerical_semigroup::from_generators({1}).apery(1), (std::vector<std::int64_t>{0}));
  EXPECT_THROW(s35().apery(0), std::invalid_argument);
  // The least member per residue class partitions the semigroup.
  const auto s = numerical_semigroup::from_generators({4, 7, 9});
  const auto ap = s.apery(4);
  for (std::int64_t r = 0; r < 4; ++r) {
    EXPECT_TRUE(s.contains(ap[static_cast<std::size_t>(r)]));
    EXPECT_EQ(ap[static_cast<std::size_t>(r)] % 4, r);
    EXPECT_FALSE(s.contains(ap[static_cast<std::size_t>(r)] - 4));
  }
}

TEST(numerical_semigroup, labels) {
  EXPECT_EQ(s35().label(), "⟨3,5⟩");
  EXPECT_EQ(s35().to_string(), "⟨3,5⟩ F=7 g=4 symmetric");
  EXPECT_EQ(numerical_semigroup::from_generators({3, 5, 7}).to_string(), "⟨3,5,7⟩ F=4 g=3");
}

TEST(oversemigroups, fixture_s35) {
  const auto overs = oversemigroups(s35());
  ASSERT_EQ(overs.size(), 5u);
  EXPECT_EQ(overs[0].generators(), (std::vector<std::int64_t>{3, 5}));
  EXPECT_EQ(overs[1].generators(), (std::vector<std::int64_t>{3, 5, 7}));
  EXPECT_EQ(overs[2].generators(), (std::vector<std::int64_t>{3, 4, 5}));
  EXPECT_EQ(overs[3].generators(), (std::vector<std::int64_t>{2, 3}));
  EXPECT_EQ(overs[4].generators(), (std::vector<std::int64_t>{1}));
  // Genus decreases weakly along the listing.
  for (std::size_t i = 1; i < overs.size(); ++i)
    EXPECT_LE(overs[i].genus(), overs[i - 1].genus());
}

TEST(oversemigroups, small_counts) {
  EXPECT_EQ(oversemigroups(numerical_semigroup::from_generators({2, 3})).size(), 2u);
  EXPECT_EQ(oversemigroups(numerical_semigroup::from_generators({2, 5})).size(), 3u);
  EXPECT_EQ(oversemigroups(numerical_semigroup::from_generators({1})).size(), 1u);
  // Every oversemigroup contains the base.
  for (const auto& t : oversemigroups(s35())) EXPECT_TRUE(is_subset(s35().carrier(), t.carrier()));
}

TEST(enumerate_by_genus, counts_follow_the_known_series) {
  const std::vector<std::size_t> expected{1, 1, 2, 4, 7, 12, 23, 39, 67};
  for (std::size_t g = 0; g < expected.size(); ++g) {
    const auto all = enumerate_by_genus(static_cast<std::int64_t>(g));
    EXPECT_EQ(all.size(), expected[g]) << "genus " << g;
    for (const auto& s : all) EXPECT_EQ(s.genus(), static_cast<std::int64_t>(g));
  }
}

TEST(enumerate_by_genus, listing_is_sorted_and_unique) {
  const auto all = enumerate_by_genus(6);
  for (std::size_t i = 1; i < all.size(); ++i)
    EXPECT_LT(all[i - 1].generators(), all[i].generators());
}

TEST(enumerate_by_genus, rejects_out_of_range) {
  EXPECT_THROW(enumerate_by_genus(-1), std::invalid_argument);
  EXPECT_THROW(enumerate_by_genus(17), std::invalid_argument);
}

}  // namespace
}  // namespace conductor
