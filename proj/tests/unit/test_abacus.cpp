#include <gtest/gtest.h>

#include "oracles.hpp"
#include "twistlab/abacus.hpp"
#include "twistlab/error.hpp"

using namespace twistlab;

TEST(Abacus, BetaNumbers) {
  EXPECT_EQ(to_abacus({3, 2}, 3, 3).beta, (std::vector<Part>{5, 3, 0}));
  EXPECT_EQ(to_abacus({}, 3, 3).beta, (std::vector<Part>{2, 1, 0}));
  EXPECT_EQ(to_abacus({1}, 3, 1).beta, (std::vector<Part>{1}));
  EXPECT_EQ(from_abacus(to_abacus({3, 2}, 3, 3)), (Partition{3, 2}));
  EXPECT_EQ(from_abacus(to_abacus({}, 3, 3)), Partition{});
  EXPECT_EQ(from_abacus(to_abacus({1}, 3, 1)), (Partition{1}));
  EXPECT_THROW(to_abacus({2, 1}, 3, 1), Error);
  EXPECT_EQ(default_beads({2, 1}, 3), 3u);
  EXPECT_EQ(default_beads({2, 1, 1, 1}, 3), 6u);
}

TEST(Abacus, Runners) {
  auto display = to_abacus({3, 2}, 3, 3);
  auto runners = display.runners();
  ASSERT_EQ(runners.size(), 3u);
  // positions 0, 3, 5 hold beads
  EXPECT_EQ(runners[0], "oo");
  EXPECT_EQ(runners[1], "..");
  EXPECT_EQ(runners[2], ".o");
}

TEST(Abacus, Cores) {
  auto a = p_core({3, 2}, 3);
  EXPECT_EQ(a.core, (Partition{1, 1}));
  EXPECT_EQ(a.weight, 1u);
  auto b = p_core({3, 3, 3}, 3);
  EXPECT_EQ(b.core, Partition{});
  EXPECT_EQ(b.weight, 3u);
  auto c = p_core({3, 1}, 5);
  EXPECT_EQ(c.core, (Partition{3, 1}));
  EXPECT_EQ(c.weight, 0u);
}

TEST(Abacus, PByP) {
  EXPECT_TRUE(is_p_by_p({3, 3, 3}, 3));
  EXPECT_FALSE(is_p_by_p({6, 3, 3}, 3));
  EXPECT_TRUE(is_p_by_p({4, 4, 2, 2}, 2));
}

TEST(Abacus, Census) {
  auto nine = block_census(9, 3);
  auto principal = std::find_if(nine.begin(), nine.end(),
                                [](const auto& b) { return b.core.empty(); });
  ASSERT_NE(principal, nine.end());
  EXPECT_EQ(principal->weight, 3u);
  EXPECT_NE(std::find(principal->p_by_p_members.begin(), principal->p_by_p_members.end(),
                      Partition{3, 3, 3}),
            principal->p_by_p_members.end());

  auto four = block_census(4, 5);
  EXPECT_EQ(four.size(), 5u);
  for (const auto& block : four) {
    EXPECT_EQ(block.weight, 0u);
    EXPECT_EQ(block.members, std::vector<Partition>{block.core});
    EXPECT_TRUE(block.p_by_p_members.empty());
  }

  auto two = block_census(2, 2);
  ASSERT_EQ(two.size(), 1u);
  EXPECT_EQ(two[0].weight, 1u);
  EXPECT_EQ(two[0].members, (std::vector<Partition>{{2}, {1, 1}}));
}

TEST(AbacusProperties, RoundTripAnyBeadCount) {
  for (Part p : {2, 3, 5}) {
    for (Part d = 0; d <= 20; ++d) {
      for (const auto& lambda : enumerate_partitions(d)) {
        for (std::size_t b = lambda.length(); b <= lambda.length() + 2 * p; ++b) {
          ASSERT_EQ(from_abacus(to_abacus(lambda, p, b)), lambda);
        }
      }
    }
  }
}

TEST(AbacusProperties, CoreIndependentOfBeads) {
  for (Part p : {2, 3, 5}) {
    for (Part d = 0; d <= 15; ++d) {
      for (const auto& lambda : enumerate_partitions(d)) {
        auto reference = p_core(lambda, p);
        for (std::size_t b = lambda.length(); b <= lambda.length() + p + 1; ++b) {
          auto other = p_core(to_abacus(lambda, p, b));
          ASSERT_EQ(other.core, reference.core);
          ASSERT_EQ(other.weight, reference.weight);
        }
      }
    }
  }
}

TEST(AbacusProperties, SizeBalance) {
  for (Part p : {2, 3, 5, 7}) {
    for (Part d = 0; d <= 15; ++d) {
      for (const auto& lambda : enumerate_partitions(d)) {
        auto block = p_core(lambda, p);
        ASSERT_EQ(block.core.size() + p * block.weight, d);
        auto again = p_core(block.core, p);
        ASSERT_EQ(again.core, block.core);
        ASSERT_EQ(again.weight, 0u);
      }
    }
  }
}

TEST(AbacusProperties, SlideMatchesHookStripping) {
  for (Part p : {2, 3, 5, 7}) {
    for (Part d = 0; d <= 12; ++d) {
      for (const auto& lambda : enumerate_partitions(d)) {
        auto slid = p_core(lambda, p);
        auto stripped = oracle::strip_hooks(lambda, p);
        ASSERT_EQ(slid.core, stripped.core) << lambda.to_string() << " p=" << p;
        ASSERT_EQ(slid.weight, stripped.weight);
      }
    }
  }
}

TEST(AbacusProperties, PByPDefinition) {
  auto divisible = [](const Partition& lambda, Part p) {
    for (Part x : lambda.parts()) {
      if (x % p) return false;
    }
    return true;
  };
  for (Part p : {2, 3}) {
    for (Part d = 0; d <= 18; ++d) {
      for (const auto& lambda : enumerate_partitions(d)) {
        ASSERT_EQ(is_p_by_p(lambda, p), divisible(lambda, p) && divisible(conjugate(lambda), p));
      }
    }
  }
}
