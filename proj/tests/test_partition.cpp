#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace sptie;

namespace {

bool subsets_split_evenly(const std::vector<std::uint64_t>& items)
{
  std::uint64_t total = 0;
  for (auto k : items)
    total += k;
  for (std::uint64_t mask = 0; mask < (1ull << items.size()); ++mask) {
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < items.size(); ++i)
      if (mask >> i & 1)
        sum += items[i];
    if (2 * sum == total)
      return true;
  }
  return false;
}

ScoreTable scores_with(const CwcmInstance& instance, const std::vector<WeakOrder>& votes)
{
  const auto& rule = std::get<ScoringRule>(instance.rule);
  return score_profile(election_with(instance, votes), rule.vector, rule.extension);
}

} // namespace

TEST(Partition, Examples)
{
  EXPECT_TRUE(solve_partition(PartitionInstance({1, 1, 2})));
  EXPECT_FALSE(solve_partition(PartitionInstance({1, 1, 1})));
  EXPECT_FALSE(solve_partition(PartitionInstance({1, 5})));
  EXPECT_EQ(PartitionInstance({1, 1, 2}).half_sum(), 2u);
  EXPECT_FALSE(PartitionInstance({1, 2}).half_sum());
  EXPECT_THROW(PartitionInstance({1, 0}), ValidationError);
}

TEST(Partition, MatchesSubsetEnumeration)
{
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t t = 1 + trial % 12;
    std::uniform_int_distribution<std::uint64_t> item(1, 1 + trial % 30);
    std::vector<std::uint64_t> items(t);
    for (auto& k : items)
      k = item(rng);
    const PartitionInstance instance(items);
    const auto half = partition_half(instance);
    ASSERT_EQ(half.has_value(), subsets_split_evenly(items));
    if (half) {
      std::uint64_t sum = 0;
      for (auto i : *half)
        sum += items[i];
      EXPECT_EQ(sum, *instance.half_sum());
    }
  }
}

TEST(Partition, CapacityCap)
{
  EXPECT_THROW(partition_half(PartitionInstance({kPartitionSumCap, kPartitionSumCap})), CapacityError);
}

TEST(Reduction, Shape)
{
  const auto instance = reduce_partition_to_cwcm(PartitionInstance({1, 1, 2}), Extension::Max);
  EXPECT_EQ(instance.candidates, (std::vector<std::string>{"a1", "p", "b1", "b2", "b3"}));
  EXPECT_EQ(split_at(instance.axis, instance.preferred).left, 1u);
  EXPECT_EQ(split_at(instance.axis, instance.preferred).right, 3u);
  EXPECT_EQ(instance.model, SPModel::SinglePeaked);
  EXPECT_EQ(std::get<ScoringRule>(instance.rule).vector, ScoringVector({4, 3, 2, 0, 0}));
  // K = 2: weights 20K and 8K, manipulators 4k_i.
  EXPECT_EQ(instance.nonmanipulators[0].weight, 40);
  EXPECT_EQ(instance.nonmanipulators[1].weight, 16);
  EXPECT_EQ(instance.manipulator_weights, (std::vector<Integer>{4, 4, 8}));

  const auto min = reduce_partition_to_cwcm(PartitionInstance({1, 1, 2}), Extension::Min);
  EXPECT_EQ(min.nonmanipulators[0].weight, 48);
  EXPECT_EQ(min.nonmanipulators[1].weight, 18);
  EXPECT_EQ(min.manipulator_weights, (std::vector<Integer>{4, 4, 8}));

  // An odd total doubles every weight under min so that 9K stays integral.
  const auto odd = reduce_partition_to_cwcm(PartitionInstance({1, 2}), Extension::Min);
  EXPECT_EQ(odd.nonmanipulators[0].weight, 72);
  EXPECT_EQ(odd.nonmanipulators[1].weight, 27);
  EXPECT_EQ(odd.manipulator_weights, (std::vector<Integer>{8, 16}));
  EXPECT_THROW(reduce_partition_to_cwcm(PartitionInstance(), Extension::Max), ValidationError);
}

TEST(Reduction, HalfAndHalfWitnessUnderMax)
{
  const auto instance = reduce_partition_to_cwcm(PartitionInstance({1, 1, 2}), Extension::Max);
  const auto n = instance.candidates;
  const auto via_a = parse_order("p > a1 > b1 > b2 > b3", n);
  const auto via_b = parse_order("p > b1 > b2 > b3 > a1", n);
  // {1,1} against {2}.
  const std::vector<WeakOrder> witness{via_a, via_a, via_b};
  const auto s = scores_with(instance, witness);
  const Integer k = 2;
  EXPECT_EQ(s[1], Rational(92 * k));
  EXPECT_EQ(s[0], Rational(92 * k));
  EXPECT_EQ(s[2], Rational(92 * k));
  EXPECT_LT(s[3], s[1]);
  EXPECT_LT(s[4], s[1]);
  EXPECT_TRUE(verify_witness(instance, witness));
  EXPECT_TRUE(solve_cwcm_oracle(instance).decision);
}

TEST(Reduction, HalfAndHalfWitnessUnderMin)
{
  const auto instance = reduce_partition_to_cwcm(PartitionInstance({1, 1, 2}), Extension::Min);
  const auto n = instance.candidates;
  const auto tied = parse_order("p > a1~b1 > b2 > b3", n);
  const auto via_b = parse_order("p > b1 > b2 > b3 > a1", n);
  const std::vector<WeakOrder> witness{tied, tied, via_b};
  const auto s = scores_with(instance, witness);
  const Integer k = 2;
  EXPECT_EQ(s[1], Rational(104 * k));
  EXPECT_EQ(s[0], Rational(104 * k));
  EXPECT_EQ(s[2], Rational(104 * k));
  EXPECT_LT(s[3], s[1]);
  EXPECT_LT(s[4], s[1]);
  EXPECT_TRUE(verify_witness(instance, witness));
}

TEST(Reduction, OddTotalIsANoInstance)
{
  for (auto ext : kAllExtensions)
    EXPECT_FALSE(solve_cwcm_oracle(reduce_partition_to_cwcm(PartitionInstance({1, 1, 1}), ext)).decision);
}

TEST(Reduction, SmallInstancesMatchPartition)
{
  for (std::uint64_t a = 1; a <= 4; ++a)
    for (std::uint64_t b = a; b <= 4; ++b)
      for (std::uint64_t c = b; c <= 4; ++c)
        for (auto ext : kAllExtensions) {
          const PartitionInstance p({a, b, c});
          EXPECT_EQ(solve_cwcm_oracle(reduce_partition_to_cwcm(p, ext)).decision, solve_partition(p))
              << a << "," << b << "," << c << " " << to_string(ext);
        }
}
