#ifndef SPTIE_PARTITION_HPP
#define SPTIE_PARTITION_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "sptie/manipulation.hpp"

namespace sptie {

/// Largest item total the pseudo-polynomial subset-sum table accepts.
inline constexpr std::uint64_t kPartitionSumCap = 100'000'000;

/// Positive integers k_1..k_t; the question is whether they split into two halves of sum K.
struct PartitionInstance
{
  std::vector<std::uint64_t> items;

  explicit PartitionInstance(std::vector<std::uint64_t> values = {}) : items(std::move(values))
  {
    for (auto k : items)
      if (k == 0)
        throw ValidationError("partition items must be positive");
  }

  std::uint64_t total() const
  {
    std::uint64_t sum = 0;
    for (auto k : items)
      sum += k;
    return sum;
  }

  /// K, defined only when the total is even.
  std::optional<std::uint64_t> half_sum() const
  {
    const auto t = total();
    if (t % 2 != 0)
      return std::nullopt;
    return t / 2;
  }
};

/// Indices of a subcollection summing to K, if one exists.
inline std::optional<std::vector<std::size_t>> partition_half(const PartitionInstance& instance)
{
  const auto half = instance.half_sum();
  if (!half)
    return std::nullopt;
  if (instance.total() > kPartitionSumCap)
    throw CapacityError("partition total exceeds the subset-sum table cap");
  const std::size_t target = static_cast<std::size_t>(*half);
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  // via[s]: the item that first made sum s reachable.
  std::vector<std::size_t> via(target + 1, kNone);
  std::vector<bool> reachable(target + 1, false);
  reachable[0] = true;
  for (std::size_t i = 0; i < instance.items.size(); ++i) {
    const std::size_t k = static_cast<std::size_t>(instance.items[i]);
    if (k > target)
      continue;
    for (std::size_t s = target; s >= k; --s) {
      if (!reachable[s] && reachable[s - k]) {
        reachable[s] = true;
        via[s] = i;
      }
      if (s == k)
        break;
    }
  }
  if (!reachable[target])
    return std::nullopt;
  std::vector<std::size_t> chosen;
  for (std::size_t s = target; s > 0; s -= static_cast<std::size_t>(instance.items[via[s]]))
    chosen.push_back(via[s]);
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

/// Odd totals answer false.
inline bool solve_partition(const PartitionInstance& instance) { return partition_half(instance).has_value(); }

/**
 * CWCM instance for the ⟨4,3,2,0,0⟩ rule on axis a1 < p < b1 < b2 < b3 that
 * has a yes answer exactly when the items split evenly.
 *
 * Nonmanipulators: weight 20K voting a1 > p > b1 > b2 > b3 and weight 8K
 * voting b1 > b2 > b3 > p > a1 (24K and 9K under min). Manipulators weigh
 * 4k_i. When min meets an odd total, every weight is doubled to stay integral.
 */
inline CwcmInstance reduce_partition_to_cwcm(const PartitionInstance& partition, Extension ext)
{
  if (partition.items.empty())
    throw ValidationError("partition instance needs at least one item");
  const Integer total = partition.total();  // 2K
  const bool min_rule = ext == Extension::Min;
  const Integer scale = (min_rule && total % 2 != 0) ? 2 : 1;

  CwcmInstance instance;
  instance.candidates = {"a1", "p", "b1", "b2", "b3"};
  instance.axis = Axis::identity(5);
  instance.preferred = 1;
  instance.model = SPModel::SinglePeaked;
  instance.rule = ScoringRule{ScoringVector({4, 3, 2, 0, 0}), ext};

  const std::vector<CandidateId> first{0, 1, 2, 3, 4};
  const std::vector<CandidateId> second{2, 3, 4, 1, 0};
  // 20K = 10 * total, 8K = 4 * total; 24K = 12 * total, 9K = 9 * total / 2.
  const Integer heavy = min_rule ? Integer(12 * total * scale) : Integer(10 * total * scale);
  const Integer light = min_rule ? Integer(9 * total * scale / 2) : Integer(4 * total * scale);
  instance.nonmanipulators = {{WeakOrder::total(first), heavy}, {WeakOrder::total(second), light}};
  for (auto k : partition.items)
    instance.manipulator_weights.push_back(4 * Integer(k) * scale);
  return instance;
}

} // namespace sptie

#endif // SPTIE_PARTITION_HPP
