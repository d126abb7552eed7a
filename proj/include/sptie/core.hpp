#ifndef SPTIE_CORE_HPP
#define SPTIE_CORE_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sptie/errors.hpp"

namespace sptie {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Dense candidate index in 0..m-1.
using CandidateId = std::uint32_t;

using CandidateSet = std::vector<CandidateId>;

/**
 * A ranking with ties, stored as an ordered partition G_1 > G_2 > ... > G_r.
 *
 * Each group is kept sorted by id, so two orders compare equal exactly when
 * they state the same preferences.
 */
class WeakOrder
{
public:
  WeakOrder() = default;

  WeakOrder(std::vector<CandidateSet> groups, std::size_t candidate_count)
    : groups_(std::move(groups)), rank_(candidate_count, kUnranked)
  {
    if (groups_.empty() && candidate_count > 0)
      throw ValidationError("weak order needs at least one group");
    for (std::size_t g = 0; g < groups_.size(); ++g) {
      auto& group = groups_[g];
      if (group.empty())
        throw ValidationError("weak order contains an empty group");
      std::sort(group.begin(), group.end());
      for (CandidateId c : group) {
        if (c >= candidate_count)
          throw ValidationError("weak order references candidate " + std::to_string(c) +
                                " outside 0.." + std::to_string(candidate_count));
        if (rank_[c] != kUnranked)
          throw ValidationError("candidate " + std::to_string(c) + " appears twice in a weak order");
        rank_[c] = static_cast<std::uint32_t>(g);
      }
    }
    for (std::size_t c = 0; c < candidate_count; ++c)
      if (rank_[c] == kUnranked)
        throw ValidationError("candidate " + std::to_string(c) + " missing from weak order");
  }

  /// Strict ranking, most preferred first.
  static WeakOrder total(std::span<const CandidateId> ranking)
  {
    std::vector<CandidateSet> groups;
    groups.reserve(ranking.size());
    for (CandidateId c : ranking)
      groups.push_back({c});
    return WeakOrder(std::move(groups), ranking.size());
  }

  static WeakOrder all_tied(std::size_t candidate_count)
  {
    CandidateSet all(candidate_count);
    std::iota(all.begin(), all.end(), CandidateId{0});
    return WeakOrder({std::move(all)}, candidate_count);
  }

  const std::vector<CandidateSet>& groups() const noexcept { return groups_; }
  std::size_t group_count() const noexcept { return groups_.size(); }
  std::size_t candidate_count() const noexcept { return rank_.size(); }

  /// 0-based index of the group holding c.
  std::size_t group_of(CandidateId c) const { return rank_.at(c); }

  bool prefers(CandidateId a, CandidateId b) const { return rank_.at(a) < rank_.at(b); }
  bool indifferent(CandidateId a, CandidateId b) const { return rank_.at(a) == rank_.at(b); }

  bool operator==(const WeakOrder& other) const { return groups_ == other.groups_; }
  std::strong_ordering operator<=>(const WeakOrder& other) const
  {
    if (auto cmp = rank_.size() <=> other.rank_.size(); cmp != 0)
      return cmp;
    return groups_ <=> other.groups_;
  }

private:
  static constexpr std::uint32_t kUnranked = UINT32_MAX;

  std::vector<CandidateSet> groups_;
  std::vector<std::uint32_t> rank_;
};

enum class OrderClass { Total, TopOrder, BottomOrder, Weak };

inline std::string_view to_string(OrderClass cls)
{
  switch (cls) {
    case OrderClass::Total: return "total";
    case OrderClass::TopOrder: return "top";
    case OrderClass::BottomOrder: return "bottom";
    case OrderClass::Weak: return "weak";
  }
  return "weak";
}

/// Most specific class; Total wins over Top/Bottom.
inline OrderClass classify_order(const WeakOrder& order)
{
  const auto& groups = order.groups();
  const std::size_t r = groups.size();
  auto tied = [&](std::size_t g) { return groups[g].size() > 1; };

  bool any_inner_tie = false;
  for (std::size_t g = 1; g + 1 < r; ++g)
    any_inner_tie = any_inner_tie || tied(g);

  const bool first_tied = r > 0 && tied(0);
  const bool last_tied = r > 0 && tied(r - 1);

  if (!first_tied && !last_tied && !any_inner_tie)
    return OrderClass::Total;
  if (any_inner_tie)
    return OrderClass::Weak;
  // Only the boundary groups carry ties from here on. With a single group the
  // vote is both a top and a bottom order; report it as a top order.
  if (r == 1 || !first_tied)
    return OrderClass::TopOrder;
  if (!last_tied)
    return OrderClass::BottomOrder;
  return OrderClass::Weak;
}

struct WeightedVoter
{
  WeakOrder order;
  Integer weight{1};

  bool operator==(const WeightedVoter&) const = default;
};

/// Candidates plus weighted voters over exactly those candidates.
class Profile
{
public:
  Profile() = default;

  explicit Profile(std::vector<std::string> names, std::vector<WeightedVoter> voters = {})
    : names_(std::move(names)), voters_(std::move(voters))
  {
    std::set<std::string_view> seen;
    for (const auto& name : names_) {
      if (name.empty())
        throw ValidationError("candidate names must be non-empty");
      if (!seen.insert(name).second)
        throw ValidationError("duplicate candidate name '" + name + "'");
    }
    for (const auto& voter : voters_)
      check_voter(voter);
  }

  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::vector<WeightedVoter>& voters() const noexcept { return voters_; }
  std::size_t candidate_count() const noexcept { return names_.size(); }
  const std::string& name(CandidateId c) const { return names_.at(c); }

  std::optional<CandidateId> find(std::string_view name) const
  {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name)
        return static_cast<CandidateId>(i);
    return std::nullopt;
  }

  CandidateId id_of(std::string_view name) const
  {
    if (auto id = find(name))
      return *id;
    throw ValidationError("unknown candidate '" + std::string(name) + "'");
  }

  Profile with_voters(std::vector<WeightedVoter> voters) const { return Profile(names_, std::move(voters)); }

  void add_voter(WeightedVoter voter)
  {
    check_voter(voter);
    voters_.push_back(std::move(voter));
  }

  Integer total_weight() const
  {
    Integer total = 0;
    for (const auto& v : voters_)
      total += v.weight;
    return total;
  }

  bool operator==(const Profile&) const = default;

private:
  void check_voter(const WeightedVoter& voter) const
  {
    if (voter.weight < 1)
      throw ValidationError("voter weight must be a positive integer");
    if (voter.order.candidate_count() != names_.size())
      throw ValidationError("voter order covers " + std::to_string(voter.order.candidate_count()) +
                            " candidates, profile has " + std::to_string(names_.size()));
  }

  std::vector<std::string> names_;
  std::vector<WeightedVoter> voters_;
};

/// Candidates that attain the maximum of a per-candidate table, by id.
template<class T>
CandidateSet argmax_set(const std::vector<T>& values)
{
  CandidateSet best;
  for (std::size_t c = 0; c < values.size(); ++c) {
    if (best.empty() || values[c] > values[best.front()])
      best.assign(1, static_cast<CandidateId>(c));
    else if (values[c] == values[best.front()])
      best.push_back(static_cast<CandidateId>(c));
  }
  return best;
}

/// Visit every weak order over m candidates (ordered set partitions).
inline void for_each_weak_order(std::size_t m, const std::function<void(const WeakOrder&)>& visit)
{
  if (m == 0)
    return;
  std::vector<std::uint32_t> level(m, 0);
  while (true) {
    const std::uint32_t top = *std::max_element(level.begin(), level.end());
    std::vector<CandidateSet> groups(top + 1);
    for (std::size_t c = 0; c < m; ++c)
      groups[level[c]].push_back(static_cast<CandidateId>(c));
    if (std::none_of(groups.begin(), groups.end(), [](const auto& g) { return g.empty(); }))
      visit(WeakOrder(std::move(groups), m));

    std::size_t i = 0;
    while (i < m && ++level[i] == m)
      level[i++] = 0;
    if (i == m)
      return;
  }
}

/// "a~b > c" rendering with candidate names.
inline std::string format_order(const WeakOrder& order, std::span<const std::string> names)
{
  std::string out;
  for (std::size_t g = 0; g < order.group_count(); ++g) {
    if (g > 0)
      out += " > ";
    const auto& group = order.groups()[g];
    for (std::size_t i = 0; i < group.size(); ++i) {
      if (i > 0)
        out += "~";
      out += names[group[i]];
    }
  }
  return out;
}

/// Inverse of format_order; whitespace is ignored.
inline WeakOrder parse_order(std::string_view text, std::span<const std::string> names)
{
  std::vector<CandidateSet> groups(1);
  std::string token;
  auto flush = [&] {
    if (token.empty())
      throw ValidationError("empty candidate name in vote '" + std::string(text) + "'");
    auto it = std::find(names.begin(), names.end(), token);
    if (it == names.end())
      throw ValidationError("unknown candidate '" + token + "' in vote");
    groups.back().push_back(static_cast<CandidateId>(it - names.begin()));
    token.clear();
  };
  for (char ch : text) {
    if (ch == ' ' || ch == '\t')
      continue;
    if (ch == '~') {
      flush();
    } else if (ch == '>') {
      flush();
      groups.emplace_back();
    } else {
      token += ch;
    }
  }
  flush();
  return WeakOrder(std::move(groups), names.size());
}

} // namespace sptie

#endif // SPTIE_CORE_HPP
