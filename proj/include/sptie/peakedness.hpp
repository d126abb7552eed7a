#ifndef SPTIE_PEAKEDNESS_HPP
#define SPTIE_PEAKEDNESS_HPP

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "sptie/core.hpp"

namespace sptie {

/// Largest candidate count for exhaustive axis search and vote enumeration.
inline constexpr std::size_t kEnumerationCap = 9;

/// Societal left-to-right order of the candidates.
class Axis
{
public:
  Axis() = default;

  explicit Axis(std::vector<CandidateId> order) : order_(std::move(order)), position_(order_.size(), kAbsent)
  {
    for (std::size_t i = 0; i < order_.size(); ++i) {
      const CandidateId c = order_[i];
      if (c >= order_.size() || position_[c] != kAbsent)
        throw ValidationError("axis must be a permutation of the candidates");
      position_[c] = i;
    }
  }

  static Axis identity(std::size_t m)
  {
    std::vector<CandidateId> order(m);
    std::iota(order.begin(), order.end(), CandidateId{0});
    return Axis(std::move(order));
  }

  std::size_t size() const noexcept { return order_.size(); }
  CandidateId at(std::size_t position) const { return order_.at(position); }
  std::size_t position(CandidateId c) const
  {
    if (c >= position_.size())
      throw DomainError("candidate " + std::to_string(c) + " is not on the axis");
    return position_[c];
  }
  const std::vector<CandidateId>& order() const noexcept { return order_; }

  Axis reversed() const { return Axis(std::vector<CandidateId>(order_.rbegin(), order_.rend())); }

  /// Representative of {L, reverse(L)} whose first id is smaller than its last.
  Axis canonical() const
  {
    if (order_.size() > 1 && order_.front() > order_.back())
      return reversed();
    return *this;
  }

  bool operator==(const Axis& other) const { return order_ == other.order_; }

private:
  static constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);

  std::vector<CandidateId> order_;
  std::vector<std::size_t> position_;
};

enum class SPModel { SinglePeaked, SinglePlateaued, OutsideOptions, PossiblySinglePeaked };

inline constexpr SPModel kAllModels[] = {SPModel::SinglePeaked, SPModel::SinglePlateaued, SPModel::OutsideOptions,
                                         SPModel::PossiblySinglePeaked};

inline std::string_view to_string(SPModel model)
{
  switch (model) {
    case SPModel::SinglePeaked: return "single-peaked";
    case SPModel::SinglePlateaued: return "single-plateaued";
    case SPModel::OutsideOptions: return "outside-options";
    case SPModel::PossiblySinglePeaked: return "possibly-single-peaked";
  }
  return "single-peaked";
}

inline SPModel parse_model(std::string_view text)
{
  if (text == "single-peaked" || text == "sp")
    return SPModel::SinglePeaked;
  if (text == "single-plateaued" || text == "plateaued" || text == "spl")
    return SPModel::SinglePlateaued;
  if (text == "outside-options" || text == "oo")
    return SPModel::OutsideOptions;
  if (text == "possibly-single-peaked" || text == "possibly" || text == "psp")
    return SPModel::PossiblySinglePeaked;
  throw ValidationError("unknown single-peakedness model '" + std::string(text) + "'");
}

/// Half-open range [begin, end) of axis positions.
struct Segment
{
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const noexcept { return end - begin; }
  bool empty() const noexcept { return begin == end; }
  bool operator==(const Segment&) const = default;
};

/// O1 X Y Z O2, left to right, covering the whole axis.
struct PeakDecomposition
{
  Segment o1, x, y, z, o2;

  bool operator==(const PeakDecomposition&) const = default;
};

struct AxisSplit
{
  std::size_t left = 0;   ///< candidates left of p (m1)
  std::size_t right = 0;  ///< candidates right of p (m2)
};

inline AxisSplit split_at(const Axis& axis, CandidateId p)
{
  const std::size_t pos = axis.position(p);
  return {pos, axis.size() - pos - 1};
}

namespace detail {

/// Group index of each axis position; smaller is more preferred.
inline std::vector<std::size_t> levels_along(const WeakOrder& order, const Axis& axis)
{
  std::vector<std::size_t> level(axis.size());
  for (std::size_t i = 0; i < axis.size(); ++i)
    level[i] = order.group_of(axis.at(i));
  return level;
}

/**
 * Checks that `level` improves towards the plateau [y.begin, y.end) from both
 * ends of [lo, hi): strictly when `strict`, otherwise weakly.
 */
inline bool monotone_around(const std::vector<std::size_t>& level, std::size_t lo, std::size_t hi, Segment y,
                            bool strict)
{
  for (std::size_t i = lo; i + 1 < y.begin; ++i)
    if (strict ? !(level[i] > level[i + 1]) : !(level[i] >= level[i + 1]))
      return false;
  for (std::size_t i = y.end; i + 1 < hi; ++i)
    if (strict ? !(level[i] < level[i + 1]) : !(level[i] <= level[i + 1]))
      return false;
  return true;
}

/// Positions in [lo, hi) holding the best level within that range, if contiguous.
inline std::optional<Segment> top_plateau(const std::vector<std::size_t>& level, std::size_t lo, std::size_t hi)
{
  if (lo >= hi)
    return std::nullopt;
  const std::size_t best = *std::min_element(level.begin() + lo, level.begin() + hi);
  std::size_t first = hi, last = lo;
  std::size_t count = 0;
  for (std::size_t i = lo; i < hi; ++i)
    if (level[i] == best) {
      first = std::min(first, i);
      last = i;
      ++count;
    }
  if (last - first + 1 != count)
    return std::nullopt;
  return Segment{first, last + 1};
}

/// Strict single peak on [lo, hi) with a one-candidate top.
inline std::optional<PeakDecomposition> strict_peak(const std::vector<std::size_t>& level, std::size_t lo,
                                                    std::size_t hi, bool allow_plateau)
{
  auto y = top_plateau(level, lo, hi);
  if (!y || (!allow_plateau && y->size() != 1))
    return std::nullopt;
  if (!monotone_around(level, lo, hi, *y, true))
    return std::nullopt;
  return PeakDecomposition{{lo, lo}, {lo, y->begin}, *y, {y->end, hi}, {hi, hi}};
}

} // namespace detail

/**
 * Witness decomposition when `order` is consistent with `model` on `axis`.
 *
 * An all-tied vote over m >= 2 candidates is single-plateaued, possibly
 * single-peaked and (with every candidate outside) outside-options, but never
 * single-peaked.
 */
inline std::optional<PeakDecomposition> validate_vote(const WeakOrder& order, const Axis& axis, SPModel model)
{
  const std::size_t m = axis.size();
  if (order.candidate_count() != m)
    throw ValidationError("vote and axis range over different candidate sets");
  if (m == 0)
    return PeakDecomposition{};
  const auto level = detail::levels_along(order, axis);

  switch (model) {
    case SPModel::SinglePeaked: return detail::strict_peak(level, 0, m, false);
    case SPModel::SinglePlateaued: return detail::strict_peak(level, 0, m, true);
    case SPModel::PossiblySinglePeaked: {
      auto y = detail::top_plateau(level, 0, m);
      if (!y || !detail::monotone_around(level, 0, m, *y, false))
        return std::nullopt;
      return PeakDecomposition{{0, 0}, {0, y->begin}, *y, {y->end, m}, {m, m}};
    }
    case SPModel::OutsideOptions: {
      if (auto plain = detail::strict_peak(level, 0, m, false))
        return plain;
      if (order.group_count() == 1)
        return PeakDecomposition{{0, m}, {m, m}, {m, m}, {m, m}, {m, m}};
      // The outside candidates are exactly the last group; the rest must be
      // a contiguous stretch of the axis that is single-peaked on its own.
      const std::size_t bottom = order.group_count() - 1;
      std::size_t lo = m, hi = 0;
      for (std::size_t i = 0; i < m; ++i)
        if (level[i] != bottom) {
          lo = std::min(lo, i);
          hi = i + 1;
        }
      for (std::size_t i = lo; i < hi; ++i)
        if (level[i] == bottom)
          return std::nullopt;
      auto inner = detail::strict_peak(level, lo, hi, false);
      if (!inner)
        return std::nullopt;
      inner->o1 = {0, lo};
      inner->o2 = {hi, m};
      return inner;
    }
  }
  return std::nullopt;
}

inline bool validate_profile(const Profile& profile, const Axis& axis, SPModel model)
{
  for (const auto& voter : profile.voters())
    if (!validate_vote(voter.order, axis, model))
      return false;
  return true;
}

namespace detail {

inline void check_cap(std::size_t m, std::size_t cap, const char* what)
{
  if (m > cap)
    throw CapacityError(std::string(what) + " is exhaustive and limited to " + std::to_string(cap) +
                        " candidates (got " + std::to_string(m) + "); use desk-scale instances");
}

} // namespace detail

/// Exhaustive search over axes up to reversal; the first match in lexicographic order.
inline std::optional<Axis> find_axis(const Profile& profile, SPModel model, std::size_t cap = kEnumerationCap)
{
  const std::size_t m = profile.candidate_count();
  detail::check_cap(m, cap, "axis search");
  std::vector<CandidateId> order(m);
  std::iota(order.begin(), order.end(), CandidateId{0});
  do {
    if (m > 1 && order.front() > order.back())
      continue;
    Axis axis(order);
    if (validate_profile(profile, axis, model))
      return axis;
  } while (std::next_permutation(order.begin(), order.end()));
  return std::nullopt;
}

/// Restrictions applied while enumerating votes.
struct VoteFilter
{
  std::optional<CandidateId> uniquely_first;  ///< only votes ranking this candidate alone on top
  bool total_only = false;                    ///< only tie-free votes
};

/**
 * Every vote consistent with `model` on `axis` that passes `filter`, sorted
 * and duplicate-free.
 *
 * Votes are grown outwards from their top plateau: each further group takes
 * the next run of candidates on the left and/or the right.
 */
inline std::vector<WeakOrder> enumerate_consistent_votes(const Axis& axis, SPModel model, VoteFilter filter = {},
                                                         std::size_t cap = kEnumerationCap)
{
  const std::size_t m = axis.size();
  detail::check_cap(m, cap, "vote enumeration");
  std::set<WeakOrder> found;
  if (m == 0)
    return {};

  const bool strict = model != SPModel::PossiblySinglePeaked;
  const bool plateau_top = model == SPModel::SinglePlateaued || model == SPModel::PossiblySinglePeaked;
  std::vector<CandidateSet> groups;

  auto run = [&](std::size_t from, std::size_t to) {
    CandidateSet g;
    for (std::size_t i = from; i < to; ++i)
      g.push_back(axis.at(i));
    return g;
  };

  auto emit = [&] {
    WeakOrder vote(groups, m);
    if (filter.total_only && vote.group_count() != m)
      return;
    found.insert(std::move(vote));
  };

  // [lo, hi) is ranked already.
  auto grow = [&](auto&& self, std::size_t lo, std::size_t hi) -> void {
    if (lo == 0 && hi == m) {
      emit();
      return;
    }
    if (model == SPModel::OutsideOptions) {
      CandidateSet rest = run(0, lo);
      const auto right = run(hi, m);
      rest.insert(rest.end(), right.begin(), right.end());
      groups.push_back(std::move(rest));
      emit();
      groups.pop_back();
    }
    const std::size_t max_left = strict ? std::min<std::size_t>(lo, 1) : lo;
    const std::size_t max_right = strict ? std::min<std::size_t>(m - hi, 1) : m - hi;
    for (std::size_t i = 0; i <= max_left; ++i)
      for (std::size_t j = 0; j <= max_right; ++j) {
        if (i + j == 0)
          continue;
        CandidateSet g = run(lo - i, lo);
        const auto right = run(hi, hi + j);
        g.insert(g.end(), right.begin(), right.end());
        groups.push_back(std::move(g));
        self(self, lo - i, hi + j);
        groups.pop_back();
      }
  };

  for (std::size_t lo = 0; lo < m; ++lo)
    for (std::size_t hi = lo + 1; hi <= m; ++hi) {
      if (!plateau_top && hi - lo != 1)
        continue;
      if (filter.uniquely_first && !(hi - lo == 1 && axis.at(lo) == *filter.uniquely_first))
        continue;
      groups.assign(1, run(lo, hi));
      grow(grow, lo, hi);
    }

  if (model == SPModel::OutsideOptions && m > 1 && !filter.uniquely_first && !filter.total_only)
    found.insert(WeakOrder::all_tied(m));

  return {found.begin(), found.end()};
}

/// Whether validity under `from` implies validity under `to` for this profile.
inline bool check_model_implication(const Profile& profile, const Axis& axis, SPModel from, SPModel to)
{
  return !validate_profile(profile, axis, from) || validate_profile(profile, axis, to);
}

} // namespace sptie

#endif // SPTIE_PEAKEDNESS_HPP
