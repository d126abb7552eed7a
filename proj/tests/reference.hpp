#ifndef SPTIE_TESTS_REFERENCE_HPP
#define SPTIE_TESTS_REFERENCE_HPP

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "sptie/sptie.hpp"

/// Peakedness checks written straight from the model definitions, without the library's helpers.
namespace sptie::reference {

/// rank[i]: group index of the candidate at axis position i, over [lo, hi).
inline std::vector<std::size_t> ranks(const WeakOrder& v, const Axis& axis)
{
  std::vector<std::size_t> r(axis.size());
  for (std::size_t i = 0; i < axis.size(); ++i)
    r[i] = v.group_of(axis.at(i));
  return r;
}

inline bool strictly_up(const std::vector<std::size_t>& r, std::size_t from, std::size_t to)
{
  for (std::size_t i = from; i + 1 < to; ++i)
    if (!(r[i + 1] < r[i]))
      return false;
  return true;
}

inline bool strictly_down(const std::vector<std::size_t>& r, std::size_t from, std::size_t to)
{
  for (std::size_t i = from; i + 1 < to; ++i)
    if (!(r[i] < r[i + 1]))
      return false;
  return true;
}

/// Some Y = [y0, y1) of most preferred candidates (a single one unless `plateau`) inside [lo, hi)
/// with strict increase up to it and strict decrease after it.
inline bool peaked_on(const std::vector<std::size_t>& r, std::size_t lo, std::size_t hi, bool plateau)
{
  if (lo == hi)
    return false;
  const std::size_t best = *std::min_element(r.begin() + static_cast<std::ptrdiff_t>(lo), r.begin() + static_cast<std::ptrdiff_t>(hi));
  for (std::size_t y0 = lo; y0 < hi; ++y0)
    for (std::size_t y1 = y0 + 1; y1 <= hi; ++y1) {
      if (!plateau && y1 != y0 + 1)
        continue;
      bool top = true;
      for (std::size_t i = y0; i < y1; ++i)
        top = top && r[i] == best;
      // Y holds every most preferred candidate of the stretch.
      for (std::size_t i = lo; i < hi; ++i)
        if ((i < y0 || i >= y1) && r[i] == best)
          top = false;
      if (top && strictly_up(r, lo, y0 + 1) && strictly_down(r, y1 - 1, hi))
        return true;
    }
  return false;
}

inline bool reference_sp(const WeakOrder& v, const Axis& axis) { return peaked_on(ranks(v, axis), 0, axis.size(), false); }

inline bool reference_spl(const WeakOrder& v, const Axis& axis) { return peaked_on(ranks(v, axis), 0, axis.size(), true); }

inline bool reference_oo(const WeakOrder& v, const Axis& axis)
{
  const auto r = ranks(v, axis);
  const std::size_t m = axis.size();
  if (m > 1 && v.group_count() == 1)
    return true;  // every candidate outside, mutually tied
  for (std::size_t lo = 0; lo < m; ++lo)
    for (std::size_t hi = lo + 1; hi <= m; ++hi) {
      if (!peaked_on(r, lo, hi, false))
        continue;
      bool ok = true;
      std::optional<std::size_t> outside;
      for (std::size_t i = 0; i < m && ok; ++i) {
        if (i >= lo && i < hi)
          continue;
        if (outside && *outside != r[i])
          ok = false;
        outside = r[i];
        for (std::size_t j = lo; j < hi && ok; ++j)
          ok = r[j] < r[i];
      }
      if (ok)
        return true;
    }
  return false;
}

/// Some tie-breaking of the vote is single-peaked.
inline bool reference_psp(const WeakOrder& v, const Axis& axis)
{
  std::vector<CandidateSet> groups = v.groups();
  std::function<bool(std::size_t)> rec = [&](std::size_t g) -> bool {
    if (g == groups.size()) {
      std::vector<CandidateId> ranking;
      for (const auto& group : groups)
        ranking.insert(ranking.end(), group.begin(), group.end());
      return reference_sp(WeakOrder::total(ranking), axis);
    }
    std::sort(groups[g].begin(), groups[g].end());
    do {
      if (rec(g + 1))
        return true;
    } while (std::next_permutation(groups[g].begin(), groups[g].end()));
    return false;
  };
  return rec(0);
}

inline bool reference_valid(const WeakOrder& v, const Axis& axis, SPModel model)
{
  switch (model) {
    case SPModel::SinglePeaked: return reference_sp(v, axis);
    case SPModel::SinglePlateaued: return reference_spl(v, axis);
    case SPModel::OutsideOptions: return reference_oo(v, axis);
    case SPModel::PossiblySinglePeaked: return reference_psp(v, axis);
  }
  return false;
}

} // namespace sptie::reference

#endif // SPTIE_TESTS_REFERENCE_HPP
