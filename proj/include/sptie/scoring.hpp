#ifndef SPTIE_SCORING_HPP
#define SPTIE_SCORING_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sptie/core.hpp"

namespace sptie {

/// Positional scores alpha_1 >= alpha_2 >= ... >= alpha_m >= 0.
class ScoringVector
{
public:
  ScoringVector() = default;

  explicit ScoringVector(std::vector<std::int64_t> alphas)
    : alphas_(std::move(alphas))
  {
    if (alphas_.empty())
      throw ValidationError("scoring vector must have at least one entry");
    for (std::size_t i = 0; i < alphas_.size(); ++i) {
      if (alphas_[i] < 0)
        throw ValidationError("scoring vector entries must be natural numbers");
      if (i > 0 && alphas_[i] > alphas_[i - 1])
        throw ValidationError("scoring vector must be non-increasing");
    }
  }

  static ScoringVector plurality(std::size_t m)
  {
    std::vector<std::int64_t> a(m, 0);
    a.at(0) = 1;
    return ScoringVector(std::move(a));
  }

  static ScoringVector veto(std::size_t m)
  {
    std::vector<std::int64_t> a(m, 1);
    a.at(m - 1) = 0;
    return ScoringVector(std::move(a));
  }

  static ScoringVector borda(std::size_t m)
  {
    std::vector<std::int64_t> a(m);
    for (std::size_t i = 0; i < m; ++i)
      a[i] = static_cast<std::int64_t>(m - 1 - i);
    return ScoringVector(std::move(a));
  }

  static ScoringVector triviality(std::size_t m) { return ScoringVector(std::vector<std::int64_t>(m, 0)); }

  /// "4,3,2,0,0"
  static ScoringVector parse(std::string_view csv)
  {
    std::vector<std::int64_t> a;
    std::string token;
    auto flush = [&] {
      if (token.empty())
        throw ValidationError("empty entry in scoring vector '" + std::string(csv) + "'");
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size())
        throw ValidationError("bad scoring vector entry '" + token + "'");
      a.push_back(v);
      token.clear();
    };
    for (char ch : csv) {
      if (ch == ',')
        flush();
      else if (ch != ' ')
        token += ch;
    }
    flush();
    return ScoringVector(std::move(a));
  }

  std::size_t size() const noexcept { return alphas_.size(); }

  /// 1-based, matching positional notation.
  std::int64_t alpha(std::size_t position) const { return alphas_.at(position - 1); }

  const std::vector<std::int64_t>& values() const noexcept { return alphas_; }

  std::string str() const
  {
    std::string out;
    for (std::size_t i = 0; i < alphas_.size(); ++i) {
      if (i > 0)
        out += ",";
      out += std::to_string(alphas_[i]);
    }
    return out;
  }

  bool operator==(const ScoringVector&) const = default;

private:
  std::vector<std::int64_t> alphas_;
};

/// How a tied group G_i is scored.
enum class Extension { Min, Max, RoundDown, Average };

inline constexpr Extension kAllExtensions[] = {Extension::Min, Extension::Max, Extension::RoundDown,
                                               Extension::Average};

inline std::string_view to_string(Extension ext)
{
  switch (ext) {
    case Extension::Min: return "min";
    case Extension::Max: return "max";
    case Extension::RoundDown: return "round-down";
    case Extension::Average: return "average";
  }
  return "min";
}

inline Extension parse_extension(std::string_view text)
{
  if (text == "min")
    return Extension::Min;
  if (text == "max")
    return Extension::Max;
  if (text == "round-down" || text == "rounddown" || text == "round_down")
    return Extension::RoundDown;
  if (text == "average" || text == "avg")
    return Extension::Average;
  throw ValidationError("unknown scoring extension '" + std::string(text) + "'");
}

/// Exact score per candidate id.
using ScoreTable = std::vector<Rational>;

/// k_i: number of candidates strictly above group i.
inline std::vector<std::size_t> group_offsets(const WeakOrder& order)
{
  std::vector<std::size_t> offsets;
  offsets.reserve(order.group_count());
  std::size_t k = 0;
  for (const auto& group : order.groups()) {
    offsets.push_back(k);
    k += group.size();
  }
  return offsets;
}

namespace detail {

inline void check_dimension(const WeakOrder& order, const ScoringVector& vector)
{
  if (order.candidate_count() != vector.size())
    throw DimensionError("scoring vector has " + std::to_string(vector.size()) + " entries for " +
                         std::to_string(order.candidate_count()) + " candidates");
}

/// Score of each member of group i (0-based, k candidates above it) as a
/// numerator/denominator pair.
inline std::pair<std::int64_t, std::int64_t> group_score(const ScoringVector& vector, Extension ext,
                                                         std::size_t m, std::size_t r, std::size_t i,
                                                         std::size_t k, std::size_t size)
{
  switch (ext) {
    case Extension::Min: return {vector.alpha(k + size), 1};
    case Extension::Max: return {vector.alpha(k + 1), 1};
    case Extension::RoundDown: return {vector.alpha(m - r + i + 1), 1};
    case Extension::Average: {
      std::int64_t sum = 0;
      for (std::size_t j = k + 1; j <= k + size; ++j)
        sum += vector.alpha(j);
      return {sum, static_cast<std::int64_t>(size)};
    }
  }
  return {0, 1};
}

} // namespace detail

inline ScoreTable score_vote(const WeakOrder& order, const ScoringVector& vector, Extension ext)
{
  detail::check_dimension(order, vector);
  const std::size_t m = order.candidate_count();
  const std::size_t r = order.group_count();
  ScoreTable table(m);
  std::size_t k = 0;
  for (std::size_t i = 0; i < r; ++i) {
    const auto& group = order.groups()[i];
    auto [num, den] = detail::group_score(vector, ext, m, r, i, k, group.size());
    const Rational s{Integer(num), Integer(den)};
    for (CandidateId c : group)
      table[c] = s;
    k += group.size();
  }
  return table;
}

/**
 * Integer variant of score_vote scaled by `scale`, which must be a multiple
 * of every group size when ext is Average (see score_scale).
 */
inline std::vector<std::int64_t> scaled_vote_scores(const WeakOrder& order, const ScoringVector& vector,
                                                    Extension ext, std::int64_t scale)
{
  detail::check_dimension(order, vector);
  const std::size_t m = order.candidate_count();
  const std::size_t r = order.group_count();
  std::vector<std::int64_t> out(m);
  std::size_t k = 0;
  for (std::size_t i = 0; i < r; ++i) {
    const auto& group = order.groups()[i];
    auto [num, den] = detail::group_score(vector, ext, m, r, i, k, group.size());
    if (scale % den != 0)
      throw ContractError("score scale is not a multiple of the group size");
    for (CandidateId c : group)
      out[c] = num * (scale / den);
    k += group.size();
  }
  return out;
}

/// Smallest scale making every extension score of an m-candidate vote integral.
inline std::int64_t score_scale(std::size_t m, Extension ext)
{
  if (ext != Extension::Average)
    return 1;
  std::int64_t l = 1;
  for (std::int64_t i = 2; i <= static_cast<std::int64_t>(m); ++i)
    l = std::lcm(l, i);
  return l;
}

inline ScoreTable score_profile(const Profile& profile, const ScoringVector& vector, Extension ext)
{
  const std::size_t m = profile.candidate_count();
  if (vector.size() != m)
    throw DimensionError("scoring vector has " + std::to_string(vector.size()) + " entries for " +
                         std::to_string(m) + " candidates");
  ScoreTable total(m, Rational(0));
  for (const auto& voter : profile.voters()) {
    const ScoreTable vote = score_vote(voter.order, vector, ext);
    for (std::size_t c = 0; c < m; ++c)
      total[c] += vote[c] * voter.weight;
  }
  return total;
}

/// Nonunique winner model: every top scorer wins.
inline CandidateSet scoring_winners(const Profile& profile, const ScoringVector& vector, Extension ext)
{
  return argmax_set(score_profile(profile, vector, ext));
}

} // namespace sptie

#endif // SPTIE_SCORING_HPP
