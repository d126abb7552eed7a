#ifndef SPTIE_ORACLE_HPP
#define SPTIE_ORACLE_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <memory>
#include <numeric>
#include <optional>
#include <unordered_map>
#include <vector>

#include "sptie/manipulation.hpp"

namespace sptie {

struct OracleOptions
{
  /// Largest number of distinct partial outcomes kept after any manipulator.
  std::size_t max_states = 4'000'000;
  /// Restrict manipulators to votes ranking p uniquely first. Defaults to
  /// true for scoring rules and false for Copeland and elimination veto.
  std::optional<bool> p_first_only;
  /// Drop partial outcomes that another one beats for p on every rival.
  /// Only used for scoring rules.
  bool dominance_pruning = true;
};

namespace detail {

using Tally = std::vector<std::int64_t>;

struct TallyHash
{
  std::size_t operator()(const Tally& t) const noexcept
  {
    std::uint64_t h = 1469598103934665603ull;
    for (auto v : t) {
      h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

inline std::int64_t to_int64(const Integer& value, const char* what)
{
  if (value > Integer(std::numeric_limits<std::int64_t>::max() / 4))
    throw CapacityError(std::string(what) + " too large for the exhaustive oracle");
  return static_cast<std::int64_t>(value);
}

/**
 * Each vote is mapped to an integer tally; the outcome of an election
 * depends only on the weighted sum of the tallies of its votes.
 */
class OutcomeModel
{
public:
  virtual ~OutcomeModel() = default;
  virtual std::size_t width() const = 0;
  virtual Tally tally(const WeakOrder& vote) const = 0;
  virtual bool preferred_wins(const Tally& total) const = 0;
  /// Margins of each rival over p when smaller is better for p, if the rule is monotone that way.
  virtual bool supports_dominance() const { return false; }
  virtual void rival_gaps(const Tally&, Tally&) const {}
};

/// Scaled positional scores.
class ScoringOutcome final : public OutcomeModel
{
public:
  ScoringOutcome(const ScoringRule& rule, std::size_t m, CandidateId p)
    : rule_(rule), m_(m), p_(p), scale_(score_scale(m, rule.extension))
  {}

  std::size_t width() const override { return m_; }
  Tally tally(const WeakOrder& vote) const override
  {
    return scaled_vote_scores(vote, rule_.vector, rule_.extension, scale_);
  }
  bool preferred_wins(const Tally& total) const override
  {
    return std::all_of(total.begin(), total.end(), [&](auto s) { return s <= total[p_]; });
  }
  bool supports_dominance() const override { return true; }
  void rival_gaps(const Tally& total, Tally& gaps) const override
  {
    gaps.clear();
    for (std::size_t c = 0; c < m_; ++c)
      if (c != p_)
        gaps.push_back(total[c] - total[p_]);
  }

private:
  ScoringRule rule_;
  std::size_t m_;
  CandidateId p_;
  std::int64_t scale_;
};

/// Pairwise majority margins for a < b, row-major upper triangle.
class CopelandOutcome final : public OutcomeModel
{
public:
  CopelandOutcome(const CopelandRule& rule, std::size_t m, CandidateId p)
    : m_(m), p_(p), tie_num_(to_int64(numerator(rule.alpha()), "alpha")),
      tie_den_(to_int64(denominator(rule.alpha()), "alpha"))
  {}

  std::size_t width() const override { return m_ * (m_ - 1) / 2; }
  Tally tally(const WeakOrder& vote) const override
  {
    Tally t;
    t.reserve(width());
    for (CandidateId a = 0; a < m_; ++a)
      for (CandidateId b = a + 1; b < m_; ++b)
        t.push_back(vote.prefers(a, b) ? 1 : vote.prefers(b, a) ? -1 : 0);
    return t;
  }
  bool preferred_wins(const Tally& total) const override
  {
    std::vector<std::int64_t> points(m_, 0);
    std::size_t k = 0;
    for (CandidateId a = 0; a < m_; ++a)
      for (CandidateId b = a + 1; b < m_; ++b, ++k) {
        if (total[k] > 0) {
          points[a] += tie_den_;
        } else if (total[k] < 0) {
          points[b] += tie_den_;
        } else {
          points[a] += tie_num_;
          points[b] += tie_num_;
        }
      }
    return std::all_of(points.begin(), points.end(), [&](auto s) { return s <= points[p_]; });
  }

private:
  std::size_t m_;
  CandidateId p_;
  std::int64_t tie_num_;
  std::int64_t tie_den_;
};

/// For every subset R of at least two candidates and c in R: does the vote,
/// restricted to R, rank c last?
class EliminationOutcome final : public OutcomeModel
{
public:
  EliminationOutcome(const EliminationVetoRule& rule, std::span<const std::string> names, CandidateId p)
    : m_(names.size()), p_(p), offset_(std::size_t{1} << m_, 0), name_rank_(m_)
  {
    std::size_t at = 0;
    for (std::uint32_t mask = 0; mask < offset_.size(); ++mask) {
      offset_[mask] = at;
      if (std::popcount(mask) >= 2)
        at += m_;
    }
    width_ = at;
    std::vector<CandidateId> by_name(m_);
    std::iota(by_name.begin(), by_name.end(), CandidateId{0});
    std::sort(by_name.begin(), by_name.end(), [&](CandidateId x, CandidateId y) { return names[x] < names[y]; });
    for (std::size_t i = 0; i < m_; ++i)
      name_rank_[by_name[i]] = i;
    smallest_first_ = rule.tie_break == EliminationTieBreak::SmallestNameFirst;
  }

  std::size_t width() const override { return width_; }
  Tally tally(const WeakOrder& vote) const override
  {
    Tally t(width_, 0);
    for (std::uint32_t mask = 0; mask < offset_.size(); ++mask) {
      if (std::popcount(mask) < 2)
        continue;
      std::size_t worst = 0;
      for (CandidateId c = 0; c < m_; ++c)
        if (mask >> c & 1)
          worst = std::max(worst, vote.group_of(c));
      for (CandidateId c = 0; c < m_; ++c)
        if ((mask >> c & 1) && vote.group_of(c) == worst)
          t[offset_[mask] + c] = 1;
    }
    return t;
  }
  bool preferred_wins(const Tally& total) const override
  {
    std::uint32_t mask = static_cast<std::uint32_t>(offset_.size() - 1);
    while (std::popcount(mask) > 1) {
      std::optional<CandidateId> out;
      for (CandidateId c = 0; c < m_; ++c) {
        if (!(mask >> c & 1))
          continue;
        if (!out) {
          out = c;
          continue;
        }
        const auto mine = total[offset_[mask] + c];
        const auto theirs = total[offset_[mask] + *out];
        if (mine > theirs || (mine == theirs && ((name_rank_[c] < name_rank_[*out]) == smallest_first_)))
          out = c;
      }
      mask &= ~(std::uint32_t{1} << *out);
    }
    return mask == (std::uint32_t{1} << p_);
  }

private:
  std::size_t m_;
  CandidateId p_;
  std::vector<std::size_t> offset_;
  std::vector<std::size_t> name_rank_;
  std::size_t width_ = 0;
  bool smallest_first_ = true;
};

inline std::unique_ptr<OutcomeModel> outcome_model(const CwcmInstance& instance)
{
  const CandidateId p = instance.preferred;
  if (const auto* s = std::get_if<ScoringRule>(&instance.rule))
    return std::make_unique<ScoringOutcome>(*s, instance.candidate_count(), p);
  if (const auto* c = std::get_if<CopelandRule>(&instance.rule))
    return std::make_unique<CopelandOutcome>(*c, instance.candidate_count(), p);
  if (instance.candidate_count() > 20)
    throw CapacityError("elimination veto oracle supports at most 20 candidates");
  return std::make_unique<EliminationOutcome>(std::get<EliminationVetoRule>(instance.rule), instance.candidates, p);
}

struct Node
{
  Tally total;
  std::uint32_t parent;
  std::uint32_t vote;
};

/// Keeps the nodes whose rival gaps no other kept node undercuts everywhere.
inline std::vector<Node> prune_dominated(std::vector<Node> nodes, const OutcomeModel& model)
{
  const std::size_t n = nodes.size();
  std::vector<Tally> gaps(n);
  std::vector<std::int64_t> sums(n);
  for (std::size_t i = 0; i < n; ++i) {
    model.rival_gaps(nodes[i].total, gaps[i]);
    sums[i] = std::accumulate(gaps[i].begin(), gaps[i].end(), std::int64_t{0});
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) { return sums[x] < sums[y]; });

  std::vector<std::size_t> kept;
  for (std::size_t i : order) {
    bool dominated = false;
    for (std::size_t j : kept) {
      if (std::equal(gaps[j].begin(), gaps[j].end(), gaps[i].begin(), [](auto a, auto b) { return a <= b; })) {
        dominated = true;
        break;
      }
    }
    if (!dominated)
      kept.push_back(i);
  }
  std::sort(kept.begin(), kept.end());
  std::vector<Node> out;
  out.reserve(kept.size());
  for (std::size_t i : kept)
    out.push_back(std::move(nodes[i]));
  return out;
}

} // namespace detail

/// Votes the oracle lets each manipulator choose from.
inline std::vector<WeakOrder> oracle_vote_space(const CwcmInstance& instance, const OracleOptions& options = {})
{
  const bool p_first = options.p_first_only.value_or(std::holds_alternative<ScoringRule>(instance.rule));
  VoteFilter filter;
  if (p_first)
    filter.uniquely_first = instance.preferred;
  return enumerate_consistent_votes(instance.axis, instance.model, filter);
}

/**
 * Exhaustive CWCM decision procedure.
 *
 * Manipulators are processed in order; after each one the set of reachable
 * election tallies is deduplicated, so manipulators of equal weight never
 * multiply the work. The witness is deterministic for a given instance.
 */
inline ManipulationResult solve_cwcm_oracle(const CwcmInstance& instance, const OracleOptions& options = {})
{
  instance.validate();
  const auto model = detail::outcome_model(instance);
  const auto votes = oracle_vote_space(instance, options);

  std::vector<detail::Tally> tallies;
  tallies.reserve(votes.size());
  std::int64_t widest = 1;
  for (const auto& v : votes) {
    tallies.push_back(model->tally(v));
    for (auto x : tallies.back())
      widest = std::max<std::int64_t>(widest, x < 0 ? -x : x);
  }

  // Every tally entry stays below (total weight) * widest.
  Integer total_weight = 0;
  for (const auto& v : instance.nonmanipulators)
    total_weight += v.weight;
  for (const auto& w : instance.manipulator_weights)
    total_weight += w;
  detail::to_int64(total_weight * widest, "total weight");

  detail::Tally start(model->width(), 0);
  for (const auto& voter : instance.nonmanipulators) {
    const auto t = model->tally(voter.order);
    const auto w = detail::to_int64(voter.weight, "voter weight");
    for (std::size_t i = 0; i < t.size(); ++i)
      start[i] += w * t[i];
  }

  const bool prune = options.dominance_pruning && model->supports_dominance();
  std::vector<std::vector<detail::Node>> layers;
  layers.push_back({detail::Node{std::move(start), 0, 0}});
  for (const auto& weight : instance.manipulator_weights) {
    const auto w = detail::to_int64(weight, "manipulator weight");
    std::unordered_map<detail::Tally, std::uint32_t, detail::TallyHash> seen;
    std::vector<detail::Node> next;
    const auto& current = layers.back();
    for (std::uint32_t i = 0; i < current.size(); ++i)
      for (std::uint32_t v = 0; v < tallies.size(); ++v) {
        detail::Tally t = current[i].total;
        for (std::size_t k = 0; k < t.size(); ++k)
          t[k] += w * tallies[v][k];
        if (seen.emplace(t, static_cast<std::uint32_t>(next.size())).second)
          next.push_back({std::move(t), i, v});
      }
    if (prune)
      next = detail::prune_dominated(std::move(next), *model);
    if (next.size() > options.max_states)
      throw CapacityError("oracle state budget of " + std::to_string(options.max_states) + " exceeded");
    layers.push_back(std::move(next));
  }

  const auto& last = layers.back();
  for (std::uint32_t i = 0; i < last.size(); ++i) {
    if (!model->preferred_wins(last[i].total))
      continue;
    std::vector<WeakOrder> witness(instance.manipulator_weights.size());
    std::uint32_t at = i;
    for (std::size_t layer = layers.size() - 1; layer > 0; --layer) {
      witness[layer - 1] = votes[layers[layer][at].vote];
      at = layers[layer][at].parent;
    }
    return {true, std::move(witness), SolverTag::Oracle};
  }
  return {false, std::nullopt, SolverTag::Oracle};
}

enum class SolverChoice { Auto, Polytime, Oracle };

inline SolverChoice parse_solver_choice(std::string_view text)
{
  if (text == "auto")
    return SolverChoice::Auto;
  if (text == "polytime")
    return SolverChoice::Polytime;
  if (text == "oracle")
    return SolverChoice::Oracle;
  throw ValidationError("unknown solver '" + std::string(text) + "'");
}

/// Auto tries the polynomial-time solver and falls back to the oracle only when it is not applicable.
inline ManipulationResult solve_cwcm(const CwcmInstance& instance, SolverChoice choice = SolverChoice::Auto,
                                     const OracleOptions& options = {})
{
  switch (choice) {
    case SolverChoice::Polytime: return solve_cwcm_polytime(instance);
    case SolverChoice::Oracle: return solve_cwcm_oracle(instance, options);
    case SolverChoice::Auto:
      try {
        return solve_cwcm_polytime(instance);
      } catch (const NotApplicableError&) {
        return solve_cwcm_oracle(instance, options);
      }
  }
  return solve_cwcm_oracle(instance, options);
}

} // namespace sptie

#endif // SPTIE_ORACLE_HPP
