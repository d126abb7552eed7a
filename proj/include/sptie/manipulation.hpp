#ifndef SPTIE_MANIPULATION_HPP
#define SPTIE_MANIPULATION_HPP

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "sptie/core.hpp"
#include "sptie/elimination.hpp"
#include "sptie/pairwise.hpp"
#include "sptie/peakedness.hpp"
#include "sptie/scoring.hpp"

namespace sptie {

struct ScoringRule
{
  ScoringVector vector;
  Extension extension = Extension::Min;

  bool operator==(const ScoringRule&) const = default;
};

/// Elimination veto with the min extension and lexicographic tie-breaking.
struct EliminationVetoRule
{
  EliminationTieBreak tie_break = kDefaultEliminationTieBreak;

  bool operator==(const EliminationVetoRule&) const = default;
};

using Rule = std::variant<ScoringRule, CopelandRule, EliminationVetoRule>;

inline std::string describe(const Rule& rule)
{
  if (const auto* s = std::get_if<ScoringRule>(&rule))
    return "scoring:" + s->vector.str() + ":" + std::string(to_string(s->extension));
  if (const auto* c = std::get_if<CopelandRule>(&rule))
    return "copeland:" + c->alpha().str();
  return "elimveto";
}

/**
 * Constructive weighted coalitional manipulation question: can manipulators
 * with the given weights cast votes consistent with (axis, model) so that
 * `preferred` wins?
 */
struct CwcmInstance
{
  std::vector<std::string> candidates;
  std::vector<WeightedVoter> nonmanipulators;
  std::vector<Integer> manipulator_weights;
  CandidateId preferred = 0;
  Axis axis;
  SPModel model = SPModel::SinglePeaked;
  Rule rule;

  std::size_t candidate_count() const noexcept { return candidates.size(); }

  Profile nonmanipulator_profile() const { return Profile(candidates, nonmanipulators); }

  void validate() const
  {
    const Profile s = nonmanipulator_profile();
    if (axis.size() != candidates.size())
      throw ValidationError("axis length differs from the candidate count");
    if (preferred >= candidates.size())
      throw ValidationError("preferred candidate is not on the axis");
    for (const auto& w : manipulator_weights)
      if (w < 1)
        throw ValidationError("manipulator weights must be positive");
    if (!validate_profile(s, axis, model))
      throw ValidationError("nonmanipulators are not " + std::string(to_string(model)) + " on the axis");
    if (const auto* scoring = std::get_if<ScoringRule>(&rule); scoring && scoring->vector.size() != candidates.size())
      throw DimensionError("scoring vector length differs from the candidate count");
  }

  bool operator==(const CwcmInstance&) const = default;
};

enum class SolverTag { Polytime, Oracle };

inline std::string_view to_string(SolverTag tag) { return tag == SolverTag::Polytime ? "polytime" : "oracle"; }

struct ManipulationResult
{
  bool decision = false;
  /// One vote per manipulator, aligned with manipulator_weights; set iff decision.
  std::optional<std::vector<WeakOrder>> witness;
  SolverTag solver = SolverTag::Polytime;
};

/// S together with the manipulators casting `votes`.
inline Profile election_with(const CwcmInstance& instance, std::span<const WeakOrder> votes)
{
  if (votes.size() != instance.manipulator_weights.size())
    throw ContractError("one vote per manipulator required");
  std::vector<WeightedVoter> voters = instance.nonmanipulators;
  for (std::size_t i = 0; i < votes.size(); ++i)
    voters.push_back({votes[i], instance.manipulator_weights[i]});
  return Profile(instance.candidates, std::move(voters));
}

/// Nonunique winner for scoring and Copeland, unique winner for elimination veto.
inline bool preferred_wins(const Rule& rule, const Profile& election, CandidateId p)
{
  if (const auto* s = std::get_if<ScoringRule>(&rule)) {
    const auto w = scoring_winners(election, s->vector, s->extension);
    return std::find(w.begin(), w.end(), p) != w.end();
  }
  if (const auto* c = std::get_if<CopelandRule>(&rule)) {
    const auto w = copeland_winners(election, *c);
    return std::find(w.begin(), w.end(), p) != w.end();
  }
  return elimination_veto_winner(election, std::get<EliminationVetoRule>(rule).tie_break).winner == p;
}

/// Witness votes are model-consistent and make p win.
inline bool verify_witness(const CwcmInstance& instance, std::span<const WeakOrder> votes)
{
  if (votes.size() != instance.manipulator_weights.size())
    return false;
  for (const auto& v : votes)
    if (v.candidate_count() != instance.candidate_count() || !validate_vote(v, instance.axis, instance.model))
      return false;
  return preferred_wins(instance.rule, election_with(instance, votes), instance.preferred);
}

/**
 * Rewrites a consistent vote (A > P > B_1 > ... > B_l), p in P, so that p is
 * ranked uniquely first while A and P are spread into total orders and the
 * B groups are kept. The result stays consistent with the model and no
 * score gap score(p) - score(c) shrinks under any scoring extension.
 */
inline WeakOrder normalize_p_first(const WeakOrder& vote, const Axis& axis, SPModel model, CandidateId p)
{
  if (!validate_vote(vote, axis, model))
    throw ContractError("vote is not " + std::string(to_string(model)) + " on the axis");
  const auto& groups = vote.groups();
  const std::size_t g = vote.group_of(p);
  if (g == 0 && groups[0].size() == 1)
    return vote;

  CandidateSet above;
  for (std::size_t i = 0; i < g; ++i)
    above.insert(above.end(), groups[i].begin(), groups[i].end());
  const CandidateSet& tied = groups[g];

  // Phase of each candidate in A u P: lower phases are ranked first.
  std::vector<int> phase(vote.candidate_count(), -1);
  if (above.empty()) {
    for (CandidateId c : tied)
      phase[c] = 0;
  } else {
    std::size_t a_lo = axis.size(), a_hi = 0;
    for (CandidateId c : above) {
      a_lo = std::min(a_lo, axis.position(c));
      a_hi = std::max(a_hi, axis.position(c));
    }
    const bool p_left = axis.position(p) < a_lo;
    bool both_sides = false;
    for (CandidateId c : tied)
      both_sides = both_sides || ((axis.position(c) < a_lo) != p_left);
    for (CandidateId c : above)
      phase[c] = 1;
    for (CandidateId c : tied) {
      const bool same_side = (axis.position(c) < a_lo) == p_left;
      phase[c] = (!both_sides || same_side) ? 0 : 2;
    }
  }

  std::vector<CandidateId> head{p};
  std::size_t lo = axis.position(p), hi = lo;
  const std::size_t span = above.size() + tied.size();
  while (head.size() < span) {
    std::optional<CandidateId> left, right;
    if (lo > 0 && phase[axis.at(lo - 1)] >= 0)
      left = axis.at(lo - 1);
    if (hi + 1 < axis.size() && phase[axis.at(hi + 1)] >= 0)
      right = axis.at(hi + 1);
    if (!left && !right)
      throw std::logic_error("normalize_p_first: candidates above the tail are not contiguous");
    const bool take_left = left && (!right || phase[*left] <= phase[*right]);
    if (take_left) {
      head.push_back(*left);
      --lo;
    } else {
      head.push_back(*right);
      ++hi;
    }
  }
  for (std::size_t i = 1; i < head.size(); ++i)
    if (phase[head[i]] < phase[head[i - 1]])
      throw std::logic_error("normalize_p_first: phase order cannot be met on this axis");

  std::vector<CandidateSet> out;
  for (CandidateId c : head)
    out.push_back({c});
  for (std::size_t i = g + 1; i < groups.size(); ++i)
    out.push_back(groups[i]);
  WeakOrder result(std::move(out), vote.candidate_count());
  if (!validate_vote(result, axis, model))
    throw std::logic_error("normalize_p_first produced an inconsistent vote");
  return result;
}

/**
 * (a1 - ai)(a1 - aj) <= (ai - a(i+1))(aj - a(j+1)) for all 1 < i <= m1 + 1
 * and 1 < j <= m2 + 1.
 */
inline bool check_l_sp2p(const ScoringVector& vector, std::size_t m1, std::size_t m2)
{
  if (m1 + m2 + 1 != vector.size())
    throw DimensionError("m1 + m2 + 1 must equal the scoring vector length");
  const auto a = [&](std::size_t i) { return Integer(vector.alpha(i)); };
  for (std::size_t i = 2; i <= m1 + 1; ++i)
    for (std::size_t j = 2; j <= m2 + 1; ++j)
      if ((a(1) - a(i)) * (a(1) - a(j)) > (a(i) - a(i + 1)) * (a(j) - a(j + 1)))
        return false;
  return true;
}

/// The polynomial-time cases of the scoring solver, in the order they are tried.
enum class ScoringCase {
  PreferredAtEnd,    ///< p leftmost or rightmost: one forced vote
  SecondIsBottom,    ///< alpha_2 == alpha_m: any p-first total order
  FlatTopHalf,       ///< alpha_1 == alpha_{floor((m-1)/2)+2}
  AxisInequality,    ///< check_l_sp2p holds for the split
  TwoLevel,          ///< alpha_1 <= 2 alpha_2, alpha_1 > alpha_2 > 0, alpha_2 == alpha_{m-1} (normalized)
};

inline std::string_view to_string(ScoringCase c)
{
  switch (c) {
    case ScoringCase::PreferredAtEnd: return "preferred-at-end";
    case ScoringCase::SecondIsBottom: return "second-is-bottom";
    case ScoringCase::FlatTopHalf: return "flat-top-half";
    case ScoringCase::AxisInequality: return "axis-inequality";
    case ScoringCase::TwoLevel: return "two-level";
  }
  return "";
}

inline std::optional<ScoringCase> scoring_polytime_case(const ScoringVector& vector, AxisSplit split)
{
  const std::size_t m = vector.size();
  if (split.left == 0 || split.right == 0)
    return ScoringCase::PreferredAtEnd;
  // Shift so that alpha_m = 0; positional outcomes do not change.
  const auto a = [&](std::size_t i) { return vector.alpha(i) - vector.alpha(m); };
  if (a(2) == 0)
    return ScoringCase::SecondIsBottom;
  if (a(1) == a((m - 1) / 2 + 2))
    return ScoringCase::FlatTopHalf;
  if (check_l_sp2p(vector, split.left, split.right))
    return ScoringCase::AxisInequality;
  if (a(1) <= 2 * a(2) && a(1) > a(2) && a(2) > 0 && a(2) == a(m - 1))
    return ScoringCase::TwoLevel;
  return std::nullopt;
}

namespace detail {

/// p, then the right side outward, then the left side outward (or the mirror).
inline WeakOrder sweep_vote(const Axis& axis, CandidateId p, bool right_first)
{
  const std::size_t pos = axis.position(p);
  std::vector<CandidateId> ranking{p};
  std::vector<CandidateId> left, right;
  for (std::size_t i = pos; i-- > 0;)
    left.push_back(axis.at(i));
  for (std::size_t i = pos + 1; i < axis.size(); ++i)
    right.push_back(axis.at(i));
  const auto& first = right_first ? right : left;
  const auto& second = right_first ? left : right;
  ranking.insert(ranking.end(), first.begin(), first.end());
  ranking.insert(ranking.end(), second.begin(), second.end());
  return WeakOrder::total(ranking);
}

inline void require_sp_or_plateau(const CwcmInstance& instance, const char* solver)
{
  if (instance.model != SPModel::SinglePeaked && instance.model != SPModel::SinglePlateaued)
    throw NotApplicableError(std::string(solver) + " covers single-peaked and single-plateaued votes only; use the oracle");
}

inline std::optional<ManipulationResult> uniform_attempt(const CwcmInstance& instance, const WeakOrder& vote)
{
  std::vector<WeakOrder> votes(instance.manipulator_weights.size(), vote);
  if (preferred_wins(instance.rule, election_with(instance, votes), instance.preferred))
    return ManipulationResult{true, std::move(votes), SolverTag::Polytime};
  return std::nullopt;
}

inline ManipulationResult no_manipulators(const CwcmInstance& instance)
{
  if (preferred_wins(instance.rule, instance.nonmanipulator_profile(), instance.preferred))
    return {true, std::vector<WeakOrder>{}, SolverTag::Polytime};
  return {false, std::nullopt, SolverTag::Polytime};
}

} // namespace detail

/**
 * Scoring-rule CWCM for single-peaked and single-plateaued votes with ties.
 *
 * Every manipulator casts the same p-first total order; which orders need
 * trying depends on the case returned by scoring_polytime_case. Throws
 * NotApplicableError when no case covers the vector and axis split.
 */
inline ManipulationResult solve_cwcm_scoring_sp(const CwcmInstance& instance)
{
  const auto* rule = std::get_if<ScoringRule>(&instance.rule);
  if (!rule)
    throw ContractError("scoring solver needs a scoring rule");
  instance.validate();
  detail::require_sp_or_plateau(instance, "scoring solver");
  const auto split = split_at(instance.axis, instance.preferred);
  const auto which = scoring_polytime_case(rule->vector, split);
  if (!which)
    throw NotApplicableError("scoring vector " + rule->vector.str() + " is outside the polynomial-time cases for split (" +
                             std::to_string(split.left) + "," + std::to_string(split.right) + "); use the oracle");
  if (instance.manipulator_weights.empty())
    return detail::no_manipulators(instance);

  std::vector<WeakOrder> strategies;
  switch (*which) {
    case ScoringCase::PreferredAtEnd:
    case ScoringCase::SecondIsBottom:
      // Right-first is the only p-first order when p sits at the left end,
      // and left-first when p sits at the right end.
      strategies.push_back(detail::sweep_vote(instance.axis, instance.preferred, split.right > 0));
      break;
    default:
      strategies.push_back(detail::sweep_vote(instance.axis, instance.preferred, true));
      strategies.push_back(detail::sweep_vote(instance.axis, instance.preferred, false));
  }
  for (const auto& vote : strategies)
    if (auto hit = detail::uniform_attempt(instance, vote))
      return *hit;
  return {false, std::nullopt, SolverTag::Polytime};
}

/**
 * Elimination veto CWCM: tries every order that peels the leftmost or
 * rightmost remaining axis candidate until only p is left, with all
 * manipulators voting its reverse.
 */
inline ManipulationResult solve_cwcm_elimination_veto(const CwcmInstance& instance)
{
  if (!std::holds_alternative<EliminationVetoRule>(instance.rule))
    throw ContractError("elimination veto solver needs the elimination veto rule");
  instance.validate();
  detail::require_sp_or_plateau(instance, "elimination veto solver");
  if (instance.manipulator_weights.empty())
    return detail::no_manipulators(instance);

  const Axis& axis = instance.axis;
  const std::size_t pos = axis.position(instance.preferred);
  std::vector<CandidateId> peeled;
  std::optional<ManipulationResult> found;

  auto peel = [&](auto&& self, std::size_t lo, std::size_t hi) -> void {
    if (found)
      return;
    if (lo == pos && hi == pos + 1) {
      std::vector<CandidateId> ranking{instance.preferred};
      ranking.insert(ranking.end(), peeled.rbegin(), peeled.rend());
      found = detail::uniform_attempt(instance, WeakOrder::total(ranking));
      return;
    }
    if (lo < pos) {
      peeled.push_back(axis.at(lo));
      self(self, lo + 1, hi);
      peeled.pop_back();
    }
    if (hi > pos + 1) {
      peeled.push_back(axis.at(hi - 1));
      self(self, lo, hi - 1);
      peeled.pop_back();
    }
  };
  peel(peel, 0, axis.size());
  if (found)
    return *found;
  return {false, std::nullopt, SolverTag::Polytime};
}

/// Breaks every tie along the axis: left first when `increasing`, else right first.
inline WeakOrder break_ties_along(const WeakOrder& order, const Axis& axis, bool increasing)
{
  std::vector<CandidateId> ranking;
  for (auto group : order.groups()) {
    std::sort(group.begin(), group.end(), [&](CandidateId x, CandidateId y) {
      return increasing ? axis.position(x) < axis.position(y) : axis.position(x) > axis.position(y);
    });
    ranking.insert(ranking.end(), group.begin(), group.end());
  }
  return WeakOrder::total(ranking);
}

/**
 * Replaces each voter of weight w by two weight-w total orders that break its
 * ties in increasing and in decreasing axis order. Every majority margin
 * doubles.
 */
inline std::vector<WeightedVoter> split_ties_along_axis(std::span<const WeightedVoter> voters, const Axis& axis)
{
  std::vector<WeightedVoter> out;
  out.reserve(voters.size() * 2);
  for (const auto& v : voters) {
    out.push_back({break_ties_along(v.order, axis, true), v.weight});
    out.push_back({break_ties_along(v.order, axis, false), v.weight});
  }
  return out;
}

/**
 * Copeland^alpha CWCM for single-peaked and single-plateaued votes with ties.
 *
 * After splitting the nonmanipulators into tie-free pairs and doubling the
 * manipulator weights, all manipulators cast one common single-peaked total
 * order with p first; every such order is tried.
 */
inline ManipulationResult solve_cwcm_copeland_sp(const CwcmInstance& instance)
{
  const auto* rule = std::get_if<CopelandRule>(&instance.rule);
  if (!rule)
    throw ContractError("Copeland solver needs a Copeland rule");
  instance.validate();
  detail::require_sp_or_plateau(instance, "Copeland solver");
  if (instance.manipulator_weights.empty())
    return detail::no_manipulators(instance);

  std::vector<WeightedVoter> doubled = split_ties_along_axis(instance.nonmanipulators, instance.axis);
  Integer coalition = 0;
  for (const auto& w : instance.manipulator_weights)
    coalition += 2 * w;

  const Profile base(instance.candidates, doubled);
  const auto base_graph = weighted_majority_graph(base);
  for (const auto& vote : enumerate_consistent_votes(instance.axis, SPModel::SinglePeaked,
                                                     {instance.preferred, true})) {
    MajorityGraph graph = base_graph;
    graph.add_vote(vote, coalition);
    const auto winners = argmax_set(copeland_scores(graph, *rule));
    if (std::find(winners.begin(), winners.end(), instance.preferred) != winners.end())
      return {true, std::vector<WeakOrder>(instance.manipulator_weights.size(), vote), SolverTag::Polytime};
  }
  return {false, std::nullopt, SolverTag::Polytime};
}

/// Dispatches to the polynomial-time solver for the instance's rule.
inline ManipulationResult solve_cwcm_polytime(const CwcmInstance& instance)
{
  if (std::holds_alternative<ScoringRule>(instance.rule))
    return solve_cwcm_scoring_sp(instance);
  if (std::holds_alternative<CopelandRule>(instance.rule))
    return solve_cwcm_copeland_sp(instance);
  return solve_cwcm_elimination_veto(instance);
}

} // namespace sptie

#endif // SPTIE_MANIPULATION_HPP
