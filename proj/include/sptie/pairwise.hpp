#ifndef SPTIE_PAIRWISE_HPP
#define SPTIE_PAIRWISE_HPP

#include <string>
#include <string_view>
#include <vector>

#include "sptie/core.hpp"
#include "sptie/scoring.hpp"

namespace sptie {

/**
 * Weighted majority graph: margin(a,b) is the weight stating a > b minus the
 * weight stating b > a. A voter indifferent between a and b adds nothing.
 * The induced (unweighted) graph is the sign pattern of the margins.
 */
class MajorityGraph
{
public:
  MajorityGraph() = default;
  explicit MajorityGraph(std::size_t m) : m_(m), margins_(m * m, Integer(0)) {}

  std::size_t candidate_count() const noexcept { return m_; }

  const Integer& margin(CandidateId a, CandidateId b) const { return margins_.at(index(a, b)); }

  bool beats(CandidateId a, CandidateId b) const { return margin(a, b) > 0; }

  void add_vote(const WeakOrder& order, const Integer& weight)
  {
    for (CandidateId a = 0; a < m_; ++a)
      for (CandidateId b = a + 1; b < m_; ++b) {
        if (order.prefers(a, b)) {
          margins_[index(a, b)] += weight;
          margins_[index(b, a)] -= weight;
        } else if (order.prefers(b, a)) {
          margins_[index(b, a)] += weight;
          margins_[index(a, b)] -= weight;
        }
      }
  }

  bool operator==(const MajorityGraph&) const = default;

private:
  std::size_t index(CandidateId a, CandidateId b) const
  {
    if (a >= m_ || b >= m_)
      throw DomainError("candidate outside majority graph");
    return static_cast<std::size_t>(a) * m_ + b;
  }

  std::size_t m_ = 0;
  std::vector<Integer> margins_;
};

inline MajorityGraph weighted_majority_graph(const Profile& profile)
{
  MajorityGraph graph(profile.candidate_count());
  for (const auto& voter : profile.voters())
    graph.add_vote(voter.order, voter.weight);
  return graph;
}

/// Copeland^alpha: one point per pairwise win, alpha per pairwise tie.
class CopelandRule
{
public:
  CopelandRule() = default;

  explicit CopelandRule(Rational alpha) : alpha_(std::move(alpha))
  {
    if (alpha_ < 0 || alpha_ > 1)
      throw DomainError("Copeland alpha must lie in [0,1], got " + alpha_.str());
  }

  /// "p/q" or an integer.
  static CopelandRule parse(std::string_view text)
  {
    const auto slash = text.find('/');
    try {
      if (slash == std::string_view::npos)
        return CopelandRule(Rational(Integer(std::string(text))));
      const Integer num(std::string(text.substr(0, slash)));
      const Integer den(std::string(text.substr(slash + 1)));
      if (den == 0)
        throw DomainError("Copeland alpha has zero denominator");
      return CopelandRule(Rational(num, den));
    } catch (const std::runtime_error&) {
      throw ValidationError("bad Copeland alpha '" + std::string(text) + "'");
    }
  }

  const Rational& alpha() const noexcept { return alpha_; }

  bool operator==(const CopelandRule&) const = default;

private:
  Rational alpha_{0};
};

inline ScoreTable copeland_scores(const MajorityGraph& graph, const CopelandRule& rule)
{
  const std::size_t m = graph.candidate_count();
  ScoreTable scores(m, Rational(0));
  for (CandidateId c = 0; c < m; ++c) {
    long wins = 0;
    long ties = 0;
    for (CandidateId d = 0; d < m; ++d) {
      if (d == c)
        continue;
      const auto& margin = graph.margin(c, d);
      if (margin > 0)
        ++wins;
      else if (margin == 0)
        ++ties;
    }
    scores[c] = Rational(wins) + rule.alpha() * ties;
  }
  return scores;
}

inline ScoreTable copeland_scores(const Profile& profile, const CopelandRule& rule)
{
  return copeland_scores(weighted_majority_graph(profile), rule);
}

inline CandidateSet copeland_winners(const Profile& profile, const CopelandRule& rule)
{
  return argmax_set(copeland_scores(profile, rule));
}

/// Candidates that beat or tie every other candidate; possibly empty.
inline CandidateSet weak_condorcet_winners(const MajorityGraph& graph)
{
  CandidateSet winners;
  const std::size_t m = graph.candidate_count();
  for (CandidateId c = 0; c < m; ++c) {
    bool ok = true;
    for (CandidateId d = 0; d < m && ok; ++d)
      ok = d == c || graph.margin(c, d) >= 0;
    if (ok)
      winners.push_back(c);
  }
  return winners;
}

inline CandidateSet weak_condorcet_winners(const Profile& profile)
{
  return weak_condorcet_winners(weighted_majority_graph(profile));
}

/// Strict majority (margin > 0) is transitive.
inline bool is_majority_transitive(const MajorityGraph& graph)
{
  const std::size_t m = graph.candidate_count();
  for (CandidateId a = 0; a < m; ++a)
    for (CandidateId b = 0; b < m; ++b) {
      if (a == b || !graph.beats(a, b))
        continue;
      for (CandidateId c = 0; c < m; ++c)
        if (c != a && c != b && graph.beats(b, c) && !graph.beats(a, c))
          return false;
    }
  return true;
}

inline bool is_majority_transitive(const Profile& profile)
{
  return is_majority_transitive(weighted_majority_graph(profile));
}

} // namespace sptie

#endif // SPTIE_PAIRWISE_HPP
