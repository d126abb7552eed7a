#ifndef SPTIE_ELIMINATION_HPP
#define SPTIE_ELIMINATION_HPP

#include <vector>

#include "sptie/core.hpp"

namespace sptie {

/// Which of several lowest scorers is eliminated.
enum class EliminationTieBreak { SmallestNameFirst, LargestNameFirst };

inline constexpr EliminationTieBreak kDefaultEliminationTieBreak = EliminationTieBreak::SmallestNameFirst;

struct EliminationResult
{
  CandidateId winner = 0;
  /// All candidates, first eliminated first; the winner is last.
  std::vector<CandidateId> order;
};

/// Candidates of `order` ranked last once the order is restricted to `remaining`.
inline CandidateSet last_group_within(const WeakOrder& order, const std::vector<bool>& remaining)
{
  CandidateSet last;
  std::size_t worst = 0;
  for (CandidateId c = 0; c < remaining.size(); ++c) {
    if (!remaining[c])
      continue;
    const std::size_t g = order.group_of(c);
    if (last.empty() || g > worst) {
      worst = g;
      last.assign(1, c);
    } else if (g == worst) {
      last.push_back(c);
    }
  }
  return last;
}

/**
 * Elimination veto under the min extension, unique winner.
 *
 * Each round every voter vetoes the candidates in its last group among the
 * remaining ones; a vote whose remaining candidates are all tied vetoes all
 * of them. The most vetoed (lowest veto score) candidate is removed.
 */
inline EliminationResult elimination_veto_winner(const Profile& profile,
                                                 EliminationTieBreak tie_break = kDefaultEliminationTieBreak)
{
  const std::size_t m = profile.candidate_count();
  if (m == 0)
    throw DomainError("elimination veto needs at least one candidate");

  std::vector<bool> remaining(m, true);
  EliminationResult result;
  for (std::size_t round = 0; round + 1 < m; ++round) {
    std::vector<Integer> vetoes(m, Integer(0));
    for (const auto& voter : profile.voters())
      for (CandidateId c : last_group_within(voter.order, remaining))
        vetoes[c] += voter.weight;

    std::optional<CandidateId> out;
    for (CandidateId c = 0; c < m; ++c) {
      if (!remaining[c])
        continue;
      if (!out || vetoes[c] > vetoes[*out]) {
        out = c;
      } else if (vetoes[c] == vetoes[*out]) {
        const bool smaller = profile.name(c) < profile.name(*out);
        if (smaller == (tie_break == EliminationTieBreak::SmallestNameFirst))
          out = c;
      }
    }
    remaining[*out] = false;
    result.order.push_back(*out);
  }
  for (CandidateId c = 0; c < m; ++c)
    if (remaining[c])
      result.winner = c;
  result.order.push_back(result.winner);
  return result;
}

} // namespace sptie

#endif // SPTIE_ELIMINATION_HPP
