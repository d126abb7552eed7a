#ifndef SPTIE_SWEEP_HPP
#define SPTIE_SWEEP_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "sptie/oracle.hpp"

namespace sptie {

/// Shape of randomly generated CWCM instances.
struct SweepOptions
{
  std::size_t instances = 500;
  std::uint64_t seed = 1;
  std::size_t min_candidates = 3;
  std::size_t max_candidates = 4;
  std::size_t max_nonmanipulators = 3;
  std::int64_t max_nonmanipulator_weight = 2;
  std::size_t max_manipulators = 3;
  std::int64_t max_manipulator_weight = 2;
};

/// Rules exercised by the sweep for `m` candidates.
inline std::vector<Rule> sweep_rules(std::size_t m)
{
  std::vector<Rule> rules;
  std::vector<ScoringVector> vectors{ScoringVector::borda(m), ScoringVector::veto(m), ScoringVector::plurality(m)};
  if (m == 5)
    vectors.push_back(ScoringVector({4, 3, 2, 0, 0}));
  for (const auto& v : vectors)
    for (auto ext : kAllExtensions)
      rules.push_back(ScoringRule{v, ext});
  for (const char* alpha : {"0", "1/2", "1"})
    rules.push_back(CopelandRule::parse(alpha));
  rules.push_back(EliminationVetoRule{});
  return rules;
}

inline std::vector<std::string> default_names(std::size_t m)
{
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i)
    names.push_back(std::string(1, static_cast<char>('a' + i)));
  return names;
}

/// One random instance with a single-peaked or single-plateaued electorate.
template<class Rng>
CwcmInstance random_instance(Rng& rng, const SweepOptions& options, const Rule& rule, std::size_t m)
{
  auto pick = [&](std::int64_t lo, std::int64_t hi) { return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng); };

  CwcmInstance instance;
  instance.candidates = default_names(m);
  std::vector<CandidateId> order(m);
  std::iota(order.begin(), order.end(), CandidateId{0});
  std::shuffle(order.begin(), order.end(), rng);
  instance.axis = Axis(order);
  instance.model = pick(0, 1) == 0 ? SPModel::SinglePeaked : SPModel::SinglePlateaued;
  instance.preferred = static_cast<CandidateId>(pick(0, static_cast<std::int64_t>(m) - 1));
  instance.rule = rule;

  const auto votes = enumerate_consistent_votes(instance.axis, instance.model);
  const auto s = pick(0, static_cast<std::int64_t>(options.max_nonmanipulators));
  for (std::int64_t i = 0; i < s; ++i)
    instance.nonmanipulators.push_back({votes[static_cast<std::size_t>(pick(0, static_cast<std::int64_t>(votes.size()) - 1))],
                                        Integer(pick(1, options.max_nonmanipulator_weight))});
  const auto t = pick(0, static_cast<std::int64_t>(options.max_manipulators));
  for (std::int64_t i = 0; i < t; ++i)
    instance.manipulator_weights.push_back(Integer(pick(1, options.max_manipulator_weight)));
  return instance;
}

struct Disagreement
{
  CwcmInstance instance;
  bool polytime = false;
  bool oracle = false;
};

struct SweepReport
{
  std::size_t compared = 0;
  std::size_t not_applicable = 0;
  std::size_t unsound_witnesses = 0;
  std::vector<Disagreement> disagreements;
};

/// Runs the polynomial-time solvers against the oracle on random instances.
inline SweepReport compare_solvers(const SweepOptions& options)
{
  if (options.min_candidates < 1 || options.min_candidates > options.max_candidates)
    throw ValidationError("candidate range is empty");
  std::mt19937_64 rng(options.seed);
  SweepReport report;
  for (std::size_t n = 0; n < options.instances; ++n) {
    const auto m = static_cast<std::size_t>(std::uniform_int_distribution<std::size_t>(
        options.min_candidates, options.max_candidates)(rng));
    const auto rules = sweep_rules(m);
    const auto& rule = rules[std::uniform_int_distribution<std::size_t>(0, rules.size() - 1)(rng)];
    const auto instance = random_instance(rng, options, rule, m);
    ManipulationResult fast;
    try {
      fast = solve_cwcm_polytime(instance);
    } catch (const NotApplicableError&) {
      ++report.not_applicable;
      continue;
    }
    const auto slow = solve_cwcm_oracle(instance);
    ++report.compared;
    if (fast.decision && !(fast.witness && verify_witness(instance, *fast.witness)))
      ++report.unsound_witnesses;
    if (fast.decision != slow.decision)
      report.disagreements.push_back({instance, fast.decision, slow.decision});
  }
  return report;
}

} // namespace sptie

#endif // SPTIE_SWEEP_HPP
