#ifndef SPTIE_TESTS_SUPPORT_HPP
#define SPTIE_TESTS_SUPPORT_HPP

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "sptie/sptie.hpp"

namespace sptie::testing {

inline std::vector<std::string> names(std::size_t m) { return default_names(m); }

inline WeakOrder vote(std::string_view text, const std::vector<std::string>& candidates)
{
  return parse_order(text, candidates);
}

/// Uniformly random level per candidate, compacted into a weak order.
template<class Rng>
WeakOrder random_weak_order(Rng& rng, std::size_t m)
{
  std::uniform_int_distribution<std::size_t> level(0, m - 1);
  std::vector<CandidateSet> buckets(m);
  for (std::size_t c = 0; c < m; ++c)
    buckets[level(rng)].push_back(static_cast<CandidateId>(c));
  std::erase_if(buckets, [](const CandidateSet& g) { return g.empty(); });
  return WeakOrder(std::move(buckets), m);
}

template<class Rng>
WeakOrder random_total_order(Rng& rng, std::size_t m)
{
  std::vector<CandidateId> ids(m);
  std::iota(ids.begin(), ids.end(), CandidateId{0});
  std::shuffle(ids.begin(), ids.end(), rng);
  return WeakOrder::total(ids);
}

template<class Rng>
Axis random_axis(Rng& rng, std::size_t m)
{
  std::vector<CandidateId> ids(m);
  std::iota(ids.begin(), ids.end(), CandidateId{0});
  std::shuffle(ids.begin(), ids.end(), rng);
  return Axis(ids);
}

template<class Rng>
Profile random_profile(Rng& rng, std::size_t m, std::size_t n, int max_weight = 5)
{
  std::uniform_int_distribution<int> weight(1, max_weight);
  std::vector<WeightedVoter> voters;
  for (std::size_t i = 0; i < n; ++i)
    voters.push_back({random_weak_order(rng, m), weight(rng)});
  return Profile(names(m), std::move(voters));
}

/// Every permutation of 0..m-1.
inline std::vector<std::vector<CandidateId>> permutations(std::size_t m)
{
  std::vector<CandidateId> ids(m);
  std::iota(ids.begin(), ids.end(), CandidateId{0});
  std::vector<std::vector<CandidateId>> out;
  do
    out.push_back(ids);
  while (std::next_permutation(ids.begin(), ids.end()));
  return out;
}

} // namespace sptie::testing

#endif // SPTIE_TESTS_SUPPORT_HPP
