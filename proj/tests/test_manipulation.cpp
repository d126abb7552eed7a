#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace sptie;
using sptie::testing::names;
using sptie::testing::vote;

namespace {

const std::vector<std::string> kAPB{"a", "p", "b"};

CwcmInstance three_candidate(Rule rule, std::vector<WeightedVoter> s, std::vector<Integer> t)
{
  CwcmInstance instance;
  instance.candidates = kAPB;
  instance.axis = Axis::identity(3);
  instance.preferred = 1;
  instance.model = SPModel::SinglePeaked;
  instance.rule = std::move(rule);
  instance.nonmanipulators = std::move(s);
  instance.manipulator_weights = std::move(t);
  return instance;
}

std::vector<ScoringVector> probe_vectors(std::size_t m)
{
  std::vector<ScoringVector> out{ScoringVector::borda(m), ScoringVector::plurality(m), ScoringVector::veto(m)};
  if (m == 5)
    out.push_back(ScoringVector({4, 3, 2, 0, 0}));
  if (m >= 3) {
    std::vector<std::int64_t> a(m, 0);
    a[0] = 5;
    a[1] = 5;
    a[2] = 1;
    out.push_back(ScoringVector(a));
  }
  return out;
}

} // namespace

TEST(NormalizePFirst, Examples)
{
  const auto axis = Axis::identity(3);
  EXPECT_EQ(normalize_p_first(vote("a > p > b", kAPB), axis, SPModel::SinglePeaked, 1), vote("p > a > b", kAPB));
  EXPECT_EQ(normalize_p_first(vote("p~b > a", kAPB), axis, SPModel::SinglePlateaued, 1), vote("p > b > a", kAPB));
  EXPECT_EQ(normalize_p_first(vote("p~a > b", kAPB), axis, SPModel::SinglePlateaued, 1), vote("p > a > b", kAPB));
  const auto already = vote("p > a~b", kAPB);
  EXPECT_EQ(normalize_p_first(already, axis, SPModel::SinglePeaked, 1), already);
  EXPECT_THROW(normalize_p_first(vote("a~b > p", kAPB), axis, SPModel::SinglePeaked, 1), ContractError);
}

TEST(NormalizePFirst, ScoreGapsNeverShrink)
{
  for (std::size_t m = 1; m <= 5; ++m) {
    const auto vectors = probe_vectors(m);
    const auto axes = sptie::testing::permutations(m);
    for_each_weak_order(m, [&](const WeakOrder& v) {
      for (std::size_t ai = 0; ai < axes.size(); ai += (m == 5 ? 7 : 1)) {
        const Axis axis(axes[ai]);
        for (auto model : kAllModels) {
          if (!validate_vote(v, axis, model))
            continue;
          for (CandidateId p = 0; p < m; ++p) {
            const auto w = normalize_p_first(v, axis, model, p);
            ASSERT_TRUE(validate_vote(w, axis, model));
            ASSERT_EQ(w.groups()[0], CandidateSet{p});
            for (const auto& vec : vectors)
              for (auto ext : kAllExtensions) {
                const auto before = score_vote(v, vec, ext);
                const auto after = score_vote(w, vec, ext);
                for (CandidateId c = 0; c < m; ++c)
                  ASSERT_GE(after[p] - after[c], before[p] - before[c])
                      << format_order(v, names(m)) << " -> " << format_order(w, names(m)) << " "
                      << to_string(model) << " " << vec.str() << " " << to_string(ext);
              }
          }
        }
      }
    });
  }
}

TEST(CheckLSp2p, Examples)
{
  const ScoringVector v({4, 3, 2, 0, 0});
  EXPECT_TRUE(check_l_sp2p(v, 2, 2));
  EXPECT_FALSE(check_l_sp2p(v, 1, 3));
  EXPECT_TRUE(check_l_sp2p(ScoringVector::triviality(5), 2, 2));
  EXPECT_THROW(check_l_sp2p(v, 2, 3), DimensionError);
}

TEST(CheckLSp2p, TabulatedProducts)
{
  // (alpha_1 - alpha_i)(alpha_1 - alpha_j) against (alpha_i - alpha_{i+1})(alpha_j - alpha_{j+1}).
  const std::int64_t a[] = {0, 4, 3, 2, 0, 0};
  const std::int64_t lhs[2][2] = {{1, 2}, {2, 4}};
  const std::int64_t rhs[2][2] = {{1, 2}, {2, 4}};
  for (int i = 2; i <= 3; ++i)
    for (int j = 2; j <= 3; ++j) {
      EXPECT_EQ((a[1] - a[i]) * (a[1] - a[j]), lhs[i - 2][j - 2]);
      EXPECT_EQ((a[i] - a[i + 1]) * (a[j] - a[j + 1]), rhs[i - 2][j - 2]);
    }
}

TEST(ScoringCases, Dispatch)
{
  const ScoringVector v({4, 3, 2, 0, 0});
  EXPECT_EQ(scoring_polytime_case(v, {2, 2}), ScoringCase::AxisInequality);
  EXPECT_FALSE(scoring_polytime_case(v, {1, 3}));
  EXPECT_EQ(scoring_polytime_case(v, {0, 4}), ScoringCase::PreferredAtEnd);
  EXPECT_EQ(scoring_polytime_case(ScoringVector::plurality(5), {2, 2}), ScoringCase::SecondIsBottom);
  EXPECT_EQ(scoring_polytime_case(ScoringVector({3, 3, 3, 3, 1}), {1, 3}), ScoringCase::FlatTopHalf);
  EXPECT_EQ(scoring_polytime_case(ScoringVector({2, 2, 1, 0, 0}), {1, 3}), ScoringCase::AxisInequality);
  EXPECT_EQ(scoring_polytime_case(ScoringVector({4, 3, 3, 3, 0}), {1, 3}), ScoringCase::TwoLevel);
  // Shifting the vector changes nothing.
  EXPECT_EQ(scoring_polytime_case(ScoringVector({6, 5, 5, 5, 2}), {1, 3}), ScoringCase::TwoLevel);
}

TEST(ScoringSolver, BordaExample)
{
  const auto instance = three_candidate(ScoringRule{ScoringVector::borda(3), Extension::Min},
                                        {{vote("a > p > b", kAPB), 2}}, {1, 1});
  const auto r = solve_cwcm_scoring_sp(instance);
  EXPECT_TRUE(r.decision);
  ASSERT_TRUE(r.witness);
  EXPECT_TRUE(verify_witness(instance, *r.witness));
  EXPECT_EQ(r.decision, solve_cwcm_oracle(instance).decision);
}

TEST(ScoringSolver, EmptyCoalition)
{
  auto instance = three_candidate(ScoringRule{ScoringVector::borda(3), Extension::Max},
                                  {{vote("a > p > b", kAPB), 2}}, {});
  EXPECT_FALSE(solve_cwcm_scoring_sp(instance).decision);
  instance.nonmanipulators = {{vote("p > a > b", kAPB), 2}};
  const auto r = solve_cwcm_scoring_sp(instance);
  EXPECT_TRUE(r.decision);
  EXPECT_EQ(r.witness, std::vector<WeakOrder>{});
}

TEST(ScoringSolver, NotApplicable)
{
  CwcmInstance instance;
  instance.candidates = names(5);
  instance.axis = Axis::identity(5);
  instance.preferred = 1;
  instance.rule = ScoringRule{ScoringVector({4, 3, 2, 0, 0}), Extension::Average};
  instance.manipulator_weights = {1};
  EXPECT_THROW(solve_cwcm_scoring_sp(instance), NotApplicableError);
  instance.preferred = 2;
  EXPECT_NO_THROW(solve_cwcm_scoring_sp(instance));
  instance.model = SPModel::OutsideOptions;
  EXPECT_THROW(solve_cwcm_scoring_sp(instance), NotApplicableError);
  instance.rule = CopelandRule{};
  EXPECT_THROW(solve_cwcm_scoring_sp(instance), ContractError);
}

TEST(EliminationSolver, Examples)
{
  CwcmInstance single;
  single.candidates = {"p"};
  single.axis = Axis::identity(1);
  single.rule = EliminationVetoRule{};
  single.manipulator_weights = {3};
  EXPECT_TRUE(solve_cwcm_elimination_veto(single).decision);

  const auto alone = three_candidate(EliminationVetoRule{}, {}, {1});
  const auto r = solve_cwcm_elimination_veto(alone);
  EXPECT_TRUE(r.decision);
  EXPECT_TRUE(verify_witness(alone, *r.witness));
  EXPECT_EQ(classify_order((*r.witness)[0]), OrderClass::Total);

  EXPECT_THROW(solve_cwcm_elimination_veto(three_candidate(CopelandRule{}, {}, {1})), ContractError);
}

TEST(EliminationSolver, ExhaustiveThreeCandidates)
{
  const auto axis = Axis::identity(3);
  for (auto model : {SPModel::SinglePeaked, SPModel::SinglePlateaued}) {
    const auto votes = enumerate_consistent_votes(axis, model);
    for (CandidateId p = 0; p < 3; ++p)
      for (std::size_t v = 0; v < votes.size(); ++v)
        for (int sw = 1; sw <= 3; ++sw)
          for (int t1 = 1; t1 <= 3; ++t1)
            for (int t2 = 0; t2 <= 3; ++t2) {
              auto instance = three_candidate(EliminationVetoRule{}, {{votes[v], sw}}, {t1});
              instance.model = model;
              instance.preferred = p;
              if (t2 > 0)
                instance.manipulator_weights.push_back(t2);
              const auto fast = solve_cwcm_elimination_veto(instance);
              ASSERT_EQ(fast.decision, solve_cwcm_oracle(instance).decision) << instance_to_json(instance).dump();
              if (fast.decision) {
                EXPECT_TRUE(verify_witness(instance, *fast.witness));
              }
            }
  }
}

TEST(CopelandSolver, EmptyElectorate)
{
  for (const char* alpha : {"0", "1/2", "1"})
    for (CandidateId p = 0; p < 3; ++p) {
      auto instance = three_candidate(CopelandRule::parse(alpha), {}, {1});
      instance.preferred = p;
      const auto r = solve_cwcm_copeland_sp(instance);
      EXPECT_TRUE(r.decision);
      EXPECT_TRUE(verify_witness(instance, *r.witness));
    }
}

TEST(CopelandSolver, SplitVotesDoubleMargins)
{
  const auto n = names(4);
  const Profile p(n, {{vote("b~c > a~d", n), 3}, {vote("c > b~d > a", n), 2}});
  const auto axis = Axis::identity(4);
  const auto g = weighted_majority_graph(p);
  const auto h = weighted_majority_graph(p.with_voters(split_ties_along_axis(p.voters(), axis)));
  for (CandidateId a = 0; a < 4; ++a)
    for (CandidateId b = 0; b < 4; ++b)
      EXPECT_EQ(h.margin(a, b), 2 * g.margin(a, b));
}

TEST(CopelandSolver, ThreeCandidatesAgainstOracle)
{
  const auto axis = Axis::identity(3);
  for (const char* alpha : {"0", "1/2"})
    for (auto model : {SPModel::SinglePeaked, SPModel::SinglePlateaued}) {
      const auto votes = enumerate_consistent_votes(axis, model);
      for (CandidateId p = 0; p < 3; ++p)
        for (const auto& v1 : votes)
          for (const auto& v2 : votes)
            for (int t = 1; t <= 2; ++t) {
              auto instance = three_candidate(CopelandRule::parse(alpha), {{v1, 1}, {v2, 2}}, {t});
              instance.model = model;
              instance.preferred = p;
              const auto fast = solve_cwcm_copeland_sp(instance);
              ASSERT_EQ(fast.decision, solve_cwcm_oracle(instance).decision) << instance_to_json(instance).dump();
              if (fast.decision) {
                EXPECT_TRUE(verify_witness(instance, *fast.witness));
              }
            }
    }
}

TEST(CopelandSolver, WrongRule)
{
  EXPECT_THROW(solve_cwcm_copeland_sp(three_candidate(EliminationVetoRule{}, {}, {1})), ContractError);
}

TEST(PolytimeSolvers, AgreeWithOracleOnRandomInstances)
{
  SweepOptions options;
  options.instances = 1500;
  options.seed = 42;
  const auto report = compare_solvers(options);
  EXPECT_GT(report.compared, 1000u);
  EXPECT_EQ(report.unsound_witnesses, 0u);
  for (const auto& d : report.disagreements)
    ADD_FAILURE() << instance_to_json(d.instance).dump() << " polytime=" << d.polytime << " oracle=" << d.oracle;
}

TEST(CwcmInstance, Validation)
{
  auto instance = three_candidate(ScoringRule{ScoringVector::borda(3), Extension::Min}, {}, {1});
  EXPECT_NO_THROW(instance.validate());
  instance.nonmanipulators = {{vote("a~b > p", kAPB), 1}};
  EXPECT_THROW(instance.validate(), ValidationError);
  instance.nonmanipulators.clear();
  instance.manipulator_weights = {0};
  EXPECT_THROW(instance.validate(), ValidationError);
  instance.manipulator_weights = {1};
  instance.rule = ScoringRule{ScoringVector::borda(4), Extension::Min};
  EXPECT_THROW(instance.validate(), DimensionError);
}
