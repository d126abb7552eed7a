// Command-line front end: reads profiles or CWCM instances, prints JSON.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "sptie/sptie.hpp"

namespace {

using namespace sptie;

constexpr int kUsageError = 2;
constexpr int kCapacityError = 3;

std::string read_input(const std::string& path)
{
  if (path.empty() || path == "-")
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw ValidationError("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<std::uint64_t> parse_items(const std::string& csv)
{
  std::vector<std::uint64_t> items;
  std::stringstream ss(csv);
  for (std::string token; std::getline(ss, token, ',');) {
    token = detail::trim(token);
    if (!detail::all_digits(token))
      throw ValidationError("bad partition item '" + token + "'");
    items.push_back(std::stoull(token));
  }
  return items;
}

std::vector<CandidateId> parse_axis_names(const std::string& csv, const Profile& profile)
{
  std::vector<CandidateId> ids;
  std::stringstream ss(csv);
  for (std::string token; std::getline(ss, token, ',');)
    ids.push_back(profile.id_of(detail::trim(token)));
  if (ids.size() != profile.candidate_count())
    throw ValidationError("axis must list every candidate exactly once");
  return ids;
}

void print(const Json& j) { std::cout << j.dump() << '\n'; }

struct Options
{
  std::string input;
  std::string format = "preflib";
  std::string vector;
  std::string ext = "min";
  std::string rule;
  std::string model = "single-peaked";
  std::string axis;
  std::string solver = "auto";
  std::size_t max_states = OracleOptions{}.max_states;
  std::string items;
  SweepOptions sweep;
};

Profile load_profile(const Options& o) { return parse_profile(read_input(o.input), parse_profile_format(o.format)); }

void run_score(const Options& o)
{
  const auto profile = load_profile(o);
  const auto table = score_profile(profile, ScoringVector::parse(o.vector), parse_extension(o.ext));
  print(score_table_to_json(table, profile.names()));
}

void run_winners(const Options& o)
{
  const auto profile = load_profile(o);
  const auto rule = parse_rule_spec(o.rule);
  Json out;
  out["rule"] = describe(rule);
  if (const auto* s = std::get_if<ScoringRule>(&rule)) {
    out["scores"] = score_table_to_json(score_profile(profile, s->vector, s->extension), profile.names());
    out["winners"] = candidates_to_json(scoring_winners(profile, s->vector, s->extension), profile.names());
  } else if (const auto* c = std::get_if<CopelandRule>(&rule)) {
    out["scores"] = score_table_to_json(copeland_scores(profile, *c), profile.names());
    out["winners"] = candidates_to_json(copeland_winners(profile, *c), profile.names());
  } else {
    const auto result = elimination_veto_winner(profile, std::get<EliminationVetoRule>(rule).tie_break);
    out["winners"] = candidates_to_json(std::vector<CandidateId>{result.winner}, profile.names());
    out["elimination_order"] = candidates_to_json(result.order, profile.names());
  }
  print(out);
}

void run_check_axis(const Options& o)
{
  const auto profile = load_profile(o);
  const Axis axis(parse_axis_names(o.axis, profile));
  const auto model = parse_model(o.model);
  Json voters = Json::array();
  bool all = true;
  for (std::size_t i = 0; i < profile.voters().size(); ++i) {
    const auto& order = profile.voters()[i].order;
    const auto d = validate_vote(order, axis, model);
    all = all && d.has_value();
    Json v;
    v["voter"] = i;
    v["vote"] = format_order(order, profile.names());
    v["valid"] = d.has_value();
    v["decomposition"] = d ? decomposition_to_json(*d, axis, profile.names()) : Json(nullptr);
    voters.push_back(std::move(v));
  }
  Json out;
  out["axis"] = axis_to_json(axis, profile.names());
  out["model"] = std::string(to_string(model));
  out["valid"] = all;
  out["voters"] = std::move(voters);
  print(out);
}

void run_find_axis(const Options& o)
{
  const auto profile = load_profile(o);
  const auto axis = find_axis(profile, parse_model(o.model));
  print(axis ? axis_to_json(*axis, profile.names()) : Json("none"));
}

void run_cwcm(const Options& o)
{
  const auto instance = instance_from_json(detail::parse_json_text(read_input(o.input)));
  OracleOptions options;
  options.max_states = o.max_states;
  print(result_to_json(solve_cwcm(instance, parse_solver_choice(o.solver), options)));
}

void run_gen_partition(const Options& o)
{
  const PartitionInstance partition(parse_items(o.items));
  print(instance_to_json(reduce_partition_to_cwcm(partition, parse_extension(o.ext))));
}

void run_compare(const Options& o)
{
  const auto report = compare_solvers(o.sweep);
  Json out;
  out["instances"] = o.sweep.instances;
  out["compared"] = report.compared;
  out["not_applicable"] = report.not_applicable;
  out["unsound_witnesses"] = report.unsound_witnesses;
  Json rows = Json::array();
  for (const auto& d : report.disagreements) {
    Json row;
    row["instance"] = instance_to_json(d.instance);
    row["polytime"] = d.polytime;
    row["oracle"] = d.oracle;
    rows.push_back(std::move(row));
  }
  out["disagreements"] = std::move(rows);
  print(out);
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Voting rules, single-peakedness with ties, and coalitional manipulation"};
  app.require_subcommand(1, 1);
  Options o;

  auto add_input = [&](CLI::App* cmd, bool with_format) {
    cmd->add_option("input", o.input, "Input file (default: standard input)");
    if (with_format)
      cmd->add_option("--format", o.format, "Profile format")->check(CLI::IsMember({"preflib", "json"}));
  };

  auto* score = app.add_subcommand("score", "Scores of every candidate under a scoring rule");
  add_input(score, true);
  score->add_option("--vector", o.vector, "Comma-separated scoring vector")->required();
  score->add_option("--ext", o.ext, "min, max, round-down or average");

  auto* winners = app.add_subcommand("winners", "Winner set of a rule");
  add_input(winners, true);
  winners->add_option("--rule", o.rule, "scoring:<vector>:<ext>, copeland:<alpha> or elimveto")->required();

  auto* check = app.add_subcommand("check-axis", "Validate every voter against an axis");
  add_input(check, true);
  check->add_option("--model", o.model, "Peakedness model");
  check->add_option("--axis", o.axis, "Comma-separated candidate names, left to right")->required();

  auto* find = app.add_subcommand("find-axis", "Search for an axis that fits the profile");
  add_input(find, true);
  find->add_option("--model", o.model, "Peakedness model");

  auto* cwcm = app.add_subcommand("cwcm", "Solve a CWCM instance given as JSON");
  add_input(cwcm, false);
  cwcm->add_option("--solver", o.solver, "auto, polytime or oracle")
      ->check(CLI::IsMember({"auto", "polytime", "oracle"}));
  cwcm->add_option("--max-states", o.max_states, "Oracle state budget");

  auto* gen = app.add_subcommand("gen-partition", "Emit the CWCM instance built from a Partition instance");
  gen->add_option("--items", o.items, "Comma-separated positive integers")->required();
  gen->add_option("--ext", o.ext, "Scoring extension");

  auto* compare = app.add_subcommand("compare", "Polynomial-time solvers against the oracle on random instances");
  compare->add_option("--instances", o.sweep.instances, "Number of generated instances");
  compare->add_option("--seed", o.sweep.seed, "Random seed");
  compare->add_option("--min-candidates", o.sweep.min_candidates, "Smallest candidate count");
  compare->add_option("--max-candidates", o.sweep.max_candidates, "Largest candidate count")
      ->check(CLI::Range(1, 7));
  compare->add_option("--max-voters", o.sweep.max_nonmanipulators, "Most nonmanipulators");
  compare->add_option("--max-manipulators", o.sweep.max_manipulators, "Most manipulators");
  compare->add_option("--max-weight", o.sweep.max_manipulator_weight, "Largest voter weight")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }
  o.sweep.max_nonmanipulator_weight = o.sweep.max_manipulator_weight;

  try {
    if (*score)
      run_score(o);
    else if (*winners)
      run_winners(o);
    else if (*check)
      run_check_axis(o);
    else if (*find)
      run_find_axis(o);
    else if (*cwcm)
      run_cwcm(o);
    else if (*gen)
      run_gen_partition(o);
    else if (*compare)
      run_compare(o);
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCapacityError;
  } catch (const NotApplicableError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCapacityError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return 0;
}
