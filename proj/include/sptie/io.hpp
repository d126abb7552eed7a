#ifndef SPTIE_IO_HPP
#define SPTIE_IO_HPP

#include <cctype>
#include <cstdint>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "sptie/core.hpp"
#include "sptie/elimination.hpp"
#include "sptie/manipulation.hpp"
#include "sptie/pairwise.hpp"
#include "sptie/peakedness.hpp"
#include "sptie/scoring.hpp"

namespace sptie {

using Json = nlohmann::ordered_json;

enum class ProfileFormat { PreflibToi, NativeJson };

inline ProfileFormat parse_profile_format(std::string_view text)
{
  if (text == "preflib" || text == "preflib-toi" || text == "toi" || text == "toc")
    return ProfileFormat::PreflibToi;
  if (text == "json" || text == "native-json")
    return ProfileFormat::NativeJson;
  throw ValidationError("unknown profile format '" + std::string(text) + "'");
}

namespace detail {

inline std::size_t line_of_offset(std::string_view text, std::size_t offset)
{
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + offset, '\n'));
}

inline Json parse_json_text(std::string_view text)
{
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(line_of_offset(text, e.byte), e.what());
  }
}

inline std::string trim(std::string_view s)
{
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
    ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
    --e;
  return std::string(s.substr(b, e - b));
}

inline bool all_digits(std::string_view s)
{
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isdigit(ch); });
}

} // namespace detail

// ---- numbers ---------------------------------------------------------------

/// Machine-sized weights are JSON numbers; larger ones are decimal strings.
inline Json integer_to_json(const Integer& value)
{
  if (value >= std::numeric_limits<std::int64_t>::min() && value <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(value);
  return value.str();
}

inline Integer integer_from_json(const Json& j)
{
  if (j.is_number_unsigned())
    return Integer(j.get<std::uint64_t>());
  if (j.is_number_integer())
    return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (!detail::all_digits(s))
      throw ValidationError("expected a decimal integer, got '" + s + "'");
    return Integer(s);
  }
  throw ValidationError("expected an integer, got " + j.dump());
}

inline std::string rational_to_string(const Rational& r) { return r.str(); }

inline Rational rational_from_string(std::string_view text)
{
  const auto slash = text.find('/');
  const std::string num(text.substr(0, slash));
  const std::string den = slash == std::string_view::npos ? "1" : std::string(text.substr(slash + 1));
  const auto strip = [](const std::string& s) { return s.size() > 1 && s[0] == '-' ? s.substr(1) : s; };
  if (!detail::all_digits(strip(num)) || !detail::all_digits(den) || Integer(den) == 0)
    throw ValidationError("bad rational '" + std::string(text) + "'");
  return Rational(Integer(num), Integer(den));
}

// ---- votes -----------------------------------------------------------------

inline Json order_to_json(const WeakOrder& order)
{
  Json groups = Json::array();
  for (const auto& g : order.groups())
    groups.push_back(g);
  return groups;
}

/// Group members may be ids or candidate names.
inline WeakOrder order_from_json(const Json& j, std::span<const std::string> names)
{
  if (!j.is_array())
    throw ValidationError("vote groups must be an array of arrays");
  std::vector<CandidateSet> groups;
  for (const auto& g : j) {
    if (!g.is_array())
      throw ValidationError("vote group must be an array");
    CandidateSet group;
    for (const auto& c : g) {
      if (c.is_number_unsigned() || c.is_number_integer()) {
        const auto id = c.get<std::int64_t>();
        if (id < 0 || static_cast<std::size_t>(id) >= names.size())
          throw ValidationError("candidate " + std::to_string(id) + " referenced but undeclared");
        group.push_back(static_cast<CandidateId>(id));
      } else if (c.is_string()) {
        const auto name = c.get<std::string>();
        auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end())
          throw ValidationError("candidate '" + name + "' referenced but undeclared");
        group.push_back(static_cast<CandidateId>(it - names.begin()));
      } else {
        throw ValidationError("candidate reference must be an id or a name");
      }
    }
    groups.push_back(std::move(group));
  }
  return WeakOrder(std::move(groups), names.size());
}

inline Json voters_to_json(std::span<const WeightedVoter> voters)
{
  Json out = Json::array();
  for (const auto& v : voters) {
    Json j;
    j["weight"] = integer_to_json(v.weight);
    j["groups"] = order_to_json(v.order);
    out.push_back(std::move(j));
  }
  return out;
}

inline std::vector<WeightedVoter> voters_from_json(const Json& j, std::span<const std::string> names)
{
  if (!j.is_array())
    throw ValidationError("voters must be an array");
  std::vector<WeightedVoter> voters;
  for (const auto& v : j) {
    if (!v.is_object() || !v.contains("groups"))
      throw ValidationError("voter needs a 'groups' field");
    Integer w = v.contains("weight") ? integer_from_json(v.at("weight")) : Integer(1);
    voters.push_back({order_from_json(v.at("groups"), names), std::move(w)});
  }
  return voters;
}

inline std::vector<std::string> names_from_json(const Json& j)
{
  if (!j.is_array())
    throw ValidationError("candidates must be an array of names");
  std::vector<std::string> names;
  for (const auto& n : j) {
    if (!n.is_string())
      throw ValidationError("candidate names must be strings");
    names.push_back(n.get<std::string>());
  }
  return names;
}

// ---- profiles --------------------------------------------------------------

inline Json profile_to_json(const Profile& profile)
{
  Json j;
  j["candidates"] = profile.names();
  j["voters"] = voters_to_json(profile.voters());
  return j;
}

inline Profile profile_from_json(const Json& j)
{
  if (!j.is_object() || !j.contains("candidates"))
    throw ValidationError("profile needs a 'candidates' field");
  auto names = names_from_json(j.at("candidates"));
  std::vector<WeightedVoter> voters;
  if (j.contains("voters"))
    voters = voters_from_json(j.at("voters"), names);
  return Profile(std::move(names), std::move(voters));
}

namespace detail {

/// "1,{2,3},4" with 1-based candidate numbers.
inline WeakOrder parse_preflib_body(std::string_view body, std::size_t m, std::size_t line)
{
  std::vector<CandidateSet> groups;
  std::size_t i = 0;
  auto number = [&](std::string_view token) -> CandidateId {
    const auto t = trim(token);
    if (!all_digits(t))
      throw ParseError(line, "bad candidate number '" + t + "'");
    const unsigned long v = std::stoul(t);
    if (v == 0 || v > m)
      throw ValidationError("line " + std::to_string(line) + ": candidate " + t + " referenced but undeclared");
    return static_cast<CandidateId>(v - 1);
  };
  while (i < body.size()) {
    if (body[i] == ' ' || body[i] == '\t') {
      ++i;
      continue;
    }
    if (body[i] == '{') {
      const auto close = body.find('}', i);
      if (close == std::string_view::npos)
        throw ParseError(line, "unterminated '{'");
      CandidateSet group;
      std::string_view inner = body.substr(i + 1, close - i - 1);
      if (trim(inner).empty())
        throw ParseError(line, "empty tie group");
      std::size_t start = 0;
      while (true) {
        const auto comma = inner.find(',', start);
        group.push_back(number(inner.substr(start, comma - start)));
        if (comma == std::string_view::npos)
          break;
        start = comma + 1;
      }
      groups.push_back(std::move(group));
      i = close + 1;
    } else {
      const auto comma = body.find(',', i);
      const auto end = comma == std::string_view::npos ? body.size() : comma;
      groups.push_back({number(body.substr(i, end - i))});
      i = end;
    }
    while (i < body.size() && (body[i] == ' ' || body[i] == '\t'))
      ++i;
    if (i < body.size()) {
      if (body[i] != ',')
        throw ParseError(line, "expected ',' between ranks");
      ++i;
      if (trim(body.substr(i)).empty())
        throw ParseError(line, "trailing ','");
    }
  }
  std::size_t covered = 0;
  for (const auto& g : groups)
    covered += g.size();
  if (covered < m) {
    std::vector<bool> seen(m, false);
    for (const auto& g : groups)
      for (auto c : g)
        seen[c] = true;
    for (std::size_t c = 0; c < m; ++c)
      if (!seen[c])
        throw ValidationError("line " + std::to_string(line) + ": incomplete ballot misses candidate " +
                              std::to_string(c + 1));
  }
  try {
    return WeakOrder(std::move(groups), m);
  } catch (const ValidationError& e) {
    throw ValidationError("line " + std::to_string(line) + ": " + e.what());
  }
}

inline Profile parse_preflib(std::string_view text)
{
  std::size_t declared = 0;
  std::vector<std::pair<std::size_t, std::string>> named;
  std::vector<std::pair<std::size_t, std::string>> ballots;

  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty())
      continue;
    if (line[0] == '#') {
      const std::string header = trim(std::string_view(line).substr(1));
      const auto colon = header.find(':');
      if (colon == std::string::npos)
        continue;
      const std::string key = trim(std::string_view(header).substr(0, colon));
      const std::string value = trim(std::string_view(header).substr(colon + 1));
      if (key == "NUMBER ALTERNATIVES") {
        if (!all_digits(value))
          throw ParseError(line_no, "bad alternative count '" + value + "'");
        declared = std::stoul(value);
      } else if (key.rfind("ALTERNATIVE NAME ", 0) == 0) {
        const std::string idx = trim(std::string_view(key).substr(17));
        if (!all_digits(idx) || std::stoul(idx) == 0)
          throw ParseError(line_no, "bad alternative number '" + idx + "'");
        named.emplace_back(std::stoul(idx), value);
      }
      continue;
    }
    ballots.emplace_back(line_no, line);
  }

  std::size_t m = declared;
  for (const auto& [idx, name] : named)
    m = std::max(m, idx);
  std::vector<std::string> names(m);
  for (std::size_t i = 0; i < m; ++i)
    names[i] = "c" + std::to_string(i + 1);
  for (const auto& [idx, name] : named)
    names[idx - 1] = name;

  std::vector<WeightedVoter> voters;
  for (const auto& [at, line] : ballots) {
    const auto colon = line.find(':');
    if (colon == std::string::npos)
      throw ParseError(at, "ballot line needs 'count: ranking'");
    const std::string count = trim(std::string_view(line).substr(0, colon));
    if (!all_digits(count))
      throw ParseError(at, "bad ballot count '" + count + "'");
    Integer weight(count);
    if (weight == 0)
      throw ParseError(at, "ballot count must be positive");
    voters.push_back({parse_preflib_body(std::string_view(line).substr(colon + 1), m, at), std::move(weight)});
  }
  return Profile(std::move(names), std::move(voters));
}

inline std::string write_preflib(const Profile& profile)
{
  std::string out;
  const std::size_t m = profile.candidate_count();
  out += "# DATA TYPE: toc\n";
  out += "# NUMBER ALTERNATIVES: " + std::to_string(m) + "\n";
  for (std::size_t i = 0; i < m; ++i)
    out += "# ALTERNATIVE NAME " + std::to_string(i + 1) + ": " + profile.names()[i] + "\n";
  out += "# NUMBER VOTERS: " + profile.total_weight().str() + "\n";
  out += "# NUMBER UNIQUE ORDERS: " + std::to_string(profile.voters().size()) + "\n";
  for (const auto& v : profile.voters()) {
    out += v.weight.str() + ": ";
    for (std::size_t g = 0; g < v.order.group_count(); ++g) {
      if (g > 0)
        out += ",";
      const auto& group = v.order.groups()[g];
      if (group.size() > 1)
        out += "{";
      for (std::size_t k = 0; k < group.size(); ++k) {
        if (k > 0)
          out += ",";
        out += std::to_string(group[k] + 1);
      }
      if (group.size() > 1)
        out += "}";
    }
    out += "\n";
  }
  return out;
}

} // namespace detail

inline Profile parse_profile(std::string_view text, ProfileFormat format)
{
  if (format == ProfileFormat::PreflibToi)
    return detail::parse_preflib(text);
  return profile_from_json(detail::parse_json_text(text));
}

/// Deterministic bytes; the native JSON form is compact with fields in declaration order.
inline std::string serialize_profile(const Profile& profile, ProfileFormat format)
{
  if (format == ProfileFormat::PreflibToi)
    return detail::write_preflib(profile);
  return profile_to_json(profile).dump();
}

// ---- results of rules ------------------------------------------------------

inline Json score_table_to_json(const ScoreTable& table, std::span<const std::string> names)
{
  Json j = Json::object();
  for (std::size_t c = 0; c < table.size(); ++c)
    j[names[c]] = rational_to_string(table[c]);
  return j;
}

inline ScoreTable score_table_from_json(const Json& j, std::span<const std::string> names)
{
  ScoreTable table(names.size());
  for (std::size_t c = 0; c < names.size(); ++c) {
    if (!j.contains(names[c]))
      throw ValidationError("score table misses candidate '" + names[c] + "'");
    const auto& v = j.at(names[c]);
    table[c] = v.is_string() ? rational_from_string(v.get<std::string>()) : Rational(integer_from_json(v));
  }
  return table;
}

inline Json candidates_to_json(std::span<const CandidateId> ids, std::span<const std::string> names)
{
  Json j = Json::array();
  for (auto c : ids)
    j.push_back(names[c]);
  return j;
}

inline std::vector<CandidateId> candidates_from_json(const Json& j, std::span<const std::string> names)
{
  if (!j.is_array())
    throw ValidationError("expected an array of candidate names");
  std::vector<CandidateId> ids;
  for (const auto& n : j) {
    const auto name = n.get<std::string>();
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end())
      throw ValidationError("unknown candidate '" + name + "'");
    ids.push_back(static_cast<CandidateId>(it - names.begin()));
  }
  return ids;
}

/// Edges a -> b for every strict majority, labelled with the margin.
inline Json majority_graph_to_json(const MajorityGraph& graph, std::span<const std::string> names)
{
  Json j;
  j["candidates"] = Json(std::vector<std::string>(names.begin(), names.end()));
  Json edges = Json::array();
  for (CandidateId a = 0; a < graph.candidate_count(); ++a)
    for (CandidateId b = 0; b < graph.candidate_count(); ++b)
      if (graph.margin(a, b) > 0) {
        Json e;
        e["from"] = names[a];
        e["to"] = names[b];
        e["margin"] = integer_to_json(graph.margin(a, b));
        edges.push_back(std::move(e));
      }
  j["edges"] = std::move(edges);
  return j;
}

inline Json axis_to_json(const Axis& axis, std::span<const std::string> names)
{
  return candidates_to_json(axis.order(), names);
}

inline Axis axis_from_json(const Json& j, std::span<const std::string> names)
{
  return Axis(candidates_from_json(j, names));
}

inline Json decomposition_to_json(const PeakDecomposition& d, const Axis& axis, std::span<const std::string> names)
{
  auto seg = [&](Segment s) {
    Json a = Json::array();
    for (std::size_t i = s.begin; i < s.end; ++i)
      a.push_back(names[axis.at(i)]);
    return a;
  };
  Json j;
  j["O1"] = seg(d.o1);
  j["X"] = seg(d.x);
  j["Y"] = seg(d.y);
  j["Z"] = seg(d.z);
  j["O2"] = seg(d.o2);
  return j;
}

// ---- manipulation ----------------------------------------------------------

inline Json rule_to_json(const Rule& rule)
{
  Json j;
  if (const auto* s = std::get_if<ScoringRule>(&rule)) {
    j["type"] = "scoring";
    j["vector"] = s->vector.values();
    j["extension"] = std::string(to_string(s->extension));
  } else if (const auto* c = std::get_if<CopelandRule>(&rule)) {
    j["type"] = "copeland";
    j["alpha"] = rational_to_string(c->alpha());
  } else {
    j["type"] = "elimination-veto";
  }
  return j;
}

inline Rule rule_from_json(const Json& j)
{
  const auto type = j.at("type").get<std::string>();
  if (type == "scoring")
    return ScoringRule{ScoringVector(j.at("vector").get<std::vector<std::int64_t>>()),
                       parse_extension(j.at("extension").get<std::string>())};
  if (type == "copeland") {
    const auto& a = j.at("alpha");
    return CopelandRule(a.is_string() ? rational_from_string(a.get<std::string>()) : Rational(integer_from_json(a)));
  }
  if (type == "elimination-veto" || type == "elimveto")
    return EliminationVetoRule{};
  throw ValidationError("unknown rule type '" + type + "'");
}

/// Textual rule form used on the command line: scoring:<vector>:<ext>, copeland:<alpha>, elimveto.
inline Rule parse_rule_spec(std::string_view text)
{
  if (text == "elimveto" || text == "elimination-veto")
    return EliminationVetoRule{};
  if (text.rfind("copeland:", 0) == 0)
    return CopelandRule(rational_from_string(text.substr(9)));
  if (text.rfind("scoring:", 0) == 0) {
    const auto rest = text.substr(8);
    const auto colon = rest.rfind(':');
    if (colon == std::string_view::npos)
      throw ValidationError("scoring rule needs scoring:<vector>:<extension>");
    return ScoringRule{ScoringVector::parse(rest.substr(0, colon)), parse_extension(rest.substr(colon + 1))};
  }
  throw ValidationError("unknown rule '" + std::string(text) + "'");
}

inline Json instance_to_json(const CwcmInstance& instance)
{
  Json j;
  j["candidates"] = instance.candidates;
  j["axis"] = axis_to_json(instance.axis, instance.candidates);
  j["model"] = std::string(to_string(instance.model));
  j["rule"] = rule_to_json(instance.rule);
  j["S"] = voters_to_json(instance.nonmanipulators);
  Json t = Json::array();
  for (const auto& w : instance.manipulator_weights)
    t.push_back(integer_to_json(w));
  j["T"] = std::move(t);
  j["p"] = instance.candidates.at(instance.preferred);
  return j;
}

inline CwcmInstance instance_from_json(const Json& j)
{
  if (!j.is_object())
    throw ValidationError("CWCM instance must be a JSON object");
  CwcmInstance instance;
  try {
    instance.candidates = names_from_json(j.at("candidates"));
    instance.axis = axis_from_json(j.at("axis"), instance.candidates);
    instance.model = parse_model(j.at("model").get<std::string>());
    instance.rule = rule_from_json(j.at("rule"));
    instance.nonmanipulators = voters_from_json(j.value("S", Json::array()), instance.candidates);
    for (const auto& w : j.value("T", Json::array()))
      instance.manipulator_weights.push_back(integer_from_json(w));
    const auto p = j.at("p").get<std::string>();
    auto it = std::find(instance.candidates.begin(), instance.candidates.end(), p);
    if (it == instance.candidates.end())
      throw ValidationError("preferred candidate '" + p + "' is not a candidate");
    instance.preferred = static_cast<CandidateId>(it - instance.candidates.begin());
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("malformed CWCM instance: ") + e.what());
  }
  instance.validate();
  return instance;
}

inline Json result_to_json(const ManipulationResult& result)
{
  Json j;
  j["decision"] = result.decision;
  if (result.witness) {
    Json w = Json::array();
    for (const auto& v : *result.witness)
      w.push_back(order_to_json(v));
    j["witness"] = std::move(w);
  } else {
    j["witness"] = nullptr;
  }
  j["solver"] = std::string(to_string(result.solver));
  return j;
}

inline ManipulationResult result_from_json(const Json& j, std::span<const std::string> names)
{
  ManipulationResult r;
  r.decision = j.at("decision").get<bool>();
  if (!j.at("witness").is_null()) {
    std::vector<WeakOrder> votes;
    for (const auto& v : j.at("witness"))
      votes.push_back(order_from_json(v, names));
    r.witness = std::move(votes);
  }
  const auto tag = j.at("solver").get<std::string>();
  if (tag != "polytime" && tag != "oracle")
    throw ValidationError("unknown solver tag '" + tag + "'");
  r.solver = tag == "polytime" ? SolverTag::Polytime : SolverTag::Oracle;
  return r;
}

} // namespace sptie

#endif // SPTIE_IO_HPP
