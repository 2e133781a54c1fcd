#include "json_io.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace caclab::io {

using nlohmann::json;

namespace {

constexpr int kIndent = 2;

std::string dump(const json& j) { return j.dump(kIndent) + "\n"; }

Result<json> parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded())
    return make_error(Errc::ParseError, {}, "input is not valid JSON");
  return j;
}

// Type mismatches inside documents surface as ParseError, not exceptions.
template <typename T, typename Fn>
Result<T> guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    return make_error(Errc::ParseError, {}, e.what());
  }
}

Result<LoadedPoset> poset_from_value(const json& j) {
  if (!j.is_object() || !j.contains("universe") || !j.contains("pairs"))
    return make_error(Errc::ParseError, {},
                      "poset document needs \"universe\" and \"pairs\"");
  ElemSet universe;
  for (const auto& v : j.at("universe")) {
    if (!v.is_number_unsigned())
      return make_error(Errc::ParseError, {}, "universe entries must be naturals");
    universe.push_back(v.get<Elem>());
  }
  std::vector<std::pair<Elem, Elem>> pairs;
  for (const auto& v : j.at("pairs")) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number_unsigned() ||
        !v[1].is_number_unsigned())
      return make_error(Errc::ParseError, {}, "pairs must be [x, y] naturals");
    pairs.emplace_back(v[0].get<Elem>(), v[1].get<Elem>());
  }

  bool normalized = false;
  for (Elem x : universe) {
    auto refl = std::pair{x, x};
    if (std::find(pairs.begin(), pairs.end(), refl) == pairs.end()) {
      pairs.push_back(refl);
      normalized = true;
    }
  }

  auto p = FinitePoset::validate(std::move(universe), std::move(pairs));
  if (!p.ok()) return p.error();
  return LoadedPoset{std::move(p).value(), normalized};
}

json poset_to_value(const FinitePoset& p, bool normalized) {
  json j;
  j["universe"] = p.universe();
  json pairs = json::array();
  for (const auto& [x, y] : p.pairs()) pairs.push_back(json::array({x, y}));
  j["pairs"] = std::move(pairs);
  j["normalized"] = normalized;
  return j;
}

Result<std::vector<BehaviorEntry>> annotation_entries_from_value(const json& j) {
  std::vector<BehaviorEntry> entries;
  for (const auto& v : j) {
    if (!v.is_array() || v.size() != 3 || !v[0].is_number_unsigned() ||
        !v[1].is_string() || !v[2].is_number_unsigned())
      return make_error(Errc::ParseError, {},
                        "annotation rows must be [x, \"S|L|I\", t]");
    const std::string tag = v[1].get<std::string>();
    auto b = tag.size() == 1 ? behavior_from_letter(tag[0]) : std::nullopt;
    if (!b) return make_error(Errc::ParseError, {}, "unknown behavior tag " + tag);
    entries.push_back({v[0].get<Elem>(), *b, v[2].get<std::uint64_t>()});
  }
  return entries;
}

json annotation_entries_to_value(const std::vector<BehaviorEntry>& entries) {
  json rows = json::array();
  for (const auto& e : entries)
    rows.push_back(json::array(
        {e.element, std::string(1, behavior_letter(e.tag)), e.point}));
  return rows;
}

}  // namespace

Result<LoadedPoset> poset_from_json(const std::string& text) {
  return guarded<LoadedPoset>([&]() -> Result<LoadedPoset> {
  auto j = parse(text);
  if (!j.ok()) return j.error();
  return poset_from_value(j.value());
  });
}

std::string poset_to_json(const FinitePoset& p, bool normalized) {
  return dump(poset_to_value(p, normalized));
}

Result<LoadedInstance> instance_from_json(const std::string& text) {
  return guarded<LoadedInstance>([&]() -> Result<LoadedInstance> {
  auto parsed = parse(text);
  if (!parsed.ok()) return parsed.error();
  const json& j = parsed.value();

  auto base = poset_from_value(j);
  if (!base.ok()) return base.error();

  LoadedInstance out;
  out.instance.poset = std::move(base.value().poset);
  out.normalized = base.value().normalized;

  if (j.contains("annotation")) {
    auto entries = annotation_entries_from_value(j.at("annotation"));
    if (!entries.ok()) return entries.error();
    StableType type = StableType::SmallType;
    if (j.contains("type_tag")) {
      const std::string t = j.at("type_tag").get<std::string>();
      if (t == "small-type") type = StableType::SmallType;
      else if (t == "large-type") type = StableType::LargeType;
      else return make_error(Errc::ParseError, {}, "unknown type_tag " + t);
    } else {
      // Infer from the tags when the document leaves the type implicit.
      bool has_large = std::any_of(
          entries.value().begin(), entries.value().end(),
          [](const BehaviorEntry& e) { return e.tag == Behavior::Large; });
      type = has_large ? StableType::LargeType : StableType::SmallType;
    }
    auto ann = StableAnnotation::make(std::move(entries).value(), type);
    if (!ann.ok()) return ann.error();
    out.instance.annotation = std::move(ann).value();
  }

  if (j.contains("type_flag")) {
    const std::string f = j.at("type_flag").get<std::string>();
    if (f == "S") out.instance.type_flag = StableType::SmallType;
    else if (f == "L") out.instance.type_flag = StableType::LargeType;
    else return make_error(Errc::ParseError, {}, "type_flag must be S or L");
  }

  if (j.contains("policy")) {
    SizePolicy policy;
    const json& pj = j.at("policy");
    if (pj.contains("min_size")) policy.min_size = pj.at("min_size").get<std::uint64_t>();
    if (pj.contains("universe_cap"))
      policy.universe_cap = pj.at("universe_cap").get<std::uint64_t>();
    if (policy.min_size < 1)
      return make_error(Errc::ParseError, {}, "min_size must be at least 1");
    out.policy = policy;
  }
  return out;
  });
}

std::string instance_to_json(const ProblemInstance& inst, bool normalized,
                             const std::optional<SizePolicy>& policy) {
  json j = poset_to_value(inst.poset, normalized);
  if (inst.annotation) {
    j["annotation"] = annotation_entries_to_value(inst.annotation->entries());
    j["type_tag"] = stable_type_name(inst.annotation->type_tag());
  }
  if (inst.type_flag)
    j["type_flag"] = *inst.type_flag == StableType::SmallType ? "S" : "L";
  if (policy) {
    j["policy"] = {{"min_size", policy->min_size},
                   {"universe_cap", policy->universe_cap}};
  }
  return dump(j);
}

Result<SolutionSet> solution_from_json(const std::string& text) {
  return guarded<SolutionSet>([&]() -> Result<SolutionSet> {
  auto parsed = parse(text);
  if (!parsed.ok()) return parsed.error();
  const json& j = parsed.value();
  if (!j.is_object() || !j.contains("elements") || !j.contains("kind"))
    return make_error(Errc::ParseError, {},
                      "solution needs \"elements\" and \"kind\"");
  ElemSet elements;
  for (const auto& v : j.at("elements")) elements.push_back(v.get<Elem>());
  const std::string kind = j.at("kind").get<std::string>();
  if (kind != "chain" && kind != "antichain")
    return make_error(Errc::ParseError, {}, "kind must be chain or antichain");
  return make_solution(std::move(elements), kind == "chain"
                                                ? SolutionKind::Chain
                                                : SolutionKind::Antichain);
  });
}

std::string solution_to_json(const SolutionSet& sol) {
  json j;
  j["elements"] = sol.elements;
  j["kind"] = sol.kind == SolutionKind::Chain ? "chain" : "antichain";
  return dump(j);
}

namespace {

Result<OracleMachine> machine_from_value(const json& j,
                                         std::uint32_t default_use_bound) {
  if (j.is_string())
    return machine_from_spec(j.get<std::string>(), default_use_bound);
  if (!j.is_object())
    return make_error(Errc::ParseError, {}, "machine must be a spec or object");
  std::uint32_t u = default_use_bound;
  if (j.contains("use_bound")) u = j.at("use_bound").get<std::uint32_t>();
  if (j.contains("builtin"))
    return machine_from_spec(j.at("builtin").get<std::string>(), u);
  if (!j.contains("entries"))
    return make_error(Errc::ParseError, {},
                      "machine object needs \"entries\" or \"builtin\"");
  std::vector<OracleMachine::TableEntry> entries;
  for (const auto& row : j.at("entries")) {
    if (!row.is_array() || row.size() != 3)
      return make_error(Errc::ParseError, {},
                        "entries rows must be [w, [members...], out]");
    OracleMachine::TableEntry e;
    e.input = row[0].get<Elem>();
    for (const auto& m : row[1]) e.oracle.push_back(m.get<Elem>());
    e.output = row[2].get<int>();
    entries.push_back(std::move(e));
  }
  return OracleMachine::from_table(u, std::move(entries));
}

json machine_to_value(const OracleMachine& m) {
  json j;
  j["use_bound"] = m.use_bound();
  if (m.is_builtin()) {
    j["builtin"] = m.spec_string();
    return j;
  }
  json rows = json::array();
  for (const auto& e : m.table_entries())
    rows.push_back(json::array({e.input, e.oracle, e.output}));
  j["entries"] = std::move(rows);
  return j;
}

}  // namespace

Result<OracleMachine> machine_from_json(const std::string& text,
                                        std::uint32_t default_use_bound) {
  return guarded<OracleMachine>([&]() -> Result<OracleMachine> {
  auto parsed = parse(text);
  if (!parsed.ok()) return parsed.error();
  return machine_from_value(parsed.value(), default_use_bound);
  });
}

Result<std::vector<OracleMachine>> machines_from_json(
    const std::string& text, std::uint32_t default_use_bound) {
  return guarded<std::vector<OracleMachine>>(
      [&]() -> Result<std::vector<OracleMachine>> {
  auto parsed = parse(text);
  if (!parsed.ok()) return parsed.error();
  const json& j = parsed.value();
  std::uint32_t u = default_use_bound;
  if (j.is_object() && j.contains("use_bound"))
    u = j.at("use_bound").get<std::uint32_t>();

  std::vector<OracleMachine> out;
  if (j.is_object() && j.contains("machines")) {
    for (const auto& mj : j.at("machines")) {
      auto m = machine_from_value(mj, u);
      if (!m.ok()) return m.error();
      out.push_back(std::move(m).value());
    }
    return out;
  }
  auto m = machine_from_value(j, u);
  if (!m.ok()) return m.error();
  out.push_back(std::move(m).value());
  return out;
  });
}

std::string machine_to_json(const OracleMachine& m) {
  return dump(machine_to_value(m));
}

Result<Condition> condition_from_json(const std::string& text,
                                      IsolatedReading reading) {
  return guarded<Condition>([&]() -> Result<Condition> {
  auto parsed = parse(text);
  if (!parsed.ok()) return parsed.error();
  const json& j = parsed.value();
  if (!j.is_object() || !j.contains("pi") || !j.contains("assign"))
    return make_error(Errc::ParseError, {},
                      "condition needs \"pi\" and \"assign\"");
  auto base = poset_from_value(j.at("pi"));
  if (!base.ok()) return base.error();
  auto entries = annotation_entries_from_value(j.at("assign"));
  if (!entries.ok()) return entries.error();

  Condition::Assign assign(base.value().poset.size(),
                           {Behavior::Isolated, 0});
  std::vector<bool> seen(assign.size(), false);
  for (const auto& e : entries.value()) {
    if (e.element >= assign.size())
      return make_error(Errc::IncompleteAssignment, {e.element},
                        "assignment names an element outside pi");
    assign[e.element] = {e.tag, e.point};
    seen[e.element] = true;
  }
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (!seen[i]) return make_error(Errc::IncompleteAssignment, {i});
  return Condition::validate(std::move(base).value().poset, std::move(assign),
                             reading);
  });
}

std::string condition_to_json(const Condition& c) {
  json j;
  j["pi"] = poset_to_value(c.order(), false);
  json assign = json::array();
  for (Elem x = 0; x < c.size(); ++x)
    assign.push_back(json::array(
        {x, std::string(1, behavior_letter(c.assign()[x].first)),
         c.assign()[x].second}));
  j["assign"] = std::move(assign);
  return dump(j);
}

namespace {

json error_to_value(const Error& e) {
  json j;
  j["error"] = errc_name(e.code);
  j["witness"] = e.witness;
  if (!e.detail.empty()) j["detail"] = e.detail;
  return j;
}

}  // namespace

std::string verdict_to_json(const Verdict& v) {
  json j;
  j["ok"] = v.ok();
  if (!v.ok()) j.update(error_to_value(v.error()));
  return dump(j);
}

std::string error_to_json(const Error& e) { return dump(error_to_value(e)); }

std::string transcript_to_json(const GameTranscript& t) {
  json rounds = json::array();
  for (const auto& r : t.rounds) {
    json rj;
    rj["player"] = r.player == GameRound::Player::One ? "I" : "II";
    if (r.player == GameRound::Player::Two) rj["victory"] = r.claims_victory;
    rj["set"] = r.payload;
    rounds.push_back(std::move(rj));
  }
  json j;
  j["rounds"] = std::move(rounds);
  const char* kind = t.verdict.kind == GameVerdict::Kind::TwoWins ? "II-wins"
                     : t.verdict.kind == GameVerdict::Kind::OneWins
                         ? "I-wins"
                         : "exhausted";
  j["verdict"] = {{"kind", kind}, {"round", t.verdict.round},
                  {"reason", t.verdict.reason}};
  return dump(j);
}

std::string thinning_to_json(const SolutionSet& y, const ThinningTrace& trace,
                             bool include_trace) {
  json j;
  j["elements"] = y.elements;
  j["kind"] = y.kind == SolutionKind::Chain ? "chain" : "antichain";
  if (include_trace) {
    json stages = json::array();
    for (const auto& s : trace.stages) stages.push_back(s);
    j["trace"] = {{"stages", std::move(stages)}, {"result", trace.result}};
  }
  return dump(j);
}

std::string diagonal_to_json(const DiagonalResult& r) {
  json j = json::parse(instance_to_json(
      ProblemInstance{r.poset, r.annotation, std::nullopt}, false, {}));
  json log = json::array();
  for (const auto& e : r.log) {
    json ej;
    ej["stage"] = e.stage;
    ej["machine"] = e.machine_index;
    ej["visit"] = e.visit;
    ej["already_satisfied"] = e.already_satisfied;
    ej["adopted"] = e.adopted;
    if (e.witnesses)
      ej["witnesses"] = json::array(
          {(*e.witnesses)[0], (*e.witnesses)[1], (*e.witnesses)[2]});
    ej["size_after"] = e.size_after;
    log.push_back(std::move(ej));
  }
  j["log"] = std::move(log);
  return dump(j);
}

std::string witness_report_to_json(const WitnessReport& r) {
  json j;
  j["variant"] = reduction_variant_name(r.variant);
  j["instances_checked"] = r.instances_checked;
  j["solutions_checked"] = r.solutions_checked;
  json failures = json::array();
  for (const auto& f : r.failures) {
    json fj;
    fj["instance"] = f.instance_index;
    if (f.q_solution) fj["q_solution"] = *f.q_solution;
    fj.update(error_to_value(f.error));
    failures.push_back(std::move(fj));
  }
  j["failures"] = std::move(failures);
  j["ok"] = r.ok();
  return dump(j);
}

std::string tree_to_json(const ExtensionTree& t, const Labeling& lb,
                         const LabeledSubtree& sub) {
  json j;
  j["E"] = t.params().e_set;
  j["I"] = t.params().i_set;
  j["n"] = t.params().threshold;
  j["w_max"] = t.params().w_cap;
  j["kappa"] = lb.kappa;
  json nodes = json::array();
  for (std::size_t i = 0; i < t.size(); ++i) {
    json nj;
    nj["alpha"] = t.nodes()[i].alpha;
    if (lb.finite(i)) nj["label"] = lb.at(i);
    else nj["label"] = "inf";
    nj["terminal"] = t.nodes()[i].terminal;
    nj["in_labeled_subtree"] = sub.contains(i);
    nodes.push_back(std::move(nj));
  }
  j["nodes"] = std::move(nodes);
  return dump(j);
}

std::string poset_to_dot(const FinitePoset& p) {
  std::ostringstream os;
  os << "digraph poset {\n  rankdir=BT;\n";
  for (Elem x : p.universe()) os << "  n" << x << " [label=\"" << x << "\"];\n";
  for (Elem x : p.universe())
    for (Elem y : p.universe()) {
      if (x == y || !p.leq(x, y)) continue;
      bool covering = true;  // no z strictly between
      for (Elem z : p.universe())
        if (z != x && z != y && p.leq(x, z) && p.leq(z, y)) {
          covering = false;
          break;
        }
      if (covering) os << "  n" << x << " -> n" << y << ";\n";
    }
  os << "}\n";
  return os.str();
}

std::string tree_to_dot(const ExtensionTree& t, const Labeling& lb,
                        const LabeledSubtree& sub) {
  std::ostringstream os;
  os << "digraph extension_tree {\n";
  for (std::size_t i = 0; i < t.size(); ++i) {
    os << "  n" << i << " [label=\"";
    const auto& a = t.nodes()[i].alpha;
    if (a.empty()) os << "()";
    for (std::size_t k = 0; k < a.size(); ++k) os << (k ? "," : "") << a[k];
    os << " | lb=";
    if (lb.finite(i)) os << lb.at(i);
    else os << "inf";
    os << "\"";
    if (sub.contains(i)) os << " penwidth=2";
    if (t.nodes()[i].terminal) os << " shape=box";
    os << "];\n";
    if (t.nodes()[i].parent >= 0)
      os << "  n" << t.nodes()[i].parent << " -> n" << i << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace caclab::io
