#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"
#include "forcing.hpp"
#include "game.hpp"
#include "oracle.hpp"
#include "poset.hpp"
#include "problems.hpp"
#include "reductions.hpp"
#include "tree.hpp"

namespace caclab::io {

// Poset documents: {"universe":[...], "pairs":[[x,y],...]} with pairs in
// ascending lex order. Reflexive pairs may be omitted on input; they are
// added on load, flagged through "normalized", and always emitted.

struct LoadedPoset {
  FinitePoset poset;
  bool normalized = false;
};

Result<LoadedPoset> poset_from_json(const std::string& text);
std::string poset_to_json(const FinitePoset& p, bool normalized = false);

// Instance documents: a poset document plus optional "annotation"
// [[x,"S|L|I",t],...], "type_tag", "type_flag", and a sibling "policy"
// object carrying "min_size".

struct LoadedInstance {
  ProblemInstance instance;
  bool normalized = false;
  std::optional<SizePolicy> policy;
};

Result<LoadedInstance> instance_from_json(const std::string& text);
std::string instance_to_json(const ProblemInstance& inst,
                             bool normalized = false,
                             const std::optional<SizePolicy>& policy = {});

Result<SolutionSet> solution_from_json(const std::string& text);
std::string solution_to_json(const SolutionSet& sol);

// Machine documents: {"use_bound":u, "entries":[[w,[members...],out],...]}
// for tables, {"builtin": "<spec>", "use_bound":u} or a bare spec string
// for builtins. A machines file wraps several under "machines".

Result<OracleMachine> machine_from_json(const std::string& text,
                                        std::uint32_t default_use_bound =
                                            OracleMachine::kDefaultUseBound);
Result<std::vector<OracleMachine>> machines_from_json(
    const std::string& text,
    std::uint32_t default_use_bound = OracleMachine::kDefaultUseBound);
std::string machine_to_json(const OracleMachine& m);

// Condition documents: {"pi": <poset document on an initial segment>,
// "assign": [[x,"S|L|I",t],...]}.

Result<Condition> condition_from_json(
    const std::string& text,
    IsolatedReading reading = IsolatedReading::ExcludeSelf);
std::string condition_to_json(const Condition& c);

std::string verdict_to_json(const Verdict& v);
std::string error_to_json(const Error& e);

std::string transcript_to_json(const GameTranscript& t);
std::string thinning_to_json(const SolutionSet& y, const ThinningTrace& trace,
                             bool include_trace);
std::string diagonal_to_json(const DiagonalResult& r);
std::string witness_report_to_json(const WitnessReport& r);
std::string tree_to_json(const ExtensionTree& t, const Labeling& lb,
                         const LabeledSubtree& sub);

// DOT export: one node per element, one edge per covering pair; tree nodes
// are annotated with their labels.
std::string poset_to_dot(const FinitePoset& p);
std::string tree_to_dot(const ExtensionTree& t, const Labeling& lb,
                        const LabeledSubtree& sub);

}  // namespace caclab::io
