#pragma once

#include <functional>
#include <optional>
#include <string>

#include "errors.hpp"
#include "poset.hpp"
#include "stability.hpp"

namespace caclab {

enum class ProblemKind {
  Cac,
  Scac,
  OmegaCac,
  OmegaScac,
  ScacSmall,
  ScacLarge,
  ScacType,
};

const char* problem_kind_name(ProblemKind k);
std::optional<ProblemKind> problem_kind_from_name(const std::string& s);
bool kind_requires_stability(ProblemKind k);
bool kind_requires_omega(ProblemKind k);

/// Finite stand-in for "infinite": a solution must have at least min_size
/// elements. universe_cap bounds the brute-force solver.
struct SizePolicy {
  std::uint64_t min_size = 3;
  std::uint64_t universe_cap = 20;
};

enum class SolutionKind : std::uint8_t { Chain, Antichain };

struct SolutionSet {
  ElemSet elements;  // sorted ascending, no duplicates
  SolutionKind kind = SolutionKind::Chain;
};

SolutionSet make_solution(ElemSet elements, SolutionKind kind);

struct ProblemInstance {
  FinitePoset poset;
  std::optional<StableAnnotation> annotation;
  std::optional<StableType> type_flag;  // the T in an SCAC^type instance
};

/// Side conditions of the given problem kind: omega-order for the omega
/// kinds, an accepted stable annotation for the stable kinds, matching type
/// tags for the restricted kinds, and a consistent T flag for SCAC^type.
Verdict validate_instance(ProblemKind kind, const ProblemInstance& inst,
                          const SizePolicy& policy);

/// Accepts iff sol.elements lies in the universe, has at least min_size
/// elements, and is a chain/antichain matching sol.kind.
Verdict verify_solution(ProblemKind kind, const ProblemInstance& inst,
                        const SolutionSet& sol, const SizePolicy& policy);

/// Maximum-cardinality chain (lexicographically least among maximum ones),
/// TooLarge beyond policy.universe_cap.
Result<ElemSet> max_chain(const FinitePoset& p, std::uint64_t universe_cap = 20);
Result<ElemSet> max_antichain(const FinitePoset& p, std::uint64_t universe_cap = 20);

/// Deterministic solver oracle: a maximum chain if one of size >= min_size
/// exists, else a maximum antichain if one exists, else NoSolution.
Result<SolutionSet> brute_force_solve(ProblemKind kind,
                                      const ProblemInstance& inst,
                                      const SizePolicy& policy);

/// Largest chain-or-antichain cardinality; the "max feasible" solution size.
Result<std::uint64_t> max_feasible_solution(const FinitePoset& p,
                                            std::uint64_t universe_cap = 20);

/// Enumerates every solution of size >= policy.min_size (each qualifying
/// subset once; sets that are both chain and antichain are reported as
/// chains). Intended for small universes only.
void for_each_solution(const ProblemInstance& inst, const SizePolicy& policy,
                       const std::function<void(const SolutionSet&)>& fn);

}  // namespace caclab
