#pragma once

#include <functional>
#include <utility>

#include "errors.hpp"
#include "poset.hpp"
#include "problems.hpp"
#include "stability.hpp"

namespace caclab {

/// The omega-ordered part of <=_P: pairs (x, y) with x <=_P y and x <= y.
FinitePoset split_plus(const FinitePoset& p);

/// The reversed part re-oriented: pairs (y, x) with x <=_P y and y <= x.
FinitePoset split_minus(const FinitePoset& p);

/// <=_Q of the thinning construction: split_plus for a small-type instance,
/// split_minus for a large-type one. Always omega-ordered.
FinitePoset build_leq_q(const FinitePoset& p, StableType type);

using OmegaSolver =
    std::function<Result<SolutionSet>(const FinitePoset&, const SizePolicy&)>;

/// Two-stage solve of a general poset through an omega-ordered solver:
/// stage 1 solves split_plus(P) and keeps a chain; otherwise stage 2 solves
/// split_minus(P) restricted to the stage-1 antichain. Either way the result
/// verifies against P.
Result<SolutionSet> compose_cac_via_omega(const FinitePoset& p,
                                          const OmegaSolver& solver,
                                          const SizePolicy& policy);

/// Largest min_size, capped at 3, at which both stages of the composition
/// are guaranteed solvable on every poset of the given universe size. The
/// counting bound |P| <= maxchain * maxantichain drives it: stage one needs
/// nine elements to promise a 3-solution whose antichain case leaves stage
/// two at least five elements.
std::uint64_t compose_safe_min_size(std::uint64_t universe_size);

/// R(m, n) of the thinning construction: fails exactly when m, n are
/// <=_Q-incomparable yet <=_P-comparable.
bool thinning_r(const FinitePoset& p, const FinitePoset& q, Elem m, Elem n);

struct ThinningTrace {
  std::vector<ElemSet> stages;  // X_0, X_1, ... up to the first repeat
  ElemSet result;
};

/// Thins a <=_Q-solution X into a <=_P-solution Y. Chains pass through
/// unchanged; an antichain is filtered stage by stage with the pivot rule,
/// and the k-th element of X survives into Y iff it survives into X_k.
Result<std::pair<SolutionSet, ThinningTrace>> stable_thinning(
    const FinitePoset& p, StableType type, const SolutionSet& x,
    const SizePolicy& policy);

/// Elements with no <=_P-successor later in the natural order.
ElemSet successor_free_set(const FinitePoset& p);

/// Greedy chain from start: repeatedly append the least new upper bound.
Result<SolutionSet> greedy_chain(const FinitePoset& p, Elem start);

/// Greedy antichain through the successor-free set of an omega-ordered
/// poset: x_0 is the least successor of 0 inside the set (0 itself counts
/// via reflexivity unless include_reflexive_start is false), and each
/// x_{n+1} is the least member above x_n + 1.
Result<SolutionSet> greedy_antichain(const FinitePoset& p,
                                     bool include_reflexive_start = true);

/// Large-type instances are flipped to the dual order with S and L swapped;
/// small-type instances pass through. Solutions transfer verbatim.
Result<ProblemInstance> to_small_type(const ProblemInstance& inst);

/// Attaches the T flag matching the annotation's type.
Result<ProblemInstance> append_type_flag(const ProblemInstance& inst);

}  // namespace caclab
