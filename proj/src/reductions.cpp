#include "reductions.hpp"

#include <algorithm>

namespace caclab {

namespace {

FinitePoset filtered(const FinitePoset& p,
                     const std::function<bool(Elem, Elem)>& keep_as) {
  // keep_as(x, y) decides whether the output contains (x, y).
  std::vector<std::pair<Elem, Elem>> out;
  for (Elem x : p.universe())
    for (Elem y : p.universe())
      if (keep_as(x, y)) out.emplace_back(x, y);
  auto r = FinitePoset::validate(p.universe(), std::move(out));
  return std::move(r).value();
}

}  // namespace

FinitePoset split_plus(const FinitePoset& p) {
  return filtered(p, [&](Elem x, Elem y) { return p.leq(x, y) && x <= y; });
}

FinitePoset split_minus(const FinitePoset& p) {
  return filtered(p, [&](Elem y, Elem x) { return p.leq(x, y) && y <= x; });
}

FinitePoset build_leq_q(const FinitePoset& p, StableType type) {
  return type == StableType::SmallType ? split_plus(p) : split_minus(p);
}

Result<SolutionSet> compose_cac_via_omega(const FinitePoset& p,
                                          const OmegaSolver& solver,
                                          const SizePolicy& policy) {
  FinitePoset plus = split_plus(p);
  auto stage1 = solver(plus, policy);
  if (!stage1.ok())
    return make_error(Errc::SolverFailed, stage1.error().witness,
                      std::string("stage 1: ") + errc_name(stage1.error().code));
  if (stage1.value().kind == SolutionKind::Chain) return stage1;

  const ElemSet& x = stage1.value().elements;
  auto minus = restrict_to(split_minus(p), x);
  auto stage2 = solver(minus.value(), policy);
  if (!stage2.ok())
    return make_error(Errc::SolverFailed, stage2.error().witness,
                      std::string("stage 2: ") + errc_name(stage2.error().code));
  return stage2;
}

std::uint64_t compose_safe_min_size(std::uint64_t universe_size) {
  if (universe_size >= 9) return 3;
  if (universe_size >= 2) return 2;
  return universe_size;
}

bool thinning_r(const FinitePoset& p, const FinitePoset& q, Elem m, Elem n) {
  return !(q.incomparable(m, n) && p.comparable(m, n));
}

Result<std::pair<SolutionSet, ThinningTrace>> stable_thinning(
    const FinitePoset& p, StableType type, const SolutionSet& x,
    const SizePolicy& policy) {
  FinitePoset q = build_leq_q(p, type);
  ProblemInstance qinst{q, std::nullopt, std::nullopt};
  if (auto v = verify_solution(ProblemKind::OmegaScac, qinst, x, policy); !v)
    return make_error(Errc::NotASolution, v.error().witness,
                      std::string(errc_name(v.error().code)));

  SolutionSet sol = make_solution(x.elements, x.kind);
  if (sol.kind == SolutionKind::Chain)
    return std::pair{sol, ThinningTrace{{}, sol.elements}};

  ThinningTrace trace;
  // X_0 keeps the members that R-agree with the least element.
  ElemSet stage;
  for (Elem e : sol.elements)
    if (thinning_r(p, q, sol.elements.front(), e)) stage.push_back(e);
  trace.stages.push_back(stage);

  // X_{n+1} protects the first n+2 members of X_n and keeps later ones that
  // R-agree with the pivot x^n_{n+1}. Equal consecutive stages are not a
  // fixpoint: the pivot advances with n, so the loop runs until every
  // member is protected.
  for (std::size_t n = 0;; ++n) {
    const ElemSet& cur = trace.stages.back();
    if (n + 1 >= cur.size()) break;
    Elem pivot = cur[n + 1];
    ElemSet next(cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(n + 2));
    for (std::size_t i = n + 2; i < cur.size(); ++i)
      if (thinning_r(p, q, pivot, cur[i])) next.push_back(cur[i]);
    trace.stages.push_back(std::move(next));
  }

  // Rank rule: the k-th element of X belongs to Y iff it is still in X_k.
  // Stages repeat once they stabilize, so clamp the index to the last stage.
  ElemSet y;
  for (std::size_t k = 0; k < sol.elements.size(); ++k) {
    const ElemSet& xs = trace.stages[std::min(k, trace.stages.size() - 1)];
    if (std::binary_search(xs.begin(), xs.end(), sol.elements[k]))
      y.push_back(sol.elements[k]);
  }
  trace.result = y;
  return std::pair{make_solution(std::move(y), SolutionKind::Antichain),
                   std::move(trace)};
}

ElemSet successor_free_set(const FinitePoset& p) {
  ElemSet out;
  for (Elem x : p.universe()) {
    bool free = true;
    for (Elem y : p.universe())
      if (x < y && p.leq(x, y)) {
        free = false;
        break;
      }
    if (free) out.push_back(x);
  }
  return out;
}

Result<SolutionSet> greedy_chain(const FinitePoset& p, Elem start) {
  if (!p.contains(start)) return make_error(Errc::ForeignElement, {start});
  ElemSet chain{start};
  Elem last = start;
  for (;;) {
    bool grew = false;
    for (Elem y : p.universe()) {
      if (y == last || !p.leq(last, y)) continue;
      if (std::find(chain.begin(), chain.end(), y) != chain.end()) continue;
      chain.push_back(y);
      last = y;
      grew = true;
      break;  // universe() is ascending, so this is the least candidate
    }
    if (!grew) break;
  }
  return make_solution(std::move(chain), SolutionKind::Chain);
}

Result<SolutionSet> greedy_antichain(const FinitePoset& p,
                                     bool include_reflexive_start) {
  if (!is_omega_ordered(p)) return make_error(Errc::NotOmegaOrdered);
  ElemSet sfree = successor_free_set(p);

  ElemSet out;
  std::optional<Elem> cur;
  for (Elem y : sfree)
    if (p.leq(0, y) && (include_reflexive_start || y != 0)) {
      cur = y;
      break;
    }
  while (cur) {
    out.push_back(*cur);
    Elem from = *cur + 1;
    cur.reset();
    for (Elem y : sfree)
      if (p.leq(from, y)) {
        cur = y;
        break;
      }
  }
  return make_solution(std::move(out), SolutionKind::Antichain);
}

Result<ProblemInstance> to_small_type(const ProblemInstance& inst) {
  if (!inst.annotation) return make_error(Errc::NotStable, {}, "annotation missing");
  if (inst.annotation->type_tag() == StableType::SmallType) return inst;
  ProblemInstance out;
  out.poset = dual_order(inst.poset);
  out.annotation = inst.annotation->flipped();
  out.type_flag = inst.type_flag ? std::optional(StableType::SmallType)
                                 : std::nullopt;
  return out;
}

Result<ProblemInstance> append_type_flag(const ProblemInstance& inst) {
  if (!inst.annotation) return make_error(Errc::NotStable, {}, "annotation missing");
  ProblemInstance out = inst;
  out.type_flag = inst.annotation->type_tag();
  return out;
}

}  // namespace caclab
