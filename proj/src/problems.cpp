#include "problems.hpp"

#include <algorithm>
#include <bit>

namespace caclab {

const char* problem_kind_name(ProblemKind k) {
  switch (k) {
    case ProblemKind::Cac: return "CAC";
    case ProblemKind::Scac: return "SCAC";
    case ProblemKind::OmegaCac: return "OMEGA_CAC";
    case ProblemKind::OmegaScac: return "OMEGA_SCAC";
    case ProblemKind::ScacSmall: return "SCAC_SMALL";
    case ProblemKind::ScacLarge: return "SCAC_LARGE";
    case ProblemKind::ScacType: return "SCAC_TYPE";
  }
  return "?";
}

std::optional<ProblemKind> problem_kind_from_name(const std::string& s) {
  if (s == "CAC") return ProblemKind::Cac;
  if (s == "SCAC") return ProblemKind::Scac;
  if (s == "OMEGA_CAC") return ProblemKind::OmegaCac;
  if (s == "OMEGA_SCAC") return ProblemKind::OmegaScac;
  if (s == "SCAC_SMALL") return ProblemKind::ScacSmall;
  if (s == "SCAC_LARGE") return ProblemKind::ScacLarge;
  if (s == "SCAC_TYPE") return ProblemKind::ScacType;
  return std::nullopt;
}

bool kind_requires_stability(ProblemKind k) {
  switch (k) {
    case ProblemKind::Scac:
    case ProblemKind::OmegaScac:
    case ProblemKind::ScacSmall:
    case ProblemKind::ScacLarge:
    case ProblemKind::ScacType:
      return true;
    default:
      return false;
  }
}

bool kind_requires_omega(ProblemKind k) {
  return k == ProblemKind::OmegaCac || k == ProblemKind::OmegaScac;
}

SolutionSet make_solution(ElemSet elements, SolutionKind kind) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return SolutionSet{std::move(elements), kind};
}

Verdict validate_instance(ProblemKind kind, const ProblemInstance& inst,
                          const SizePolicy&) {
  if (kind_requires_omega(kind) && !is_omega_ordered(inst.poset))
    return Verdict::reject(Errc::NotOmegaOrdered);

  if (kind_requires_stability(kind)) {
    if (!inst.annotation)
      return Verdict::reject(Errc::NotStable, {}, "annotation missing");
    if (auto v = classify_stability(inst.poset, *inst.annotation); !v) {
      const Error& e = v.error();
      if (e.code == Errc::TypeMismatch) return Verdict::reject(e);
      return Verdict::reject(Errc::NotStable, e.witness,
                             std::string(errc_name(e.code)));
    }
  }

  if (kind == ProblemKind::ScacSmall &&
      inst.annotation->type_tag() != StableType::SmallType)
    return Verdict::reject(Errc::TypeMismatch, {}, "instance is not small-type");
  if (kind == ProblemKind::ScacLarge &&
      inst.annotation->type_tag() != StableType::LargeType)
    return Verdict::reject(Errc::TypeMismatch, {}, "instance is not large-type");

  if (kind == ProblemKind::ScacType) {
    if (!inst.type_flag)
      return Verdict::reject(Errc::TypeMismatch, {}, "type flag missing");
    if (*inst.type_flag != inst.annotation->type_tag())
      return Verdict::reject(Errc::TypeMismatch, {},
                             "type flag contradicts annotation");
  }
  return Verdict::accept();
}

Verdict verify_solution(ProblemKind, const ProblemInstance& inst,
                        const SolutionSet& sol, const SizePolicy& policy) {
  SolutionSet s = make_solution(sol.elements, sol.kind);
  for (Elem x : s.elements)
    if (!inst.poset.contains(x)) return Verdict::reject(Errc::ForeignElement, {x});
  if (s.elements.size() < policy.min_size)
    return Verdict::reject(Errc::TooSmall, {s.elements.size()});
  if (s.kind == SolutionKind::Chain) {
    auto r = is_chain(inst.poset, s.elements);
    if (!r.ok()) return Verdict::reject(r.error());
    if (!r.value()) return Verdict::reject(Errc::NotAChain);
  } else {
    auto r = is_antichain(inst.poset, s.elements);
    if (!r.ok()) return Verdict::reject(r.error());
    if (!r.value()) return Verdict::reject(Errc::NotAnAntichain);
  }
  return Verdict::accept();
}

namespace {

// Chains are cliques of the comparability graph, antichains cliques of its
// complement; both searches run over universe positions as bitmasks.
struct CliqueSearch {
  std::vector<std::uint64_t> adj;  // adjacency masks, self bit excluded
  std::size_t n;

  std::size_t best = 0;

  void dfs(std::uint64_t cand, std::size_t depth) {
    if (depth + static_cast<std::size_t>(std::popcount(cand)) <= best) return;
    if (cand == 0) {
      best = std::max(best, depth);
      return;
    }
    int v = std::countr_zero(cand);
    dfs(cand & adj[static_cast<std::size_t>(v)], depth + 1);
    dfs(cand & ~(std::uint64_t{1} << v), depth);
  }

  std::size_t max_size(std::uint64_t cand, std::size_t floor_hint = 0) {
    best = floor_hint;
    dfs(cand, 0);
    return best;
  }
};

// Lexicographically least maximum clique as a sorted position list.
std::vector<std::size_t> lex_least_max_clique(CliqueSearch& cs) {
  std::uint64_t all = cs.n == 64 ? ~std::uint64_t{0}
                                 : ((std::uint64_t{1} << cs.n) - 1);
  std::size_t target = cs.max_size(all);
  std::vector<std::size_t> chosen;
  std::uint64_t cand = all;
  while (chosen.size() < target) {
    std::uint64_t scan = cand;
    while (scan) {
      int v = std::countr_zero(scan);
      scan &= scan - 1;
      std::uint64_t rest = cand & cs.adj[static_cast<std::size_t>(v)] &
                           ~((std::uint64_t{2} << v) - 1);  // positions > v
      if (1 + chosen.size() + cs.max_size(rest) >= target) {
        chosen.push_back(static_cast<std::size_t>(v));
        cand = rest;
        break;
      }
    }
  }
  return chosen;
}

Result<ElemSet> extreme_set(const FinitePoset& p, std::uint64_t cap,
                            bool want_chain) {
  const std::size_t n = p.size();
  if (n > cap || n > 64)
    return make_error(Errc::TooLarge, {n}, "universe exceeds the solver bound");
  CliqueSearch cs;
  cs.n = n;
  cs.adj.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      bool comp = p.leq_at(i, j) || p.leq_at(j, i);
      if (comp == want_chain) cs.adj[i] |= std::uint64_t{1} << j;
    }
  ElemSet out;
  for (std::size_t pos : lex_least_max_clique(cs)) out.push_back(p.universe()[pos]);
  return out;
}

}  // namespace

Result<ElemSet> max_chain(const FinitePoset& p, std::uint64_t universe_cap) {
  return extreme_set(p, universe_cap, true);
}

Result<ElemSet> max_antichain(const FinitePoset& p, std::uint64_t universe_cap) {
  return extreme_set(p, universe_cap, false);
}

Result<std::uint64_t> max_feasible_solution(const FinitePoset& p,
                                            std::uint64_t universe_cap) {
  auto c = max_chain(p, universe_cap);
  if (!c.ok()) return c.error();
  auto a = max_antichain(p, universe_cap);
  if (!a.ok()) return a.error();
  return std::uint64_t{std::max(c.value().size(), a.value().size())};
}

Result<SolutionSet> brute_force_solve(ProblemKind, const ProblemInstance& inst,
                                      const SizePolicy& policy) {
  auto c = max_chain(inst.poset, policy.universe_cap);
  if (!c.ok()) return c.error();
  if (c.value().size() >= policy.min_size)
    return make_solution(std::move(c).value(), SolutionKind::Chain);
  auto a = max_antichain(inst.poset, policy.universe_cap);
  if (!a.ok()) return a.error();
  if (a.value().size() >= policy.min_size)
    return make_solution(std::move(a).value(), SolutionKind::Antichain);
  return make_error(Errc::NoSolution);
}

void for_each_solution(const ProblemInstance& inst, const SizePolicy& policy,
                       const std::function<void(const SolutionSet&)>& fn) {
  const auto& u = inst.poset.universe();
  const std::size_t n = u.size();
  if (n > 24) return;  // enumeration is for desk-scale universes
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (static_cast<std::uint64_t>(std::popcount(mask)) < policy.min_size)
      continue;
    ElemSet xs;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::uint64_t{1} << i)) xs.push_back(u[i]);
    if (is_chain(inst.poset, xs).value())
      fn(SolutionSet{xs, SolutionKind::Chain});
    else if (is_antichain(inst.poset, xs).value())
      fn(SolutionSet{xs, SolutionKind::Antichain});
  }
}

}  // namespace caclab
