#pragma once

#include <random>
#include <vector>

#include "generate.hpp"
#include "poset.hpp"
#include "problems.hpp"
#include "stability.hpp"

namespace testutil {

using namespace caclab;

inline FinitePoset poset_of(ElemSet universe,
                            std::vector<std::pair<Elem, Elem>> strict) {
  auto r = FinitePoset::from_cover(std::move(universe), std::move(strict));
  REQUIRE(r.ok());
  return std::move(r).value();
}

inline FinitePoset natural_chain(Elem n) {
  ElemSet u;
  std::vector<std::pair<Elem, Elem>> s;
  for (Elem i = 0; i < n; ++i) {
    u.push_back(i);
    if (i + 1 < n) s.emplace_back(i, i + 1);
  }
  return poset_of(std::move(u), std::move(s));
}

inline FinitePoset discrete_poset(Elem n) {
  ElemSet u;
  for (Elem i = 0; i < n; ++i) u.push_back(i);
  return poset_of(std::move(u), {});
}

inline FinitePoset reversed_chain(Elem n) {
  ElemSet u;
  std::vector<std::pair<Elem, Elem>> s;
  for (Elem i = 0; i < n; ++i) {
    u.push_back(i);
    if (i + 1 < n) s.emplace_back(i + 1, i);
  }
  return poset_of(std::move(u), std::move(s));
}

inline StableAnnotation all_tagged(const FinitePoset& p, Behavior tag,
                                   std::uint64_t point, StableType type) {
  std::vector<BehaviorEntry> entries;
  for (Elem x : p.universe()) entries.push_back({x, tag, point});
  auto r = StableAnnotation::make(std::move(entries), type);
  REQUIRE(r.ok());
  return std::move(r).value();
}

// Independent chain oracle: direct pair enumeration over the relation list.
inline bool chain_by_enumeration(const FinitePoset& p, const ElemSet& xs) {
  auto pairs = p.pairs();
  auto related = [&](Elem a, Elem b) {
    for (const auto& [x, y] : pairs)
      if ((x == a && y == b) || (x == b && y == a)) return true;
    return false;
  };
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (!related(xs[i], xs[j])) return false;
  return true;
}

inline bool antichain_by_enumeration(const FinitePoset& p, const ElemSet& xs) {
  auto pairs = p.pairs();
  auto related = [&](Elem a, Elem b) {
    for (const auto& [x, y] : pairs)
      if ((x == a && y == b) || (x == b && y == a)) return true;
    return false;
  };
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (related(xs[i], xs[j])) return false;
  return true;
}

// Exhaustive maximum chain/antichain sizes by subset enumeration; the
// independent oracle behind the solver tests.
inline std::pair<std::size_t, std::size_t> extremes_by_enumeration(
    const FinitePoset& p) {
  const auto& u = p.universe();
  std::size_t best_chain = 0, best_anti = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << u.size()); ++mask) {
    ElemSet xs;
    for (std::size_t i = 0; i < u.size(); ++i)
      if (mask & (std::uint64_t{1} << i)) xs.push_back(u[i]);
    if (chain_by_enumeration(p, xs)) best_chain = std::max(best_chain, xs.size());
    if (antichain_by_enumeration(p, xs)) best_anti = std::max(best_anti, xs.size());
  }
  return {best_chain, best_anti};
}

}  // namespace testutil
