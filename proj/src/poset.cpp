#include "poset.hpp"

#include <algorithm>

namespace caclab {

int FinitePoset::index_of(Elem x) const {
  auto it = std::lower_bound(universe_.begin(), universe_.end(), x);
  if (it == universe_.end() || *it != x) return -1;
  return static_cast<int>(it - universe_.begin());
}

bool FinitePoset::leq(Elem x, Elem y) const {
  int i = index_of(x), j = index_of(y);
  if (i < 0 || j < 0) return false;
  return leq_at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
}

std::vector<std::pair<Elem, Elem>> FinitePoset::pairs() const {
  std::vector<std::pair<Elem, Elem>> out;
  const std::size_t n = universe_.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (leq_at(i, j)) out.emplace_back(universe_[i], universe_[j]);
  return out;  // row-major scan over ascending universe = ascending lex
}

Result<FinitePoset> FinitePoset::validate(
    ElemSet universe, std::vector<std::pair<Elem, Elem>> pairs) {
  for (std::size_t i = 1; i < universe.size(); ++i)
    if (universe[i - 1] >= universe[i])
      return make_error(Errc::ForeignElement, {universe[i]},
                        "universe is not strictly ascending");

  FinitePoset p;
  p.universe_ = std::move(universe);
  const std::size_t n = p.universe_.size();
  p.matrix_.assign(n * n, 0);

  // Foreign elements first, then the axioms, each with the least witness.
  std::sort(pairs.begin(), pairs.end());
  for (const auto& [x, y] : pairs) {
    int i = p.index_of(x), j = p.index_of(y);
    if (i < 0) return make_error(Errc::ForeignElement, {x});
    if (j < 0) return make_error(Errc::ForeignElement, {y});
    p.matrix_[static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)] = 1;
  }

  for (std::size_t i = 0; i < n; ++i)
    if (!p.leq_at(i, i))
      return make_error(Errc::ReflexivityViolation, {p.universe_[i]});

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && p.leq_at(i, j) && p.leq_at(j, i))
        return make_error(Errc::AntisymmetryViolation,
                          {p.universe_[std::min(i, j)], p.universe_[std::max(i, j)]});

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!p.leq_at(i, j)) continue;
      for (std::size_t k = 0; k < n; ++k)
        if (p.leq_at(j, k) && !p.leq_at(i, k))
          return make_error(Errc::TransitivityViolation,
                            {p.universe_[i], p.universe_[j], p.universe_[k]});
    }

  return p;
}

Result<FinitePoset> FinitePoset::from_cover(
    ElemSet universe, std::vector<std::pair<Elem, Elem>> strict_pairs) {
  std::sort(universe.begin(), universe.end());
  universe.erase(std::unique(universe.begin(), universe.end()), universe.end());

  FinitePoset p;
  p.universe_ = std::move(universe);
  const std::size_t n = p.universe_.size();
  p.matrix_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) p.matrix_[i * n + i] = 1;
  for (const auto& [x, y] : strict_pairs) {
    int i = p.index_of(x), j = p.index_of(y);
    if (i < 0) return make_error(Errc::ForeignElement, {x});
    if (j < 0) return make_error(Errc::ForeignElement, {y});
    p.matrix_[static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)] = 1;
  }

  // Warshall closure.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (!p.leq_at(i, k)) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (p.leq_at(k, j)) p.matrix_[i * n + j] = 1;
    }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (p.leq_at(i, j) && p.leq_at(j, i))
        return make_error(Errc::AntisymmetryViolation,
                          {p.universe_[i], p.universe_[j]},
                          "closure produced a 2-cycle");
  return p;
}

namespace {

Verdict check_subset(const FinitePoset& p, std::span<const Elem> xs) {
  for (Elem x : xs)
    if (!p.contains(x)) return Verdict::reject(Errc::ForeignElement, {x});
  return Verdict::accept();
}

}  // namespace

Result<bool> is_chain(const FinitePoset& p, std::span<const Elem> xs) {
  if (auto v = check_subset(p, xs); !v) return v.error();
  for (std::size_t a = 0; a < xs.size(); ++a)
    for (std::size_t b = a + 1; b < xs.size(); ++b)
      if (!p.comparable(xs[a], xs[b])) return false;
  return true;
}

Result<bool> is_antichain(const FinitePoset& p, std::span<const Elem> xs) {
  if (auto v = check_subset(p, xs); !v) return v.error();
  for (std::size_t a = 0; a < xs.size(); ++a)
    for (std::size_t b = a + 1; b < xs.size(); ++b)
      if (p.comparable(xs[a], xs[b])) return false;
  return true;
}

bool is_omega_ordered(const FinitePoset& p) {
  const auto& u = p.universe();
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < u.size(); ++j)
      if (p.leq_at(i, j) && u[i] > u[j]) return false;
  return true;
}

FinitePoset dual_order(const FinitePoset& p) {
  std::vector<std::pair<Elem, Elem>> flipped;
  for (const auto& [x, y] : p.pairs()) flipped.emplace_back(y, x);
  auto r = FinitePoset::validate(p.universe(), std::move(flipped));
  return std::move(r).value();  // axioms are self-dual
}

Result<FinitePoset> restrict_to(const FinitePoset& p, std::span<const Elem> xs) {
  if (auto v = check_subset(p, xs); !v) return v.error();
  ElemSet u(xs.begin(), xs.end());
  std::sort(u.begin(), u.end());
  u.erase(std::unique(u.begin(), u.end()), u.end());
  std::vector<std::pair<Elem, Elem>> kept;
  for (Elem a : u)
    for (Elem b : u)
      if (p.leq(a, b)) kept.emplace_back(a, b);
  return FinitePoset::validate(std::move(u), std::move(kept));
}

}  // namespace caclab
