#pragma once

#include <cstddef>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace caclab {

/// A finite partial order: a strictly ascending universe of naturals plus a
/// reflexive, antisymmetric, transitive relation stored fully closed.
/// The relation is stored exactly as validated; there is no silent repair.
class FinitePoset {
 public:
  FinitePoset() = default;

  /// Checks the three axioms and that every pair lies in the universe.
  /// The universe may be given in any order; duplicates are rejected as part
  /// of strict ascension. Reported witnesses are the least in lex order.
  static Result<FinitePoset> validate(ElemSet universe,
                                      std::vector<std::pair<Elem, Elem>> pairs);

  /// Builds the poset whose relation is the given strict pairs closed under
  /// reflexivity and transitivity. Fails (AntisymmetryViolation) if the
  /// closure would contain a 2-cycle.
  static Result<FinitePoset> from_cover(ElemSet universe,
                                        std::vector<std::pair<Elem, Elem>> strict_pairs);

  const ElemSet& universe() const { return universe_; }
  std::size_t size() const { return universe_.size(); }
  bool contains(Elem x) const { return index_of(x) >= 0; }

  /// x <=_P y; false when either element is foreign.
  bool leq(Elem x, Elem y) const;
  bool comparable(Elem x, Elem y) const { return leq(x, y) || leq(y, x); }
  bool incomparable(Elem x, Elem y) const {
    return contains(x) && contains(y) && !comparable(x, y);
  }
  /// Strict order x <_P y.
  bool lt(Elem x, Elem y) const { return leq(x, y) && x != y; }

  /// All relation pairs in ascending lexicographic order.
  std::vector<std::pair<Elem, Elem>> pairs() const;

  bool operator==(const FinitePoset& o) const {
    return universe_ == o.universe_ && matrix_ == o.matrix_;
  }

  // Position-indexed access used by the solvers; i, j index universe().
  bool leq_at(std::size_t i, std::size_t j) const {
    return matrix_[i * universe_.size() + j] != 0;
  }

 private:
  int index_of(Elem x) const;

  ElemSet universe_;
  std::vector<std::uint8_t> matrix_;  // row-major over universe positions
};

/// True iff every pair of X is <=_P-comparable. ForeignElement if X leaves
/// the universe. Empty and singleton sets are chains.
Result<bool> is_chain(const FinitePoset& p, std::span<const Elem> xs);

/// Mirror of is_chain with pairwise incomparability.
Result<bool> is_antichain(const FinitePoset& p, std::span<const Elem> xs);

/// True iff x <=_P y implies x <= y in the natural order.
bool is_omega_ordered(const FinitePoset& p);

/// The poset with every comparability reversed; an involution.
FinitePoset dual_order(const FinitePoset& p);

/// Sub-poset on X: relation intersected with X x X.
Result<FinitePoset> restrict_to(const FinitePoset& p, std::span<const Elem> xs);

}  // namespace caclab
