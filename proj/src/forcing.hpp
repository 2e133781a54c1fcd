#pragma once

#include <array>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "oracle.hpp"
#include "poset.hpp"
#include "stability.hpp"

namespace caclab {

enum class Side : std::uint8_t { Small, Large };

/// Whether the isolated-tag bullet quantifies over the reflexive pair.
/// Excluding y = x is the reading that admits isolated tags at all;
/// IncludeSelf is the literal text and is kept selectable.
enum class IsolatedReading : std::uint8_t { ExcludeSelf, IncludeSelf };

/// A forcing condition: a finite partial order on an initial segment of the
/// naturals plus an assignment locking every element to a limit behavior
/// with a stabilization point capped at the order's size.
class Condition {
 public:
  using Assign = std::vector<std::pair<Behavior, std::uint64_t>>;

  /// Checks the initial-segment shape, assignment completeness and range,
  /// homogeneity ({S,I} or {L,I} throughout), and the four behavior bullets.
  /// The first violated bullet is reported with its least (x, y) witness.
  static Result<Condition> validate(
      FinitePoset order, Assign assign,
      IsolatedReading reading = IsolatedReading::ExcludeSelf);

  /// The empty condition.
  static Condition empty();

  std::uint64_t size() const { return order_.size(); }
  const FinitePoset& order() const { return order_; }
  const Assign& assign() const { return assign_; }

  bool has_tag(Behavior b) const;
  bool compatible_with(Side s) const;

  /// The assignment as a stable annotation of the order part; all-isolated
  /// conditions take the type from the side hint.
  StableAnnotation annotation(Side side_hint) const;

  bool operator==(const Condition& o) const {
    return order_ == o.order_ && assign_ == o.assign_;
  }

 private:
  FinitePoset order_;
  Assign assign_;
};

/// q extends p: the order parts agree on p's segment and q's assignment
/// restricted to it equals p's.
bool extends(const Condition& q, const Condition& p);

/// Same order part; the assignments may differ.
bool is_parallel(const Condition& p, const Condition& q);

/// The side-switch transform on an {S,I}-condition: every (S,t) becomes
/// (I,|pi|) and every (I,t) becomes (L,|pi|). The result is parallel to the
/// input and re-validated.
Result<Condition> mind_change(const Condition& p);

/// All valid conditions of exactly target_size extending p, with new tags
/// drawn from the given side, in ascending (relation pairs, assignment)
/// order. Finite by construction; meant for small growth.
std::vector<Condition> enumerate_extensions(const Condition& p,
                                            std::uint64_t target_size,
                                            Side side);

struct DiagonalLogEntry {
  std::uint32_t stage;
  std::size_t machine_index;
  std::uint32_t visit;  // m, the per-requirement visit counter
  bool already_satisfied;
  bool adopted;
  std::optional<std::array<Elem, 3>> witnesses;  // x, y, z
  std::uint64_t size_after;
};

struct DiagonalResult {
  FinitePoset poset;
  StableAnnotation annotation;
  std::vector<DiagonalLogEntry> log;
};

/// Round-robin diagonalization: stage k serves machine e = k mod n with
/// visit counter m = floor(k / n) + 1, and hunts witnesses x, y, z with
/// machine output 1, x incomparable to y and y strictly below z, growing
/// the condition by at most m fresh elements per visit. Machines are read
/// as plain 0-1 functions (the oracle is empty). Unsatisfiable visits are
/// logged and skipped.
Result<DiagonalResult> build_diagonal_poset(const Condition& p0,
                                            std::span<const OracleMachine> machines,
                                            std::uint32_t stages, Side side);

/// Witness triple for the diagonal requirement against one machine, if any.
std::optional<std::array<Elem, 3>> find_diagonal_witnesses(
    const FinitePoset& g, const OracleMachine& machine);

struct LachlanOutcome {
  std::uint64_t psi0;  // machine id in first position
  std::uint64_t psi1;  // machine id in second position
  bool holds_on_c;     // P(Psi0^C)
  bool holds_on_a;     // P(Psi1^A)
};

struct LachlanDecision {
  enum class Choice : std::uint8_t { UseC, UseA, Counterexample } choice;
  // For Counterexample: the (psi0, psi1) pair with both properties failing,
  // possibly implied by two separate rows rather than listed itself.
  std::optional<std::pair<std::uint64_t, std::uint64_t>> pair;
};

/// Decision helper for the disjunction: if every row has a true coordinate,
/// some single side works for all machines; a row (or implied pair) with
/// both coordinates false is returned as the counterexample.
LachlanDecision lachlan_select(std::span<const LachlanOutcome> outcomes);

}  // namespace caclab
