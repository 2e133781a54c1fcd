#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "errors.hpp"

namespace caclab {

enum class EvalOutcome : std::uint8_t { Zero, One, Diverge };

/// Step-free, use-bounded stand-in for a 0-1 Turing functional. The output
/// on input w may depend only on the oracle's members below use_bound; a
/// missing answer is divergence.
class OracleMachine {
 public:
  static constexpr std::uint32_t kDefaultUseBound = 64;

  /// Output 1 on every input below the use bound, for any oracle.
  static OracleMachine constant_one(std::uint32_t use_bound = kDefaultUseBound);
  /// Output 1 iff w is an oracle member (the identity functional on sets).
  static OracleMachine membership(std::uint32_t use_bound = kDefaultUseBound);
  /// Output 1 iff the oracle has an odd number of members below the bound.
  static OracleMachine parity(std::uint32_t use_bound = kDefaultUseBound);
  /// Output 1 iff the oracle has at least k members below the bound.
  static OracleMachine threshold(std::uint32_t k,
                                 std::uint32_t use_bound = kDefaultUseBound);
  /// Oracle-blind characteristic function of a fixed finite set.
  static OracleMachine char_of(ElemSet members,
                               std::uint32_t use_bound = kDefaultUseBound);

  /// A finite lookup table keyed by (input, oracle restricted below the use
  /// bound). Entries naming members at or beyond the bound, or conflicting
  /// outputs for one key, are UseConsistencyViolations.
  struct TableEntry {
    Elem input;
    ElemSet oracle;  // sorted ascending
    int output;      // 0 or 1
  };
  static Result<OracleMachine> from_table(std::uint32_t use_bound,
                                          std::vector<TableEntry> entries);

  std::uint32_t use_bound() const { return use_bound_; }
  bool is_builtin() const;
  std::string spec_string() const;
  /// Table rows in key order; empty for builtins.
  std::vector<TableEntry> table_entries() const;

  bool operator==(const OracleMachine& o) const;

 private:
  friend EvalOutcome evaluate(const OracleMachine&, std::span<const Elem>, Elem);

  enum class Builtin : std::uint8_t { ConstantOne, Membership, Parity, Threshold, CharOf };
  struct BuiltinImpl {
    Builtin kind;
    std::uint32_t k = 0;
    ElemSet members;
  };
  using Table = std::map<std::pair<Elem, ElemSet>, int>;

  OracleMachine(std::uint32_t use_bound, BuiltinImpl b)
      : use_bound_(use_bound), impl_(std::move(b)) {}
  OracleMachine(std::uint32_t use_bound, Table t)
      : use_bound_(use_bound), impl_(std::move(t)) {}

  std::uint32_t use_bound_;
  std::variant<BuiltinImpl, Table> impl_;
};

/// Looks up (w, oracle restricted below the use bound); Diverge when absent.
EvalOutcome evaluate(const OracleMachine& m, std::span<const Elem> oracle,
                     Elem w);

/// {w < w_cap : evaluate(m, oracle, w) = 1}; records the first divergence
/// below w_cap if a slot is provided.
ElemSet defined_set(const OracleMachine& m, std::span<const Elem> oracle,
                    Elem w_cap, std::optional<Elem>* first_divergence = nullptr);

/// Parses one machine spec: "constant-1", "membership",
/// "parity-of-element-count", "threshold-k", or "membership-of-{a,b,c}".
Result<OracleMachine> machine_from_spec(const std::string& spec,
                                        std::uint32_t use_bound);

/// Deterministic machine list to use as a functional enumeration.
Result<std::vector<OracleMachine>> machine_family(
    std::span<const std::string> specs,
    std::uint32_t use_bound = OracleMachine::kDefaultUseBound);

/// Samples a functional on the given oracles for w < w_cap and freezes the
/// answers into a table machine (the desk-scale image of a Turing
/// functional restricted to a corpus). fn returns 0/1 or nullopt to diverge.
OracleMachine tabulate_functional(
    const std::function<std::optional<int>(const ElemSet&, Elem)>& fn,
    std::span<const ElemSet> oracles, Elem w_cap,
    std::uint32_t use_bound = OracleMachine::kDefaultUseBound);

}  // namespace caclab
