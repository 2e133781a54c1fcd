#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace caclab {

using Elem = std::uint64_t;
using ElemSet = std::vector<Elem>;  // always kept sorted ascending, no duplicates

enum class Errc {
  // poset axioms
  ReflexivityViolation,
  AntisymmetryViolation,
  TransitivityViolation,
  ForeignElement,
  // stability and instance side conditions
  AnnotationIncomplete,
  BehaviorViolation,
  TypeMismatch,
  NotOmegaOrdered,
  NotStable,
  // solution verification
  TooSmall,
  NotAChain,
  NotAnAntichain,
  NoSolution,
  TooLarge,
  SolverFailed,
  NotASolution,
  // joins and games
  EmptySequence,
  MalformedMove,
  MachineDiverged,
  // oracle machines
  UnknownSpec,
  UseConsistencyViolation,
  // forcing conditions, one code per bullet
  HomogeneityViolation,
  SmallBulletViolation,
  LargeBulletViolation,
  SideBulletViolation,
  IsolatedBulletViolation,
  IncompleteAssignment,
  StabilizationOutOfRange,
  WrongSide,
  // generation and IO
  UnsatisfiableSpec,
  ParseError,
};

const char* errc_name(Errc c);

struct Error {
  Errc code;
  std::vector<std::uint64_t> witness;
  std::string detail;
};

Error make_error(Errc code, std::vector<std::uint64_t> witness = {},
                 std::string detail = {});

/// Value-or-error result. Errors carry a code plus the witnessing elements.
template <typename T>
class Result {
 public:
  Result(T value) : v_(std::move(value)) {}
  Result(Error err) : v_(std::move(err)) {}

  bool ok() const { return std::holds_alternative<T>(v_); }
  explicit operator bool() const { return ok(); }

  const T& value() const& { return std::get<T>(v_); }
  T& value() & { return std::get<T>(v_); }
  T&& value() && { return std::get<T>(std::move(v_)); }
  const Error& error() const { return std::get<Error>(v_); }

 private:
  std::variant<T, Error> v_;
};

/// Accept/reject outcome of a validation or verification predicate.
class Verdict {
 public:
  static Verdict accept() { return Verdict{}; }
  static Verdict reject(Error e) {
    Verdict v;
    v.err_ = std::move(e);
    return v;
  }
  static Verdict reject(Errc code, std::vector<std::uint64_t> witness = {},
                        std::string detail = {}) {
    return reject(make_error(code, std::move(witness), std::move(detail)));
  }

  bool ok() const { return !err_.has_value(); }
  explicit operator bool() const { return ok(); }
  const Error& error() const { return *err_; }

 private:
  std::optional<Error> err_;
};

}  // namespace caclab
