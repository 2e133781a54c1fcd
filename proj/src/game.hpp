#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"
#include "oracle.hpp"
#include "poset.hpp"
#include "problems.hpp"

namespace caclab {

/// Cantor pairing (i + k)(i + k + 1)/2 + k, a bijection N^2 -> N.
std::uint64_t cantor_pair(std::uint64_t i, std::uint64_t k);
std::pair<std::uint64_t, std::uint64_t> cantor_unpair(std::uint64_t z);

/// A (+) B = {2a} u {2b + 1}.
ElemSet two_join(std::span<const Elem> a, std::span<const Elem> b);
ElemSet two_join_left(std::span<const Elem> s);   // {a : 2a in s}
ElemSet two_join_right(std::span<const Elem> s);  // {b : 2b+1 in s}

/// n-fold join of X_0..X_n: {2n} u {2*pair(i,k)+1 : i <= n, k in X_i}.
Result<ElemSet> n_fold_join(std::span<const ElemSet> sets);

/// Wire form of a poset inside a game: the pair codes of its relation.
/// Reflexive pairs carry the universe, so the coding is self-contained.
ElemSet encode_poset(const FinitePoset& p);
Result<FinitePoset> decode_poset(std::span<const Elem> codes);

struct GameRound {
  enum class Player : std::uint8_t { One, Two } player;
  bool claims_victory = false;  // II only: V = {1}
  ElemSet payload;              // encoded instance, or a raw solution set
};

struct GameVerdict {
  enum class Kind : std::uint8_t { TwoWins, OneWins, Exhausted } kind;
  std::uint32_t round = 0;  // II's winning move index, 1-based
  std::string reason;
};

struct GameTranscript {
  std::vector<GameRound> rounds;
  GameVerdict verdict;
};

/// Player I: opens with a P-instance and must answer every Q-instance that
/// Player II plays.
class PlayerOneStrategy {
 public:
  virtual ~PlayerOneStrategy() = default;
  virtual FinitePoset opening() = 0;
  virtual Result<SolutionSet> answer(const FinitePoset& q_instance) = 0;
};

/// Brute-force adversary: opens with a fixed instance and answers with the
/// deterministic solver.
class BruteForceAdversary : public PlayerOneStrategy {
 public:
  BruteForceAdversary(FinitePoset opening, SizePolicy policy)
      : opening_(std::move(opening)), policy_(policy) {}
  FinitePoset opening() override { return opening_; }
  Result<SolutionSet> answer(const FinitePoset& q) override {
    return brute_force_solve(ProblemKind::OmegaCac,
                             ProblemInstance{q, std::nullopt, std::nullopt},
                             policy_);
  }

 private:
  FinitePoset opening_;
  SizePolicy policy_;
};

struct PlayerTwoMove {
  bool claims_victory;  // V = {1}
  ElemSet payload;      // claimed solution, or encoded Q-instance
};

/// Player II: a deterministic function of Player I's moves so far, handed
/// over in the encoded form that the n-fold join would carry.
class PlayerTwoStrategy {
 public:
  virtual ~PlayerTwoStrategy() = default;
  virtual Result<PlayerTwoMove> next(std::span<const ElemSet> opponent_moves) = 0;
};

/// The two-stage strategy: play the omega-ordered part, keep a chain if one
/// comes back, otherwise play the reversed part restricted to the antichain
/// and claim whatever answers.
class CacViaOmegaStrategy : public PlayerTwoStrategy {
 public:
  explicit CacViaOmegaStrategy(SizePolicy policy) : policy_(policy) {}
  Result<PlayerTwoMove> next(std::span<const ElemSet> opponent_moves) override;

 private:
  SizePolicy policy_;
};

/// Strategy backed by an oracle machine: the machine reads the n-fold join
/// of Player I's moves and its defined set decodes as V (+) Y.
class MachineStrategy : public PlayerTwoStrategy {
 public:
  MachineStrategy(OracleMachine m, Elem w_cap)
      : machine_(std::move(m)), w_cap_(w_cap) {}
  Result<PlayerTwoMove> next(std::span<const ElemSet> opponent_moves) override;

 private:
  OracleMachine machine_;
  Elem w_cap_;
};

/// Simulates G(Q -> P) for max_rounds of Player II moves. II wins at round k
/// when it claims victory with a verified solution to the opening instance;
/// Player I wins on an invalid or malformed II move; an undecided game is
/// exhausted.
GameTranscript play_reduction_game(ProblemKind p_kind, ProblemKind q_kind,
                                   PlayerOneStrategy& adversary,
                                   PlayerTwoStrategy& strategy,
                                   std::uint32_t max_rounds,
                                   const SizePolicy& policy);

enum class ReductionVariant : std::uint8_t {
  Weihrauch,        // backward sees X_P (+) Y_Q
  StrongWeihrauch,  // backward sees Y_Q alone
  Computable,       // instance chosen relative to X_P; backward sees the join
  StrongComputable, // instance chosen relative to X_P; backward sees Y_Q
};

const char* reduction_variant_name(ReductionVariant v);

struct WitnessFailure {
  std::size_t instance_index;
  std::optional<ElemSet> q_solution;  // empty for forward-side failures
  Error error;
};

struct WitnessReport {
  ReductionVariant variant;
  std::size_t instances_checked = 0;
  std::size_t solutions_checked = 0;
  std::vector<WitnessFailure> failures;
  bool ok() const { return failures.empty(); }
};

/// Replays a claimed reduction witness over a finite corpus: the forward
/// machine must define a valid Q-instance from each encoded P-instance, and
/// the backward machine must turn every Q-solution into a P-solution.
WitnessReport check_sw_reduction_witness(ProblemKind p_kind, ProblemKind q_kind,
                                         const OracleMachine& forward,
                                         const OracleMachine& backward,
                                         std::span<const ProblemInstance> corpus,
                                         const SizePolicy& policy,
                                         ReductionVariant variant);

}  // namespace caclab
