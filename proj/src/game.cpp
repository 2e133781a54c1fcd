#include "game.hpp"

#include <algorithm>
#include <cmath>

#include "reductions.hpp"

namespace caclab {

std::uint64_t cantor_pair(std::uint64_t i, std::uint64_t k) {
  std::uint64_t s = i + k;
  return s * (s + 1) / 2 + k;
}

std::pair<std::uint64_t, std::uint64_t> cantor_unpair(std::uint64_t z) {
  std::uint64_t s = static_cast<std::uint64_t>(
      (std::sqrt(8.0L * static_cast<long double>(z) + 1.0L) - 1.0L) / 2.0L);
  while (s * (s + 1) / 2 > z) --s;
  while ((s + 1) * (s + 2) / 2 <= z) ++s;
  std::uint64_t k = z - s * (s + 1) / 2;
  return {s - k, k};
}

namespace {

ElemSet sorted_unique(ElemSet v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

ElemSet two_join(std::span<const Elem> a, std::span<const Elem> b) {
  ElemSet out;
  for (Elem x : a) out.push_back(2 * x);
  for (Elem x : b) out.push_back(2 * x + 1);
  return sorted_unique(std::move(out));
}

ElemSet two_join_left(std::span<const Elem> s) {
  ElemSet out;
  for (Elem x : s)
    if (x % 2 == 0) out.push_back(x / 2);
  return out;
}

ElemSet two_join_right(std::span<const Elem> s) {
  ElemSet out;
  for (Elem x : s)
    if (x % 2 == 1) out.push_back(x / 2);
  return out;
}

Result<ElemSet> n_fold_join(std::span<const ElemSet> sets) {
  if (sets.empty()) return make_error(Errc::EmptySequence);
  const std::uint64_t n = sets.size() - 1;
  ElemSet out{2 * n};
  for (std::uint64_t i = 0; i <= n; ++i)
    for (Elem k : sets[i]) out.push_back(2 * cantor_pair(i, k) + 1);
  return sorted_unique(std::move(out));
}

ElemSet encode_poset(const FinitePoset& p) {
  ElemSet out;
  for (const auto& [x, y] : p.pairs()) out.push_back(cantor_pair(x, y));
  return sorted_unique(std::move(out));
}

Result<FinitePoset> decode_poset(std::span<const Elem> codes) {
  std::vector<std::pair<Elem, Elem>> pairs;
  ElemSet universe;
  for (Elem c : codes) {
    auto [x, y] = cantor_unpair(c);
    pairs.emplace_back(x, y);
    universe.push_back(x);
    universe.push_back(y);
  }
  return FinitePoset::validate(sorted_unique(std::move(universe)),
                               std::move(pairs));
}

Result<PlayerTwoMove> CacViaOmegaStrategy::next(
    std::span<const ElemSet> opponent_moves) {
  if (opponent_moves.empty())
    return make_error(Errc::MalformedMove, {0}, "no opening instance");
  auto p = decode_poset(opponent_moves[0]);
  if (!p.ok())
    return make_error(Errc::MalformedMove, {0}, "opening is not a poset");

  if (opponent_moves.size() == 1)
    return PlayerTwoMove{false, encode_poset(split_plus(p.value()))};

  if (opponent_moves.size() == 2) {
    const ElemSet& x = opponent_moves[1];
    FinitePoset plus = split_plus(p.value());
    auto chain = is_chain(plus, x);
    if (!chain.ok()) return chain.error();
    if (chain.value()) return PlayerTwoMove{true, x};
    // Case analysis: a plus-antichain that is already an antichain of the
    // opening order is a solution outright (the omega-ordered case); only
    // sets hiding reversed comparabilities need the second stage.
    auto anti = is_antichain(p.value(), x);
    if (!anti.ok()) return anti.error();
    if (anti.value()) return PlayerTwoMove{true, x};
    auto q = restrict_to(split_minus(p.value()), x);
    if (!q.ok()) return q.error();
    return PlayerTwoMove{false, encode_poset(q.value())};
  }

  // Whatever solved the stage-2 instance is a solution to the opening.
  return PlayerTwoMove{true, opponent_moves.back()};
}

Result<PlayerTwoMove> MachineStrategy::next(
    std::span<const ElemSet> opponent_moves) {
  auto join = n_fold_join(opponent_moves);
  if (!join.ok()) return join.error();
  ElemSet out = defined_set(machine_, join.value(), w_cap_);
  ElemSet v = two_join_left(out);
  if (v.empty()) return PlayerTwoMove{false, two_join_right(out)};
  if (v == ElemSet{1}) return PlayerTwoMove{true, two_join_right(out)};
  return make_error(Errc::MalformedMove, v, "V component is neither {} nor {1}");
}

namespace {

Verdict verify_as_any_solution(const ProblemInstance& inst, const ElemSet& xs,
                               const SizePolicy& policy) {
  auto as_chain = verify_solution(ProblemKind::Cac, inst,
                                  SolutionSet{xs, SolutionKind::Chain}, policy);
  if (as_chain.ok()) return as_chain;
  auto as_anti = verify_solution(
      ProblemKind::Cac, inst, SolutionSet{xs, SolutionKind::Antichain}, policy);
  if (as_anti.ok()) return as_anti;
  if (as_chain.error().code == Errc::NotAChain &&
      as_anti.error().code == Errc::NotAnAntichain)
    return Verdict::reject(Errc::NotASolution, {},
                           "neither a chain nor an antichain");
  return as_anti;
}

}  // namespace

GameTranscript play_reduction_game(ProblemKind p_kind, ProblemKind q_kind,
                                   PlayerOneStrategy& adversary,
                                   PlayerTwoStrategy& strategy,
                                   std::uint32_t max_rounds,
                                   const SizePolicy& policy) {
  GameTranscript t;
  FinitePoset opening = adversary.opening();
  ProblemInstance opening_inst{opening, std::nullopt, std::nullopt};
  std::vector<ElemSet> p1_moves{encode_poset(opening)};
  t.rounds.push_back({GameRound::Player::One, false, p1_moves[0]});

  for (std::uint32_t round = 1; round <= max_rounds; ++round) {
    auto move = strategy.next(p1_moves);
    if (!move.ok()) {
      t.verdict = {GameVerdict::Kind::OneWins, round,
                   std::string("Player II emitted no usable move: ") +
                       errc_name(move.error().code)};
      return t;
    }
    t.rounds.push_back({GameRound::Player::Two, move.value().claims_victory,
                        move.value().payload});

    if (move.value().claims_victory) {
      auto v = verify_as_any_solution(opening_inst, move.value().payload, policy);
      if (v.ok()) {
        t.verdict = {GameVerdict::Kind::TwoWins, round, "claimed solution verified"};
      } else {
        t.verdict = {GameVerdict::Kind::OneWins, round,
                     std::string("claimed solution rejected: ") +
                         errc_name(v.error().code)};
      }
      return t;
    }

    auto q = decode_poset(move.value().payload);
    if (!q.ok()) {
      t.verdict = {GameVerdict::Kind::OneWins, round,
                   "Player II move does not decode to a poset"};
      return t;
    }
    ProblemInstance q_inst{q.value(), std::nullopt, std::nullopt};
    if (kind_requires_omega(q_kind) && !is_omega_ordered(q.value())) {
      t.verdict = {GameVerdict::Kind::OneWins, round,
                   "Player II instance is not omega-ordered"};
      return t;
    }

    auto answer = adversary.answer(q.value());
    if (!answer.ok()) {
      t.verdict = {GameVerdict::Kind::Exhausted, round,
                   std::string("adversary cannot answer at finite scale: ") +
                       errc_name(answer.error().code)};
      return t;
    }
    p1_moves.push_back(answer.value().elements);
    t.rounds.push_back({GameRound::Player::One, false, answer.value().elements});
  }

  t.verdict = {GameVerdict::Kind::Exhausted, max_rounds, "round budget spent"};
  (void)p_kind;
  return t;
}

const char* reduction_variant_name(ReductionVariant v) {
  switch (v) {
    case ReductionVariant::Weihrauch: return "weihrauch";
    case ReductionVariant::StrongWeihrauch: return "strong-weihrauch";
    case ReductionVariant::Computable: return "computable";
    case ReductionVariant::StrongComputable: return "strong-computable";
  }
  return "?";
}

WitnessReport check_sw_reduction_witness(ProblemKind p_kind, ProblemKind q_kind,
                                         const OracleMachine& forward,
                                         const OracleMachine& backward,
                                         std::span<const ProblemInstance> corpus,
                                         const SizePolicy& policy,
                                         ReductionVariant variant) {
  (void)p_kind;
  WitnessReport report;
  report.variant = variant;
  for (std::size_t idx = 0; idx < corpus.size(); ++idx) {
    const ProblemInstance& inst = corpus[idx];
    ++report.instances_checked;
    ElemSet enc = encode_poset(inst.poset);

    std::optional<Elem> diverged;
    ElemSet fwd = defined_set(forward, enc, forward.use_bound(), &diverged);
    if (diverged) {
      report.failures.push_back(
          {idx, std::nullopt, make_error(Errc::MachineDiverged, {*diverged})});
      continue;
    }
    auto q = decode_poset(fwd);
    if (!q.ok()) {
      report.failures.push_back({idx, std::nullopt, q.error()});
      continue;
    }
    ProblemInstance q_inst{q.value(), std::nullopt, std::nullopt};
    if (kind_requires_omega(q_kind) && !is_omega_ordered(q.value())) {
      report.failures.push_back(
          {idx, std::nullopt, make_error(Errc::NotOmegaOrdered)});
      continue;
    }

    for_each_solution(q_inst, policy, [&](const SolutionSet& sol) {
      ++report.solutions_checked;
      ElemSet oracle;
      if (variant == ReductionVariant::Weihrauch ||
          variant == ReductionVariant::Computable)
        oracle = two_join(enc, sol.elements);
      else
        oracle = sol.elements;
      // A partial backward machine simply defines a smaller set; only the
      // forward side must be total on the corpus.
      ElemSet claimed = defined_set(backward, oracle, backward.use_bound());
      auto v = verify_as_any_solution(inst, claimed, policy);
      if (!v.ok())
        report.failures.push_back({idx, sol.elements, v.error()});
    });
  }
  return report;
}

}  // namespace caclab
