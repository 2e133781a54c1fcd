#include <doctest.h>

#include <random>

#include "generate.hpp"
#include "reductions.hpp"
#include "support.hpp"

using namespace caclab;
using namespace testutil;

namespace {

OmegaSolver brute_solver() {
  return [](const FinitePoset& p, const SizePolicy& policy) {
    return brute_force_solve(ProblemKind::OmegaCac,
                             ProblemInstance{p, std::nullopt, std::nullopt},
                             policy);
  };
}

}  // namespace

TEST_CASE("split_plus and split_minus by set-builder evaluation") {
  SUBCASE("an omega-ordered poset splits into itself and the discrete order") {
    FinitePoset p = natural_chain(4);
    CHECK(split_plus(p) == p);
    CHECK(split_minus(p) == discrete_poset(4));
  }

  SUBCASE("a single reversed pair lands in the minus part") {
    FinitePoset p = poset_of({0, 1, 2}, {{2, 0}});
    CHECK(split_plus(p) == discrete_poset(3));
    FinitePoset minus = split_minus(p);
    CHECK(minus.leq(0, 2));
    CHECK_FALSE(minus.leq(2, 0));
    CHECK_FALSE(minus.leq(0, 1));
  }

  SUBCASE("the reversed natural order flips entirely into minus") {
    FinitePoset p = reversed_chain(4);
    CHECK(split_plus(p) == discrete_poset(4));
    CHECK(split_minus(p) == natural_chain(4));
  }
}

TEST_CASE("splits are always valid omega-ordered posets") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 80; ++i) {
    FinitePoset p = random_poset(rng, 2 + rng() % 9);
    for (const FinitePoset& s : {split_plus(p), split_minus(p)}) {
      CHECK(is_omega_ordered(s));
      CHECK(FinitePoset::validate(s.universe(), s.pairs()).ok());
    }
  }
}

TEST_CASE("compose_cac_via_omega on the three named posets") {
  SizePolicy policy{3, 20};

  auto chain = compose_cac_via_omega(natural_chain(4), brute_solver(), policy);
  REQUIRE(chain.ok());
  CHECK(chain.value().kind == SolutionKind::Chain);
  CHECK(chain.value().elements == ElemSet{0, 1, 2, 3});

  auto reversed = compose_cac_via_omega(reversed_chain(4), brute_solver(), policy);
  REQUIRE(reversed.ok());
  CHECK(reversed.value().kind == SolutionKind::Chain);
  CHECK(reversed.value().elements == ElemSet{0, 1, 2, 3});

  auto disc = compose_cac_via_omega(discrete_poset(4), brute_solver(), policy);
  REQUIRE(disc.ok());
  CHECK(disc.value().kind == SolutionKind::Antichain);
  CHECK(disc.value().elements == ElemSet{0, 1, 2, 3});
}

TEST_CASE("compose output always verifies against the original poset") {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 120; ++i) {
    FinitePoset p = random_poset(rng, 2 + rng() % 11);
    SizePolicy policy{compose_safe_min_size(p.size()), 20};
    auto sol = compose_cac_via_omega(p, brute_solver(), policy);
    REQUIRE(sol.ok());
    ProblemInstance inst{p, std::nullopt, std::nullopt};
    CHECK(verify_solution(ProblemKind::Cac, inst, sol.value(), policy).ok());
  }
}

TEST_CASE("the instance-level feasibility bound overshoots the pipeline") {
  // The mixed-orientation chain 0 <P 2 <P 1 has a three-element solution,
  // but neither split carries one, so min_size 3 strands both stages. This
  // pins why the safe threshold is counted from the universe size.
  FinitePoset p = poset_of({0, 1, 2}, {{0, 2}, {2, 1}});
  CHECK(max_feasible_solution(p).value() == 3);
  SizePolicy three{3, 20};
  auto stranded = compose_cac_via_omega(p, brute_solver(), three);
  REQUIRE_FALSE(stranded.ok());
  CHECK(stranded.error().code == Errc::SolverFailed);

  SizePolicy safe{compose_safe_min_size(p.size()), 20};
  CHECK(safe.min_size == 2);
  auto sol = compose_cac_via_omega(p, brute_solver(), safe);
  REQUIRE(sol.ok());
  ProblemInstance inst{p, std::nullopt, std::nullopt};
  CHECK(verify_solution(ProblemKind::Cac, inst, sol.value(), safe).ok());
}

TEST_CASE("build_leq_q by set-builder evaluation") {
  FinitePoset omega = natural_chain(3);
  CHECK(build_leq_q(omega, StableType::SmallType) == omega);

  FinitePoset reversed_pair = poset_of({0, 1}, {{1, 0}});
  CHECK(build_leq_q(reversed_pair, StableType::SmallType) == discrete_poset(2));

  FinitePoset q = build_leq_q(reversed_pair, StableType::LargeType);
  CHECK(q.leq(0, 1));
  CHECK_FALSE(q.leq(1, 0));
}

TEST_CASE("stable_thinning keeps chains and R-consistent antichains") {
  SizePolicy policy{3, 20};

  SUBCASE("a chain passes through unchanged") {
    FinitePoset p = natural_chain(4);
    SolutionSet x = make_solution({0, 1, 2, 3}, SolutionKind::Chain);
    auto r = stable_thinning(p, StableType::SmallType, x, policy);
    REQUIRE(r.ok());
    CHECK(r.value().first.elements == x.elements);
    CHECK(r.value().second.stages.empty());
  }

  SUBCASE("an antichain already consistent with P survives whole") {
    FinitePoset p = discrete_poset(4);
    SolutionSet x = make_solution({0, 1, 2, 3}, SolutionKind::Antichain);
    auto r = stable_thinning(p, StableType::SmallType, x, policy);
    REQUIRE(r.ok());
    CHECK(r.value().first.elements == ElemSet{0, 1, 2, 3});
  }

  SUBCASE("the four-point example drops the reversed partner at stage zero") {
    FinitePoset p = poset_of({0, 1, 5, 6}, {{1, 0}});
    SolutionSet x = make_solution({0, 1, 5, 6}, SolutionKind::Antichain);
    auto r = stable_thinning(p, StableType::SmallType, x, policy);
    REQUIRE(r.ok());
    CHECK(r.value().second.stages.front() == ElemSet{0, 5, 6});
    CHECK(r.value().first.elements == ElemSet{0, 5, 6});
    CHECK(is_antichain(p, r.value().first.elements).value());
  }

  SUBCASE("a set failing against leq_Q is rejected") {
    FinitePoset p = natural_chain(4);
    SolutionSet x = make_solution({0, 1, 2, 3}, SolutionKind::Antichain);
    auto r = stable_thinning(p, StableType::SmallType, x, policy);
    REQUIRE_FALSE(r.ok());
    CHECK(r.error().code == Errc::NotASolution);
  }
}

TEST_CASE("thinning properties over random stable instances") {
  std::mt19937_64 rng(33);
  int thinned_runs = 0;
  for (int i = 0; i < 150; ++i) {
    StableType type = i % 2 ? StableType::SmallType : StableType::LargeType;
    auto inst = random_stable_instance(rng, 3 + rng() % 10, type, false);
    REQUIRE(inst.ok());
    const FinitePoset& p = inst.value().poset;
    FinitePoset q = build_leq_q(p, type);
    auto feasible = max_feasible_solution(q);
    SizePolicy policy{std::min<std::uint64_t>(3, feasible.value()), 20};
    if (policy.min_size == 0) continue;
    auto x = brute_force_solve(ProblemKind::OmegaScac,
                               ProblemInstance{q, std::nullopt, std::nullopt},
                               policy);
    REQUIRE(x.ok());
    auto r = stable_thinning(p, type, x.value(), policy);
    REQUIRE(r.ok());
    const auto& [y, trace] = r.value();
    ++thinned_runs;

    // Y is a subset of X and every pair of Y satisfies R.
    for (Elem e : y.elements)
      CHECK(std::binary_search(x.value().elements.begin(),
                               x.value().elements.end(), e));
    for (std::size_t a = 0; a < y.elements.size(); ++a)
      for (std::size_t b = a + 1; b < y.elements.size(); ++b)
        CHECK(thinning_r(p, q, y.elements[a], y.elements[b]));

    // Y is a chain or antichain of P (its infinitude is policy-relative).
    if (y.kind == SolutionKind::Chain)
      CHECK(is_chain(p, y.elements).value());
    else
      CHECK(is_antichain(p, y.elements).value());

    // Stage cardinalities: X_n has at least n+1 members while the stage
    // index stays below |Y|.
    for (std::size_t n = 0; n < trace.stages.size() && n < y.elements.size(); ++n)
      CHECK(trace.stages[n].size() >= n + 1);

    // Rank rule agrees with the final stage whenever stages were computed.
    if (!trace.stages.empty())
      CHECK(y.elements == trace.stages.back());
  }
  CHECK(thinned_runs > 50);
}

TEST_CASE("successor_free_set by scan") {
  CHECK(successor_free_set(natural_chain(4)) == ElemSet{3});
  CHECK(successor_free_set(discrete_poset(4)) == ElemSet{0, 1, 2, 3});
  FinitePoset p = poset_of({0, 1, 2, 3, 4}, {{0, 2}, {1, 2}});
  CHECK(successor_free_set(p) == ElemSet{2, 3, 4});
}

TEST_CASE("greedy_chain by simulation") {
  auto a = greedy_chain(natural_chain(4), 0);
  CHECK(a.value().elements == ElemSet{0, 1, 2, 3});

  auto b = greedy_chain(discrete_poset(4), 2);
  CHECK(b.value().elements == ElemSet{2});

  FinitePoset p = poset_of({0, 1, 2, 3, 4}, {{0, 2}, {2, 4}});
  auto c = greedy_chain(p, 0);
  CHECK(c.value().elements == ElemSet{0, 2, 4});

  CHECK_FALSE(greedy_chain(natural_chain(2), 9).ok());
}

TEST_CASE("greedy_antichain by simulation") {
  auto a = greedy_antichain(discrete_poset(4));
  CHECK(a.value().elements == ElemSet{0, 1, 2, 3});

  FinitePoset p = poset_of({0, 1, 2, 3, 4}, {{0, 2}, {1, 2}});
  auto b = greedy_antichain(p);
  CHECK(b.value().elements == ElemSet{2, 3, 4});

  auto c = greedy_antichain(natural_chain(4));
  CHECK(c.value().elements == ElemSet{3});

  auto bad = greedy_antichain(reversed_chain(3));
  REQUIRE_FALSE(bad.ok());
  CHECK(bad.error().code == Errc::NotOmegaOrdered);
}

TEST_CASE("greedy_antichain lands inside the successor-free set, increasing") {
  std::mt19937_64 rng(34);
  for (int i = 0; i < 100; ++i) {
    FinitePoset p = random_omega_poset(rng, 2 + rng() % 10);
    auto sol = greedy_antichain(p);
    REQUIRE(sol.ok());
    ElemSet sfree = successor_free_set(p);
    for (Elem e : sol.value().elements)
      CHECK(std::binary_search(sfree.begin(), sfree.end(), e));
    CHECK(is_antichain(p, sol.value().elements).value());
    for (std::size_t k = 1; k < sol.value().elements.size(); ++k)
      CHECK(sol.value().elements[k - 1] < sol.value().elements[k]);
  }
}

TEST_CASE("to_small_type flips large instances and keeps solutions verbatim") {
  SUBCASE("small-type instances pass through unchanged") {
    FinitePoset p = discrete_poset(3);
    ProblemInstance inst{p, all_tagged(p, Behavior::Isolated, 0,
                                       StableType::SmallType),
                         std::nullopt};
    auto out = to_small_type(inst);
    REQUIRE(out.ok());
    CHECK(out.value().poset == p);
    CHECK(out.value().annotation == inst.annotation);
  }

  SUBCASE("a large-type reversed pair dualizes with swapped tags") {
    FinitePoset p = poset_of({0, 1}, {{1, 0}});
    auto ann = StableAnnotation::make(
        {{0, Behavior::Large, 2}, {1, Behavior::Isolated, 2}},
        StableType::LargeType);
    REQUIRE(ann.ok());
    ProblemInstance inst{p, ann.value(), std::nullopt};
    auto out = to_small_type(inst);
    REQUIRE(out.ok());
    CHECK(out.value().poset.leq(0, 1));
    CHECK(out.value().annotation->type_tag() == StableType::SmallType);
    auto e0 = out.value().annotation->lookup(0);
    CHECK(e0->tag == Behavior::Small);
    CHECK(e0->point == 2);
    // Involution through a second flip.
    CHECK(dual_order(out.value().poset) == p);
  }

  SUBCASE("append_type_flag records the annotation type") {
    FinitePoset p = discrete_poset(2);
    ProblemInstance inst{p, all_tagged(p, Behavior::Isolated, 0,
                                       StableType::SmallType),
                         std::nullopt};
    auto out = append_type_flag(inst);
    REQUIRE(out.ok());
    CHECK(out.value().type_flag == StableType::SmallType);
  }

  SUBCASE("an unannotated instance cannot be flipped") {
    ProblemInstance inst{discrete_poset(2), std::nullopt, std::nullopt};
    CHECK(to_small_type(inst).error().code == Errc::NotStable);
  }
}

TEST_CASE("solutions transfer verbatim through to_small_type") {
  std::mt19937_64 rng(35);
  SizePolicy policy{2, 20};
  for (int i = 0; i < 60; ++i) {
    auto inst =
        random_stable_instance(rng, 2 + rng() % 7, StableType::LargeType, false);
    REQUIRE(inst.ok());
    auto flipped = to_small_type(inst.value());
    REQUIRE(flipped.ok());
    const auto& u = inst.value().poset.universe();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << u.size()); ++mask) {
      ElemSet xs;
      for (std::size_t b = 0; b < u.size(); ++b)
        if (mask & (std::uint64_t{1} << b)) xs.push_back(u[b]);
      for (SolutionKind kind : {SolutionKind::Chain, SolutionKind::Antichain}) {
        SolutionSet sol{xs, kind};
        CHECK(verify_solution(ProblemKind::Scac, inst.value(), sol, policy).ok() ==
              verify_solution(ProblemKind::Scac, flipped.value(), sol, policy).ok());
      }
    }
  }
}

TEST_CASE("greedy_antichain can exclude the reflexive start") {
  // Without the reflexive reading, 0 has no successor inside the
  // successor-free set of a discrete poset, so the walk never starts.
  auto with_refl = greedy_antichain(discrete_poset(4), true);
  CHECK(with_refl.value().elements == ElemSet{0, 1, 2, 3});
  auto without = greedy_antichain(discrete_poset(4), false);
  CHECK(without.value().elements.empty());
}

TEST_CASE("when nearest free elements are reachable the walk collects them all") {
  std::mt19937_64 rng(36);
  int applicable = 0;
  for (int i = 0; i < 200; ++i) {
    FinitePoset p = random_omega_poset(rng, 1 + rng() % 11);
    ElemSet sfree = successor_free_set(p);
    bool reachable = true;
    for (Elem n : p.universe()) {
      auto it = std::lower_bound(sfree.begin(), sfree.end(), n);
      if (it != sfree.end() && !p.leq(n, *it)) {
        reachable = false;
        break;
      }
    }
    if (!reachable) continue;
    ++applicable;
    auto sol = greedy_antichain(p);
    REQUIRE(sol.ok());
    CHECK(sol.value().elements == sfree);
  }
  CHECK(applicable > 20);
}
