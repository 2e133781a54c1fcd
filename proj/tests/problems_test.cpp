#include <doctest.h>

#include <random>

#include "generate.hpp"
#include "problems.hpp"
#include "support.hpp"

using namespace caclab;
using namespace testutil;

TEST_CASE("validate_instance side conditions") {
  SizePolicy policy;

  SUBCASE("a discrete poset is an OMEGA_CAC instance") {
    ProblemInstance inst{discrete_poset(3), std::nullopt, std::nullopt};
    CHECK(validate_instance(ProblemKind::OmegaCac, inst, policy).ok());
  }

  SUBCASE("an omega-ordered large-type annotation with a live L tag fails") {
    FinitePoset p = natural_chain(3);
    auto ann = StableAnnotation::make(
        {{0, Behavior::Large, 0}, {1, Behavior::Large, 1}, {2, Behavior::Large, 2}},
        StableType::LargeType);
    REQUIRE(ann.ok());
    ProblemInstance inst{p, ann.value(), std::nullopt};
    auto v = validate_instance(ProblemKind::OmegaScac, inst, policy);
    REQUIRE_FALSE(v.ok());
    CHECK(v.error().code == Errc::NotStable);
  }

  SUBCASE("SCAC_TYPE flags must match the annotation type") {
    FinitePoset p = discrete_poset(3);
    auto ann = all_tagged(p, Behavior::Isolated, 0, StableType::SmallType);
    ProblemInstance inst{p, ann, StableType::LargeType};
    auto v = validate_instance(ProblemKind::ScacType, inst, policy);
    REQUIRE_FALSE(v.ok());
    CHECK(v.error().code == Errc::TypeMismatch);

    inst.type_flag = StableType::SmallType;
    CHECK(validate_instance(ProblemKind::ScacType, inst, policy).ok());
  }

  SUBCASE("stable kinds demand an annotation") {
    ProblemInstance inst{discrete_poset(3), std::nullopt, std::nullopt};
    auto v = validate_instance(ProblemKind::Scac, inst, policy);
    REQUIRE_FALSE(v.ok());
    CHECK(v.error().code == Errc::NotStable);
  }
}

TEST_CASE("verify_solution checks membership, size, and shape") {
  SizePolicy policy{3, 20};
  ProblemInstance chain_inst{natural_chain(4), std::nullopt, std::nullopt};

  CHECK(verify_solution(ProblemKind::Cac, chain_inst,
                        SolutionSet{{0, 1, 2, 3}, SolutionKind::Chain}, policy)
            .ok());

  auto small = verify_solution(ProblemKind::Cac, chain_inst,
                               SolutionSet{{0, 1}, SolutionKind::Chain}, policy);
  REQUIRE_FALSE(small.ok());
  CHECK(small.error().code == Errc::TooSmall);

  ProblemInstance disc{discrete_poset(4), std::nullopt, std::nullopt};
  auto not_chain = verify_solution(
      ProblemKind::Cac, disc, SolutionSet{{0, 1, 2}, SolutionKind::Chain}, policy);
  REQUIRE_FALSE(not_chain.ok());
  CHECK(not_chain.error().code == Errc::NotAChain);

  auto not_anti = verify_solution(ProblemKind::Cac, chain_inst,
                                  SolutionSet{{0, 1, 2}, SolutionKind::Antichain},
                                  policy);
  REQUIRE_FALSE(not_anti.ok());
  CHECK(not_anti.error().code == Errc::NotAnAntichain);

  auto foreign = verify_solution(ProblemKind::Cac, chain_inst,
                                 SolutionSet{{0, 9}, SolutionKind::Chain}, policy);
  REQUIRE_FALSE(foreign.ok());
  CHECK(foreign.error().code == Errc::ForeignElement);
}

TEST_CASE("brute_force_solve on the named instances") {
  SizePolicy policy{3, 20};

  ProblemInstance chain_inst{natural_chain(5), std::nullopt, std::nullopt};
  auto c = brute_force_solve(ProblemKind::Cac, chain_inst, policy);
  REQUIRE(c.ok());
  CHECK(c.value().kind == SolutionKind::Chain);
  CHECK(c.value().elements == ElemSet{0, 1, 2, 3, 4});

  ProblemInstance disc{discrete_poset(5), std::nullopt, std::nullopt};
  auto a = brute_force_solve(ProblemKind::Cac, disc, policy);
  REQUIRE(a.ok());
  CHECK(a.value().kind == SolutionKind::Antichain);
  CHECK(a.value().elements == ElemSet{0, 1, 2, 3, 4});

  ProblemInstance tiny{discrete_poset(2), std::nullopt, std::nullopt};
  auto none = brute_force_solve(ProblemKind::Cac, tiny, policy);
  REQUIRE_FALSE(none.ok());
  CHECK(none.error().code == Errc::NoSolution);

  ProblemInstance big{discrete_poset(21), std::nullopt, std::nullopt};
  auto too_large = brute_force_solve(ProblemKind::Cac, big, policy);
  REQUIRE_FALSE(too_large.ok());
  CHECK(too_large.error().code == Errc::TooLarge);
}

TEST_CASE("brute_force_solve is sound for every kind") {
  std::mt19937_64 rng(20);
  SizePolicy policy{2, 20};
  const ProblemKind kinds[] = {ProblemKind::Cac, ProblemKind::Scac,
                               ProblemKind::OmegaCac, ProblemKind::OmegaScac,
                               ProblemKind::ScacSmall, ProblemKind::ScacLarge,
                               ProblemKind::ScacType};
  for (ProblemKind kind : kinds)
    for (int i = 0; i < 500; ++i) {
      auto inst = generate_instance(kind, 2 + rng() % 10, rng());
      REQUIRE(inst.ok());
      REQUIRE(validate_instance(kind, inst.value(), policy).ok());
      auto sol = brute_force_solve(kind, inst.value(), policy);
      if (sol.ok())
        CHECK(verify_solution(kind, inst.value(), sol.value(), policy).ok());
    }
}

TEST_CASE("brute_force_solve matches subset enumeration and is sound") {
  std::mt19937_64 rng(21);
  SizePolicy policy{3, 20};
  for (int i = 0; i < 60; ++i) {
    FinitePoset p = random_poset(rng, 2 + rng() % 8);
    ProblemInstance inst{p, std::nullopt, std::nullopt};
    auto [best_chain, best_anti] = extremes_by_enumeration(p);

    auto sol = brute_force_solve(ProblemKind::Cac, inst, policy);
    if (best_chain >= policy.min_size) {
      REQUIRE(sol.ok());
      CHECK(sol.value().kind == SolutionKind::Chain);
      CHECK(sol.value().elements.size() == best_chain);
    } else if (best_anti >= policy.min_size) {
      REQUIRE(sol.ok());
      CHECK(sol.value().kind == SolutionKind::Antichain);
      CHECK(sol.value().elements.size() == best_anti);
    } else {
      CHECK_FALSE(sol.ok());
    }
    if (sol.ok())
      CHECK(verify_solution(ProblemKind::Cac, inst, sol.value(), policy).ok());
  }
}

TEST_CASE("brute_force_solve is deterministic and lexicographically least") {
  // Two maximum chains {0,2} vs {0,1}: the lex-least one wins.
  FinitePoset p = poset_of({0, 1, 2}, {{0, 1}, {0, 2}});
  SizePolicy policy{2, 20};
  ProblemInstance inst{p, std::nullopt, std::nullopt};
  auto sol = brute_force_solve(ProblemKind::Cac, inst, policy);
  REQUIRE(sol.ok());
  CHECK(sol.value().elements == ElemSet{0, 1});
  for (int i = 0; i < 5; ++i) {
    auto again = brute_force_solve(ProblemKind::Cac, inst, policy);
    CHECK(again.value().elements == sol.value().elements);
  }
}

TEST_CASE("instances of restricted kinds are CAC instances") {
  std::mt19937_64 rng(22);
  SizePolicy policy;
  const ProblemKind kinds[] = {ProblemKind::Scac, ProblemKind::OmegaCac,
                               ProblemKind::OmegaScac, ProblemKind::ScacSmall,
                               ProblemKind::ScacLarge, ProblemKind::ScacType};
  for (ProblemKind kind : kinds)
    for (int i = 0; i < 25; ++i) {
      auto inst = generate_instance(kind, 3 + rng() % 6, rng());
      REQUIRE(inst.ok());
      REQUIRE(validate_instance(kind, inst.value(), policy).ok());
      CHECK(validate_instance(ProblemKind::Cac, inst.value(), policy).ok());
    }
}

TEST_CASE("omega-ordered stable instances never need a live L tag") {
  std::mt19937_64 rng(23);
  SizePolicy policy;
  for (int i = 0; i < 60; ++i) {
    auto inst = generate_instance(ProblemKind::OmegaScac, 3 + rng() % 8, rng());
    REQUIRE(inst.ok());
    REQUIRE(validate_instance(ProblemKind::OmegaScac, inst.value(), policy).ok());
    CHECK(inst.value().annotation->type_tag() == StableType::SmallType);
    for (const auto& e : inst.value().annotation->entries())
      CHECK(e.tag != Behavior::Large);
  }
}

TEST_CASE("generator refuses omega-ordered large-type requests") {
  std::mt19937_64 rng(24);
  auto bad = random_stable_instance(rng, 5, StableType::LargeType, true);
  REQUIRE_FALSE(bad.ok());
  CHECK(bad.error().code == Errc::UnsatisfiableSpec);
}

TEST_CASE("generator handles the empty instance") {
  auto inst = generate_instance(ProblemKind::Cac, 0, 1);
  REQUIRE(inst.ok());
  CHECK(inst.value().poset.size() == 0);
  SizePolicy policy{3, 20};
  CHECK(validate_instance(ProblemKind::Cac, inst.value(), policy).ok());
  CHECK(brute_force_solve(ProblemKind::Cac, inst.value(), policy).error().code ==
        Errc::NoSolution);
}
