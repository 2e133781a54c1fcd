#include <doctest.h>

#include <random>

#include "generate.hpp"
#include "json_io.hpp"
#include "support.hpp"

using namespace caclab;
using namespace testutil;

TEST_CASE("poset documents round-trip and normalize reflexive pairs") {
  auto loaded = io::poset_from_json(
      R"({"universe":[0,1,2],"pairs":[[0,1]]})");
  REQUIRE(loaded.ok());
  CHECK(loaded.value().normalized);
  CHECK(loaded.value().poset.leq(0, 1));
  CHECK(loaded.value().poset.leq(2, 2));

  std::string emitted = io::poset_to_json(loaded.value().poset, true);
  auto again = io::poset_from_json(emitted);
  REQUIRE(again.ok());
  CHECK_FALSE(again.value().normalized);  // reflexive pairs are always emitted
  CHECK(again.value().poset == loaded.value().poset);
}

TEST_CASE("poset documents reject malformed input") {
  CHECK(io::poset_from_json("{").error().code == Errc::ParseError);
  CHECK(io::poset_from_json(R"({"universe":[0]})").error().code ==
        Errc::ParseError);
  auto bad = io::poset_from_json(
      R"({"universe":[0,1],"pairs":[[0,1],[1,0]]})");
  REQUIRE_FALSE(bad.ok());
  CHECK(bad.error().code == Errc::AntisymmetryViolation);
}

TEST_CASE("pairs are emitted in ascending lexicographic order") {
  std::mt19937_64 rng(81);
  FinitePoset p = random_poset(rng, 7);
  auto pairs = p.pairs();
  for (std::size_t i = 1; i < pairs.size(); ++i) CHECK(pairs[i - 1] < pairs[i]);
}

TEST_CASE("instance documents carry annotation, flag, and policy") {
  std::mt19937_64 rng(82);
  for (int i = 0; i < 40; ++i) {
    auto kind = static_cast<ProblemKind>(rng() % 7);
    auto inst = generate_instance(kind, 2 + rng() % 8, rng());
    REQUIRE(inst.ok());
    SizePolicy policy{2 + rng() % 3, 20};
    std::string text = io::instance_to_json(inst.value(), false, policy);
    auto back = io::instance_from_json(text);
    REQUIRE(back.ok());
    CHECK(back.value().instance.poset == inst.value().poset);
    CHECK(back.value().instance.annotation == inst.value().annotation);
    CHECK(back.value().instance.type_flag == inst.value().type_flag);
    REQUIRE(back.value().policy.has_value());
    CHECK(back.value().policy->min_size == policy.min_size);
  }
}

TEST_CASE("solution documents round-trip") {
  SolutionSet sol = make_solution({4, 1, 2}, SolutionKind::Antichain);
  auto back = io::solution_from_json(io::solution_to_json(sol));
  REQUIRE(back.ok());
  CHECK(back.value().elements == ElemSet{1, 2, 4});
  CHECK(back.value().kind == SolutionKind::Antichain);

  CHECK(io::solution_from_json(R"({"elements":[1],"kind":"ring"})")
            .error()
            .code == Errc::ParseError);
}

TEST_CASE("machine documents round-trip for builtins and tables") {
  auto builtin = io::machine_from_json(R"("threshold-3")");
  REQUIRE(builtin.ok());
  auto builtin_again = io::machine_from_json(io::machine_to_json(builtin.value()));
  REQUIRE(builtin_again.ok());
  CHECK(builtin.value() == builtin_again.value());

  auto table = io::machine_from_json(
      R"({"use_bound":8,"entries":[[0,[1,2],1],[3,[],0]]})");
  REQUIRE(table.ok());
  auto table_again = io::machine_from_json(io::machine_to_json(table.value()));
  REQUIRE(table_again.ok());
  CHECK(table.value() == table_again.value());

  auto family = io::machines_from_json(
      R"({"use_bound":16,"machines":["constant-1","membership-of-{0,1}",
           {"entries":[[0,[],1]]}]})");
  REQUIRE(family.ok());
  CHECK(family.value().size() == 3);
  CHECK(family.value()[0].use_bound() == 16);

  auto bad = io::machine_from_json(R"({"use_bound":4,"entries":[[0,[9],1]]})");
  REQUIRE_FALSE(bad.ok());
  CHECK(bad.error().code == Errc::UseConsistencyViolation);
}

TEST_CASE("condition documents round-trip") {
  std::string text = R"({
    "pi": {"universe":[0,1],"pairs":[[0,1]]},
    "assign": [[0,"S",2],[1,"S",2]]
  })";
  auto c = io::condition_from_json(text);
  REQUIRE(c.ok());
  auto again = io::condition_from_json(io::condition_to_json(c.value()));
  REQUIRE(again.ok());
  CHECK(c.value() == again.value());

  auto incomplete = io::condition_from_json(
      R"({"pi":{"universe":[0,1],"pairs":[]},"assign":[[0,"I",0]]})");
  REQUIRE_FALSE(incomplete.ok());
  CHECK(incomplete.error().code == Errc::IncompleteAssignment);
}

TEST_CASE("verdicts and errors serialize with witnesses") {
  std::string ok_text = io::verdict_to_json(Verdict::accept());
  CHECK(ok_text.find("true") != std::string::npos);
  Verdict bad = Verdict::reject(Errc::AntisymmetryViolation, {0, 1});
  std::string bad_text = io::verdict_to_json(bad);
  CHECK(bad_text.find("AntisymmetryViolation") != std::string::npos);
}

TEST_CASE("dot export names every element and covering edge") {
  FinitePoset chain = natural_chain(3);
  std::string dot = io::poset_to_dot(chain);
  CHECK(dot.find("n0 -> n1") != std::string::npos);
  CHECK(dot.find("n1 -> n2") != std::string::npos);
  CHECK(dot.find("n0 -> n2") == std::string::npos);  // not a covering pair
}

TEST_CASE("emission is deterministic") {
  auto inst = generate_instance(ProblemKind::Scac, 7, 12345);
  REQUIRE(inst.ok());
  std::string a = io::instance_to_json(inst.value());
  auto inst2 = generate_instance(ProblemKind::Scac, 7, 12345);
  std::string b = io::instance_to_json(inst2.value());
  CHECK(a == b);
}

TEST_CASE("documents with wrong field types fail as ParseError") {
  CHECK(io::poset_from_json(R"({"universe":[0,"x"],"pairs":[]})").error().code ==
        Errc::ParseError);
  CHECK(io::instance_from_json(
            R"({"universe":[0],"pairs":[[0,0]],"policy":{"min_size":"big"}})")
            .error()
            .code == Errc::ParseError);
  CHECK(io::machine_from_json(R"({"use_bound":"lots","entries":[]})")
            .error()
            .code == Errc::ParseError);
  CHECK(io::condition_from_json(R"({"pi":5,"assign":[]})").error().code ==
        Errc::ParseError);
}
