#include "generate.hpp"

#include <algorithm>
#include <numeric>

namespace caclab {

namespace {

FinitePoset closure_along_order(std::mt19937_64& rng, std::uint64_t n,
                                bool identity_order) {
  std::vector<Elem> perm(n);
  std::iota(perm.begin(), perm.end(), Elem{0});
  if (!identity_order) std::shuffle(perm.begin(), perm.end(), rng);
  std::uniform_real_distribution<double> density(0.1, 0.5);
  const double p = density(rng);
  std::bernoulli_distribution edge(p);

  std::vector<std::pair<Elem, Elem>> cover;
  for (std::uint64_t i = 0; i < n; ++i)
    for (std::uint64_t j = i + 1; j < n; ++j)
      if (edge(rng)) cover.emplace_back(perm[i], perm[j]);
  ElemSet universe(n);
  std::iota(universe.begin(), universe.end(), Elem{0});
  auto r = FinitePoset::from_cover(std::move(universe), std::move(cover));
  return std::move(r).value();  // acyclic by construction
}

}  // namespace

FinitePoset random_poset(std::mt19937_64& rng, std::uint64_t n) {
  return closure_along_order(rng, n, false);
}

FinitePoset random_omega_poset(std::mt19937_64& rng, std::uint64_t n) {
  return closure_along_order(rng, n, true);
}

Result<ProblemInstance> random_stable_instance(std::mt19937_64& rng,
                                               std::uint64_t n, StableType type,
                                               bool omega) {
  if (omega && type == StableType::LargeType)
    return make_error(Errc::UnsatisfiableSpec, {},
                      "omega-ordered stable posets are small type");

  const Behavior side_tag =
      type == StableType::SmallType ? Behavior::Small : Behavior::Large;
  std::bernoulli_distribution side_coin(0.5);
  std::bernoulli_distribution orient_coin(0.5);
  std::bernoulli_distribution free_edge(0.4);

  for (int attempt = 0; attempt < 500; ++attempt) {
    std::vector<Behavior> tags(n);
    std::vector<std::uint64_t> points(n);
    for (std::uint64_t x = 0; x < n; ++x) {
      tags[x] = side_coin(rng) ? side_tag : Behavior::Isolated;
      std::uint64_t lo = 0;
      if (omega && tags[x] == Behavior::Small) lo = x;  // no forced down edges
      points[x] =
          std::uniform_int_distribution<std::uint64_t>(lo, n)(rng);
    }

    // Forced orientation per unordered pair {a, b}, a < b:
    //  - b >= point(a): a's tag decides (S: a below b, L: a above b, I: none)
    //  - a >= point(b): b's tag decides symmetrically
    // 0 free, 1 up (a <= b), 2 down (b <= a), 3 incomparable, -1 conflict.
    auto constraint = [&](Elem a, Elem b) -> int {
      int want = 0;
      auto fold = [&](int next) {
        if (want == 0 || want == next) want = next;
        else want = -1;
      };
      if (b >= points[a]) {
        if (tags[a] == Behavior::Small) fold(1);
        else if (tags[a] == Behavior::Large) fold(2);
        else fold(3);
      }
      if (want != -1 && a >= points[b]) {
        if (tags[b] == Behavior::Small) fold(2);
        else if (tags[b] == Behavior::Large) fold(1);
        else fold(3);
      }
      return want;
    };

    bool conflict = false;
    std::vector<std::pair<Elem, Elem>> strict;
    std::vector<std::pair<Elem, Elem>> must_skip;  // forced incomparable
    for (Elem a = 0; a < n && !conflict; ++a)
      for (Elem b = a + 1; b < n && !conflict; ++b) {
        int want = constraint(a, b);
        switch (want) {
          case -1: conflict = true; break;
          case 1: strict.emplace_back(a, b); break;
          case 2:
            if (omega) conflict = true;
            else strict.emplace_back(b, a);
            break;
          case 3: must_skip.emplace_back(a, b); break;
          default:
            if (free_edge(rng)) {
              if (omega || orient_coin(rng)) strict.emplace_back(a, b);
              else strict.emplace_back(b, a);
            }
            break;
        }
      }
    if (conflict) continue;

    ElemSet universe(n);
    std::iota(universe.begin(), universe.end(), Elem{0});
    auto closed = FinitePoset::from_cover(universe, strict);
    if (!closed.ok()) continue;  // the closure hit a cycle
    if (omega && !is_omega_ordered(closed.value())) continue;

    std::vector<BehaviorEntry> entries;
    for (Elem x = 0; x < n; ++x) entries.push_back({x, tags[x], points[x]});
    auto ann = StableAnnotation::make(std::move(entries), type);
    if (!ann.ok()) continue;
    if (!classify_stability(closed.value(), ann.value())) continue;

    ProblemInstance inst;
    inst.poset = std::move(closed).value();
    inst.annotation = std::move(ann).value();
    return inst;
  }

  // Deterministic fallback: the discrete all-isolated poset is stable of
  // either type.
  ElemSet universe(n);
  std::iota(universe.begin(), universe.end(), Elem{0});
  auto discrete = FinitePoset::from_cover(std::move(universe), {});
  std::vector<BehaviorEntry> entries;
  for (Elem x = 0; x < n; ++x) entries.push_back({x, Behavior::Isolated, 0});
  ProblemInstance inst;
  inst.poset = std::move(discrete).value();
  inst.annotation = std::move(StableAnnotation::make(std::move(entries), type)).value();
  return inst;
}

Result<ProblemInstance> generate_instance(ProblemKind kind, std::uint64_t size,
                                          std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  switch (kind) {
    case ProblemKind::Cac: {
      ProblemInstance inst;
      inst.poset = random_poset(rng, size);
      return inst;
    }
    case ProblemKind::OmegaCac: {
      ProblemInstance inst;
      inst.poset = random_omega_poset(rng, size);
      return inst;
    }
    case ProblemKind::Scac: {
      std::bernoulli_distribution coin(0.5);
      StableType type = coin(rng) ? StableType::SmallType : StableType::LargeType;
      return random_stable_instance(rng, size, type, false);
    }
    case ProblemKind::OmegaScac:
      return random_stable_instance(rng, size, StableType::SmallType, true);
    case ProblemKind::ScacSmall:
      return random_stable_instance(rng, size, StableType::SmallType, false);
    case ProblemKind::ScacLarge:
      return random_stable_instance(rng, size, StableType::LargeType, false);
    case ProblemKind::ScacType: {
      std::bernoulli_distribution coin(0.5);
      StableType type = coin(rng) ? StableType::SmallType : StableType::LargeType;
      auto inst = random_stable_instance(rng, size, type, false);
      if (!inst.ok()) return inst;
      inst.value().type_flag = inst.value().annotation->type_tag();
      return inst;
    }
  }
  return make_error(Errc::UnsatisfiableSpec, {}, "unknown kind");
}

}  // namespace caclab
