#include "forcing.hpp"

#include <algorithm>

namespace caclab {

namespace {

bool is_initial_segment(const FinitePoset& order) {
  const auto& u = order.universe();
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] != i) return false;
  return true;
}

}  // namespace

Result<Condition> Condition::validate(FinitePoset order, Assign assign,
                                      IsolatedReading reading) {
  if (!is_initial_segment(order))
    return make_error(Errc::ForeignElement, {},
                      "condition orders must live on an initial segment");
  const std::uint64_t n = order.size();
  if (assign.size() != n)
    return make_error(Errc::IncompleteAssignment, {assign.size(), n});
  for (Elem x = 0; x < n; ++x)
    if (assign[x].second > n)
      return make_error(Errc::StabilizationOutOfRange, {x, assign[x].second});

  std::optional<Elem> s_elem, l_elem;
  for (Elem x = 0; x < n; ++x) {
    if (assign[x].first == Behavior::Small && !s_elem) s_elem = x;
    if (assign[x].first == Behavior::Large && !l_elem) l_elem = x;
  }
  if (s_elem && l_elem)
    return make_error(Errc::HomogeneityViolation, {*s_elem, *l_elem});

  auto tag = [&](Elem x) { return assign[x].first; };
  auto point = [&](Elem x) { return assign[x].second; };

  // One bullet at a time, least (x, y) witness first. The reflexive pair
  // participates in the S and L bullets, so (S, t) forces t > x.
  for (Elem x = 0; x < n; ++x) {
    if (tag(x) != Behavior::Small) continue;
    for (Elem y = 0; y < n; ++y)
      if (order.leq(y, x) && (y >= point(x) || tag(y) != Behavior::Small))
        return make_error(Errc::SmallBulletViolation, {x, y});
  }
  for (Elem x = 0; x < n; ++x) {
    if (tag(x) != Behavior::Large) continue;
    for (Elem y = 0; y < n; ++y)
      if (order.leq(x, y) && (y >= point(x) || tag(y) != Behavior::Large))
        return make_error(Errc::LargeBulletViolation, {x, y});
  }
  for (Elem x = 0; x < n; ++x) {
    if (tag(x) == Behavior::Isolated) continue;
    for (Elem y = 0; y < n; ++y)
      if (order.incomparable(x, y) && y >= point(x))
        return make_error(Errc::SideBulletViolation, {x, y});
  }
  for (Elem x = 0; x < n; ++x) {
    if (tag(x) != Behavior::Isolated) continue;
    for (Elem y = 0; y < n; ++y) {
      if (y == x && reading == IsolatedReading::ExcludeSelf) continue;
      if (order.comparable(x, y) && y >= point(x))
        return make_error(Errc::IsolatedBulletViolation, {x, y});
    }
  }

  Condition c;
  c.order_ = std::move(order);
  c.assign_ = std::move(assign);
  return c;
}

Condition Condition::empty() {
  auto r = validate(FinitePoset::validate({}, {}).value(), {});
  return std::move(r).value();
}

bool Condition::has_tag(Behavior b) const {
  return std::any_of(assign_.begin(), assign_.end(),
                     [&](const auto& e) { return e.first == b; });
}

bool Condition::compatible_with(Side s) const {
  return s == Side::Small ? !has_tag(Behavior::Large) : !has_tag(Behavior::Small);
}

StableAnnotation Condition::annotation(Side side_hint) const {
  std::vector<BehaviorEntry> entries;
  for (Elem x = 0; x < size(); ++x)
    entries.push_back({x, assign_[x].first, assign_[x].second});
  StableType type = has_tag(Behavior::Small)  ? StableType::SmallType
                    : has_tag(Behavior::Large) ? StableType::LargeType
                    : side_hint == Side::Small ? StableType::SmallType
                                               : StableType::LargeType;
  return std::move(StableAnnotation::make(std::move(entries), type)).value();
}

bool extends(const Condition& q, const Condition& p) {
  if (q.size() < p.size()) return false;
  for (Elem x = 0; x < p.size(); ++x)
    for (Elem y = 0; y < p.size(); ++y)
      if (q.order().leq(x, y) != p.order().leq(x, y)) return false;
  for (Elem x = 0; x < p.size(); ++x)
    if (q.assign()[x] != p.assign()[x]) return false;
  return true;
}

bool is_parallel(const Condition& p, const Condition& q) {
  return p.order() == q.order();
}

Result<Condition> mind_change(const Condition& p) {
  if (p.has_tag(Behavior::Large))
    return make_error(Errc::WrongSide, {}, "mind change starts from {S,I} tags");
  Condition::Assign next = p.assign();
  for (auto& [tag, t] : next) {
    if (tag == Behavior::Small) {
      tag = Behavior::Isolated;
      t = p.size();
    } else if (tag == Behavior::Isolated) {
      tag = Behavior::Large;
      t = p.size();
    }
  }
  return Condition::validate(p.order(), std::move(next));
}

namespace {

struct GrowMatrix {
  std::uint64_t n;
  std::vector<std::uint8_t> leq;  // n * n

  bool get(Elem i, Elem j) const { return leq[i * n + j] != 0; }
  void set(Elem i, Elem j, bool v) { leq[i * n + j] = v ? 1 : 0; }

  Result<FinitePoset> to_poset(std::uint64_t upto) const {
    ElemSet universe;
    std::vector<std::pair<Elem, Elem>> pairs;
    for (Elem i = 0; i < upto; ++i) {
      universe.push_back(i);
      for (Elem j = 0; j < upto; ++j)
        if (get(i, j)) pairs.emplace_back(i, j);
    }
    return FinitePoset::validate(std::move(universe), std::move(pairs));
  }
};

int behavior_rank(Behavior b) {
  switch (b) {
    case Behavior::Small: return 0;
    case Behavior::Large: return 1;
    case Behavior::Isolated: return 2;
  }
  return 3;
}

bool condition_less(const Condition& a, const Condition& b) {
  auto pa = a.order().pairs(), pb = b.order().pairs();
  if (pa != pb) return pa < pb;
  const auto& aa = a.assign();
  const auto& ab = b.assign();
  for (std::size_t i = 0; i < std::min(aa.size(), ab.size()); ++i) {
    auto ka = std::pair{behavior_rank(aa[i].first), aa[i].second};
    auto kb = std::pair{behavior_rank(ab[i].first), ab[i].second};
    if (ka != kb) return ka < kb;
  }
  return aa.size() < ab.size();
}

}  // namespace

std::vector<Condition> enumerate_extensions(const Condition& p,
                                            std::uint64_t target_size,
                                            Side side) {
  std::vector<Condition> out;
  if (target_size < p.size() || !p.compatible_with(side)) return out;
  if (target_size == p.size()) {
    out.push_back(p);
    return out;
  }

  const std::uint64_t old_n = p.size();
  GrowMatrix m{target_size,
               std::vector<std::uint8_t>(target_size * target_size, 0)};
  for (Elem i = 0; i < old_n; ++i)
    for (Elem j = 0; j < old_n; ++j)
      m.set(i, j, p.order().leq(i, j));

  const Behavior side_tags[2] = {
      side == Side::Small ? Behavior::Small : Behavior::Large,
      Behavior::Isolated};

  Condition::Assign assign = p.assign();
  assign.resize(target_size, {Behavior::Isolated, 0});

  // Grow one element at a time: pick the down-set and up-set among earlier
  // elements (a valid one-point order extension), then pick tags and
  // points; bullet interactions are filtered by the final validation.
  auto assign_rec = [&](auto&& self, Elem k) -> void {
    if (k == target_size) {
      auto order = m.to_poset(target_size);
      if (!order.ok()) return;
      auto cond = Condition::validate(std::move(order).value(), assign);
      if (cond.ok()) out.push_back(std::move(cond).value());
      return;
    }
    for (Behavior tag : side_tags)
      for (std::uint64_t t = 0; t <= target_size; ++t) {
        assign[k] = {tag, t};
        self(self, k + 1);
      }
  };

  auto grow_rec = [&](auto&& self, Elem k) -> void {
    if (k == target_size) {
      assign_rec(assign_rec, old_n);
      return;
    }
    const std::uint64_t below = k;
    for (std::uint64_t dmask = 0; dmask < (std::uint64_t{1} << below); ++dmask)
      for (std::uint64_t umask = 0; umask < (std::uint64_t{1} << below); ++umask) {
        if (dmask & umask) continue;
        bool ok = true;
        for (Elem d = 0; d < below && ok; ++d) {
          if (!(dmask & (std::uint64_t{1} << d))) continue;
          for (Elem j = 0; j < below && ok; ++j)
            if (m.get(j, d) && !(dmask & (std::uint64_t{1} << j))) ok = false;
        }
        for (Elem u = 0; u < below && ok; ++u) {
          if (!(umask & (std::uint64_t{1} << u))) continue;
          for (Elem j = 0; j < below && ok; ++j)
            if (m.get(u, j) && !(umask & (std::uint64_t{1} << j))) ok = false;
        }
        for (Elem d = 0; d < below && ok; ++d) {
          if (!(dmask & (std::uint64_t{1} << d))) continue;
          for (Elem u = 0; u < below && ok; ++u)
            if ((umask & (std::uint64_t{1} << u)) && !m.get(d, u)) ok = false;
        }
        if (!ok) continue;
        m.set(k, k, true);
        for (Elem d = 0; d < below; ++d)
          if (dmask & (std::uint64_t{1} << d)) m.set(d, k, true);
        for (Elem u = 0; u < below; ++u)
          if (umask & (std::uint64_t{1} << u)) m.set(k, u, true);
        self(self, k + 1);
        for (Elem j = 0; j <= k; ++j) {
          m.set(k, j, false);
          m.set(j, k, false);
        }
      }
  };
  grow_rec(grow_rec, old_n);

  std::sort(out.begin(), out.end(), condition_less);
  return out;
}

std::optional<std::array<Elem, 3>> find_diagonal_witnesses(
    const FinitePoset& g, const OracleMachine& machine) {
  ElemSet selected;
  for (Elem w : g.universe())
    if (evaluate(machine, {}, w) == EvalOutcome::One) selected.push_back(w);
  for (Elem x : selected)
    for (Elem y : selected)
      for (Elem z : selected)
        if (g.incomparable(x, y) && g.lt(y, z)) return std::array{x, y, z};
  return std::nullopt;
}

namespace {

// Canonical realization of the pattern "x | y and y < z" inside an
// extension of p with exactly target_size elements. Old relations and tags
// are frozen; fresh elements sit on the forced side of the old ones and are
// tagged (I, target_size). Returns the first triple, scanning in lex order.
std::optional<std::pair<Condition, std::array<Elem, 3>>> realize_pattern(
    const Condition& p, const OracleMachine& machine, std::uint64_t target,
    Side side) {
  const std::uint64_t old_n = p.size();
  auto selected = [&](Elem w) {
    return evaluate(machine, {}, w) == EvalOutcome::One;
  };
  auto old_tag = [&](Elem x) { return p.assign()[x].first; };

  for (Elem x = 0; x < target; ++x) {
    if (!selected(x)) continue;
    for (Elem y = 0; y < target; ++y) {
      if (y == x || !selected(y)) continue;
      for (Elem z = 0; z < target; ++z) {
        if (z == x || z == y || !selected(z)) continue;

        GrowMatrix m{target, std::vector<std::uint8_t>(target * target, 0)};
        for (Elem i = 0; i < target; ++i) m.set(i, i, true);
        for (Elem i = 0; i < old_n; ++i)
          for (Elem j = 0; j < old_n; ++j)
            if (p.order().leq(i, j)) m.set(i, j, true);
        // Forced old-new comparabilities: above every old S on the small
        // side, below every old L on the large side.
        for (Elem k = old_n; k < target; ++k)
          for (Elem j = 0; j < old_n; ++j) {
            if (side == Side::Small && old_tag(j) == Behavior::Small)
              m.set(j, k, true);
            if (side == Side::Large && old_tag(j) == Behavior::Large)
              m.set(k, j, true);
          }

        if (!m.get(y, z)) {
          // The strict pair must be addable: both fresh, or forced already.
          if (y < old_n || z < old_n) continue;
          m.set(y, z, true);
        }
        // Warshall closure over the fresh additions.
        for (Elem k = 0; k < target; ++k)
          for (Elem i = 0; i < target; ++i) {
            if (!m.get(i, k)) continue;
            for (Elem j = 0; j < target; ++j)
              if (m.get(k, j)) m.set(i, j, true);
          }

        if (m.get(x, y) || m.get(y, x)) continue;
        bool antisym = true;
        for (Elem i = 0; i < target && antisym; ++i)
          for (Elem j = i + 1; j < target && antisym; ++j)
            if (m.get(i, j) && m.get(j, i)) antisym = false;
        if (!antisym) continue;

        auto order = m.to_poset(target);
        if (!order.ok()) continue;
        Condition::Assign assign = p.assign();
        assign.resize(target, {Behavior::Isolated, target});
        auto cond = Condition::validate(std::move(order).value(), std::move(assign));
        if (!cond.ok()) continue;
        if (!extends(cond.value(), p)) continue;
        return std::pair{std::move(cond).value(), std::array{x, y, z}};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

Result<DiagonalResult> build_diagonal_poset(const Condition& p0,
                                            std::span<const OracleMachine> machines,
                                            std::uint32_t stages, Side side) {
  if (!p0.compatible_with(side))
    return make_error(Errc::WrongSide, {}, "p0 carries tags off the requested side");

  Condition p = p0;
  std::vector<DiagonalLogEntry> log;
  if (!machines.empty()) {
    for (std::uint32_t stage = 0; stage < stages; ++stage) {
      const std::size_t e = stage % machines.size();
      const std::uint32_t m = stage / static_cast<std::uint32_t>(machines.size()) + 1;
      DiagonalLogEntry entry{stage, e, m, false, false, std::nullopt, p.size()};

      if (auto w = find_diagonal_witnesses(p.order(), machines[e])) {
        entry.already_satisfied = true;
        entry.witnesses = w;
      } else if (auto hit = realize_pattern(p, machines[e], p.size() + m, side)) {
        p = hit->first;
        entry.adopted = true;
        entry.witnesses = hit->second;
        entry.size_after = p.size();
      }
      log.push_back(entry);
    }
  }

  DiagonalResult out{p.order(), p.annotation(side), std::move(log)};
  return out;
}

LachlanDecision lachlan_select(std::span<const LachlanOutcome> outcomes) {
  for (const auto& row : outcomes)
    if (!row.holds_on_c && !row.holds_on_a)
      return {LachlanDecision::Choice::Counterexample,
              std::pair{row.psi0, row.psi1}};

  bool all_c = std::all_of(outcomes.begin(), outcomes.end(),
                           [](const LachlanOutcome& r) { return r.holds_on_c; });
  if (all_c) return {LachlanDecision::Choice::UseC, std::nullopt};

  // Some first coordinate fails, so the disjunction elects A; any row whose
  // second coordinate fails pairs with it into an implied counterexample.
  const LachlanOutcome* c_fail = nullptr;
  for (const auto& row : outcomes)
    if (!row.holds_on_c) {
      c_fail = &row;
      break;
    }
  for (const auto& row : outcomes)
    if (!row.holds_on_a)
      return {LachlanDecision::Choice::Counterexample,
              std::pair{c_fail->psi0, row.psi1}};
  return {LachlanDecision::Choice::UseA, std::nullopt};
}

}  // namespace caclab
