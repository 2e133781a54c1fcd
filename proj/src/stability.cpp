#include "stability.hpp"

#include <algorithm>

namespace caclab {

char behavior_letter(Behavior b) {
  switch (b) {
    case Behavior::Small: return 'S';
    case Behavior::Large: return 'L';
    case Behavior::Isolated: return 'I';
  }
  return '?';
}

std::optional<Behavior> behavior_from_letter(char c) {
  switch (c) {
    case 'S': return Behavior::Small;
    case 'L': return Behavior::Large;
    case 'I': return Behavior::Isolated;
    default: return std::nullopt;
  }
}

const char* stable_type_name(StableType t) {
  return t == StableType::SmallType ? "small-type" : "large-type";
}

Result<StableAnnotation> StableAnnotation::make(
    std::vector<BehaviorEntry> entries, StableType type) {
  std::sort(entries.begin(), entries.end(),
            [](const BehaviorEntry& a, const BehaviorEntry& b) {
              return a.element < b.element;
            });
  for (std::size_t i = 1; i < entries.size(); ++i)
    if (entries[i - 1].element == entries[i].element)
      return make_error(Errc::AnnotationIncomplete, {entries[i].element},
                        "duplicate behavior entry");
  for (const auto& e : entries) {
    if (type == StableType::SmallType && e.tag == Behavior::Large)
      return make_error(Errc::TypeMismatch, {e.element},
                        "L tag in a small-type annotation");
    if (type == StableType::LargeType && e.tag == Behavior::Small)
      return make_error(Errc::TypeMismatch, {e.element},
                        "S tag in a large-type annotation");
  }
  StableAnnotation a;
  a.entries_ = std::move(entries);
  a.type_ = type;
  return a;
}

std::optional<BehaviorEntry> StableAnnotation::lookup(Elem x) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), x,
                             [](const BehaviorEntry& e, Elem v) {
                               return e.element < v;
                             });
  if (it == entries_.end() || it->element != x) return std::nullopt;
  return *it;
}

StableAnnotation StableAnnotation::flipped() const {
  StableAnnotation out;
  out.entries_ = entries_;
  for (auto& e : out.entries_) {
    if (e.tag == Behavior::Small) e.tag = Behavior::Large;
    else if (e.tag == Behavior::Large) e.tag = Behavior::Small;
  }
  out.type_ = type_ == StableType::SmallType ? StableType::LargeType
                                             : StableType::SmallType;
  return out;
}

Verdict classify_stability(const FinitePoset& p, const StableAnnotation& ann) {
  for (Elem x : p.universe())
    if (!ann.lookup(x)) return Verdict::reject(Errc::AnnotationIncomplete, {x});

  for (const auto& e : ann.entries()) {
    if (!p.contains(e.element))
      return Verdict::reject(Errc::ForeignElement, {e.element});
    if (ann.type_tag() == StableType::SmallType && e.tag == Behavior::Large)
      return Verdict::reject(Errc::TypeMismatch, {e.element});
    if (ann.type_tag() == StableType::LargeType && e.tag == Behavior::Small)
      return Verdict::reject(Errc::TypeMismatch, {e.element});
  }

  // Least violating (x, y): entries are sorted by element, universe ascending.
  for (const auto& e : ann.entries()) {
    for (Elem y : p.universe()) {
      if (y < e.point) continue;
      switch (e.tag) {
        case Behavior::Small:
          if (!p.leq(e.element, y))
            return Verdict::reject(Errc::BehaviorViolation, {e.element, y});
          break;
        case Behavior::Large:
          if (!p.leq(y, e.element))
            return Verdict::reject(Errc::BehaviorViolation, {e.element, y});
          break;
        case Behavior::Isolated:
          if (y != e.element && p.comparable(e.element, y))
            return Verdict::reject(Errc::BehaviorViolation, {e.element, y});
          break;
      }
    }
  }
  return Verdict::accept();
}

}  // namespace caclab
