#pragma once

#include <cstdint>
#include <optional>
#include <tuple>
#include <vector>

#include "errors.hpp"
#include "poset.hpp"

namespace caclab {

enum class Behavior : std::uint8_t { Small, Large, Isolated };
enum class StableType : std::uint8_t { SmallType, LargeType };

char behavior_letter(Behavior b);
std::optional<Behavior> behavior_from_letter(char c);
const char* stable_type_name(StableType t);

/// Per-element limit behavior: a tag in {S, L, I} plus the stabilization
/// point from which on the behavior holds.
struct BehaviorEntry {
  Elem element;
  Behavior tag;
  std::uint64_t point;
};

/// Finite association element -> (tag, stabilization point) with an overall
/// small/large type. A small-type annotation carries no L, a large-type no S.
class StableAnnotation {
 public:
  static Result<StableAnnotation> make(std::vector<BehaviorEntry> entries,
                                       StableType type);

  const std::vector<BehaviorEntry>& entries() const { return entries_; }
  StableType type_tag() const { return type_; }
  std::optional<BehaviorEntry> lookup(Elem x) const;

  /// Annotation for the dual order: swaps S and L, keeps I and all points.
  StableAnnotation flipped() const;

  bool operator==(const StableAnnotation& o) const {
    auto key = [](const BehaviorEntry& e) {
      return std::tuple(e.element, e.tag, e.point);
    };
    if (type_ != o.type_ || entries_.size() != o.entries_.size()) return false;
    for (std::size_t i = 0; i < entries_.size(); ++i)
      if (key(entries_[i]) != key(o.entries_[i])) return false;
    return true;
  }

 private:
  std::vector<BehaviorEntry> entries_;  // sorted by element
  StableType type_ = StableType::SmallType;
};

/// Accepts iff the annotation covers the universe and every element behaves
/// as tagged from its stabilization point on:
///   S: x <=_P y for all y in the universe with y >= t
///   L: y <=_P x for all y >= t
///   I: x |_P y for all y >= t with y != x
/// Rejections report the least violating (x, y) in lex order.
Verdict classify_stability(const FinitePoset& p, const StableAnnotation& ann);

}  // namespace caclab
