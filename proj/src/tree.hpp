#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"
#include "oracle.hpp"

namespace caclab {

/// Label value standing for "infinity".
inline constexpr std::uint64_t kInfiniteLabel =
    std::numeric_limits<std::uint64_t>::max();

struct TreeParams {
  ElemSet e_set;   // E of the Mathias condition
  ElemSet i_set;   // I, the reservoir the strings draw from
  Elem threshold;  // n, the least input the functional is probed at
  Elem w_cap;      // finite truncation of the "for all w >= n" quantifier
};

/// The tree of strictly increasing strings over I whose proper prefixes
/// never let the functional output 1 on E union a subset of their range at
/// or beyond the threshold. Finite because I is.
class ExtensionTree {
 public:
  struct Node {
    std::vector<Elem> alpha;  // strictly increasing, range inside I
    int parent = -1;
    std::vector<std::size_t> children;  // indices, ascending in the new point
    bool terminal = false;  // the expansion test fails at this node
  };

  static ExtensionTree build(ElemSet e_set, ElemSet i_set,
                             OracleMachine delta, Elem threshold, Elem w_cap);

  const std::vector<Node>& nodes() const { return nodes_; }
  const TreeParams& params() const { return params_; }
  const OracleMachine& delta() const { return delta_; }

  std::size_t root() const { return 0; }
  std::size_t size() const { return nodes_.size(); }

  /// The membership rule evaluated from scratch: alpha strictly increasing,
  /// range inside I, and no F below the parent's range yields output 1.
  bool member_by_rule(std::span<const Elem> alpha) const;

  /// Whether the expansion test fails on this range: some F inside it and
  /// some w in [threshold, w_cap) give output 1.
  bool range_blocked(std::span<const Elem> range) const;

  /// Least (w, then F in subset-mask order) with output 1 over the node's
  /// range; present exactly on terminal nodes.
  std::optional<std::pair<ElemSet, Elem>> terminal_witness(std::size_t node) const;

  std::optional<std::size_t> find(std::span<const Elem> alpha) const;

 private:
  TreeParams params_;
  OracleMachine delta_{OracleMachine::constant_one()};
  std::vector<Node> nodes_;
};

/// Node labels: terminals carry their least witness w; inner nodes carry
/// the least w shared by at least kappa children, else infinity. kappa is
/// the finite stand-in for "infinitely many".
struct Labeling {
  std::vector<std::uint64_t> labels;  // per node index
  std::uint64_t kappa = 2;

  std::uint64_t at(std::size_t node) const { return labels[node]; }
  bool finite(std::size_t node) const { return labels[node] != kInfiniteLabel; }
};

Labeling label_tree(const ExtensionTree& t, std::uint64_t kappa);

/// The labeled subtree: membership flags over the tree's nodes.
struct LabeledSubtree {
  std::vector<bool> member;
  bool contains(std::size_t node) const { return member[node]; }
};

LabeledSubtree labeled_subtree(const ExtensionTree& t, const Labeling& lb);

struct TreeLemmaReport {
  bool item2 = true;  // non-terminals extend by every larger point of I
  bool item3 = true;  // terminals carry a witness
  bool item4 = true;  // immediate witness on E iff the tree is just the root
  bool item1_surrogate = true;  // childless non-terminals satisfy the path conclusion
  std::string item1_note;
  std::size_t nodes_checked = 0;
  bool all_ok() const { return item2 && item3 && item4 && item1_surrogate; }
};

/// Re-verifies the structural lemma against the membership rule evaluated
/// from scratch; independent of how the tree was grown.
TreeLemmaReport check_tree_lemma(const ExtensionTree& t, const Labeling& lb);

struct TerminalHit {
  std::vector<Elem> alpha;
  ElemSet f_set;
  Elem w;
};

/// Depth-first, lexicographically least terminal of the labeled subtree
/// whose least witness (F, w) the predicate accepts.
std::optional<TerminalHit> find_terminal_with_label(
    const ExtensionTree& t, const LabeledSubtree& sub, const Labeling& lb,
    const std::function<bool(const ElemSet&, Elem)>& predicate);

}  // namespace caclab
