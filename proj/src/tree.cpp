#include "tree.hpp"

#include <algorithm>
#include <map>

namespace caclab {

namespace {

ElemSet merge_sets(std::span<const Elem> a, std::span<const Elem> b) {
  ElemSet out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

bool ExtensionTree::range_blocked(std::span<const Elem> range) const {
  const std::size_t k = range.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    ElemSet f;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (std::uint64_t{1} << i)) f.push_back(range[i]);
    ElemSet oracle = merge_sets(params_.e_set, f);
    for (Elem w = params_.threshold; w < params_.w_cap; ++w)
      if (evaluate(delta_, oracle, w) == EvalOutcome::One) return true;
  }
  return false;
}

ExtensionTree ExtensionTree::build(ElemSet e_set, ElemSet i_set,
                                   OracleMachine delta, Elem threshold,
                                   Elem w_cap) {
  ExtensionTree t;
  std::sort(e_set.begin(), e_set.end());
  e_set.erase(std::unique(e_set.begin(), e_set.end()), e_set.end());
  std::sort(i_set.begin(), i_set.end());
  i_set.erase(std::unique(i_set.begin(), i_set.end()), i_set.end());
  t.params_ = {std::move(e_set), std::move(i_set), threshold, w_cap};
  t.delta_ = std::move(delta);

  t.nodes_.push_back(Node{});  // lambda
  // Depth-first growth; a node gets children exactly when the expansion
  // test passes on its own range, one per larger point of I.
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    std::size_t cur = stack.back();
    stack.pop_back();
    std::vector<Elem> alpha = t.nodes_[cur].alpha;
    t.nodes_[cur].terminal = t.range_blocked(alpha);
    if (t.nodes_[cur].terminal) continue;
    for (Elem x : t.params_.i_set) {
      if (!alpha.empty() && x <= alpha.back()) continue;
      Node child;
      child.alpha = alpha;
      child.alpha.push_back(x);
      child.parent = static_cast<int>(cur);
      t.nodes_.push_back(std::move(child));
      t.nodes_[cur].children.push_back(t.nodes_.size() - 1);
    }
    // Re-push children in reverse so depth-first order visits ascending x.
    for (auto it = t.nodes_[cur].children.rbegin();
         it != t.nodes_[cur].children.rend(); ++it)
      stack.push_back(*it);
  }

  // Renumber into depth-first preorder so parents precede children and
  // sibling order is ascending; keeps downstream scans lexicographic.
  std::vector<std::size_t> order;
  order.reserve(t.nodes_.size());
  std::vector<std::size_t> dfs{0};
  while (!dfs.empty()) {
    std::size_t cur = dfs.back();
    dfs.pop_back();
    order.push_back(cur);
    for (auto it = t.nodes_[cur].children.rbegin();
         it != t.nodes_[cur].children.rend(); ++it)
      dfs.push_back(*it);
  }
  std::vector<std::size_t> new_index(t.nodes_.size());
  for (std::size_t i = 0; i < order.size(); ++i) new_index[order[i]] = i;
  std::vector<Node> renumbered(t.nodes_.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    Node n = std::move(t.nodes_[order[i]]);
    if (n.parent >= 0) n.parent = static_cast<int>(new_index[static_cast<std::size_t>(n.parent)]);
    for (auto& c : n.children) c = new_index[c];
    renumbered[i] = std::move(n);
  }
  t.nodes_ = std::move(renumbered);
  return t;
}

bool ExtensionTree::member_by_rule(std::span<const Elem> alpha) const {
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (i > 0 && alpha[i - 1] >= alpha[i]) return false;
    if (!std::binary_search(params_.i_set.begin(), params_.i_set.end(),
                            alpha[i]))
      return false;
  }
  if (alpha.empty()) return true;
  return !range_blocked(alpha.subspan(0, alpha.size() - 1));
}

std::optional<std::pair<ElemSet, Elem>> ExtensionTree::terminal_witness(
    std::size_t node) const {
  const auto& range = nodes_[node].alpha;
  const std::size_t k = range.size();
  for (Elem w = params_.threshold; w < params_.w_cap; ++w)
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
      ElemSet f;
      for (std::size_t i = 0; i < k; ++i)
        if (mask & (std::uint64_t{1} << i)) f.push_back(range[i]);
      if (evaluate(delta_, merge_sets(params_.e_set, f), w) == EvalOutcome::One)
        return std::pair{f, w};
    }
  return std::nullopt;
}

std::optional<std::size_t> ExtensionTree::find(std::span<const Elem> alpha) const {
  std::size_t cur = 0;
  for (Elem x : alpha) {
    bool found = false;
    for (std::size_t c : nodes_[cur].children)
      if (nodes_[c].alpha.back() == x) {
        cur = c;
        found = true;
        break;
      }
    if (!found) return std::nullopt;
  }
  return cur;
}

Labeling label_tree(const ExtensionTree& t, std::uint64_t kappa) {
  Labeling lb;
  lb.kappa = kappa;
  lb.labels.assign(t.size(), kInfiniteLabel);
  // Children carry larger indices in preorder, so a reverse sweep is
  // bottom-up.
  for (std::size_t i = t.size(); i-- > 0;) {
    const auto& node = t.nodes()[i];
    if (node.terminal) {
      auto w = t.terminal_witness(i);
      lb.labels[i] = w->second;
      continue;
    }
    std::map<std::uint64_t, std::uint64_t> counts;
    for (std::size_t c : node.children)
      if (lb.labels[c] != kInfiniteLabel) ++counts[lb.labels[c]];
    for (const auto& [w, count] : counts)
      if (count >= kappa) {
        lb.labels[i] = w;
        break;
      }
  }
  return lb;
}

LabeledSubtree labeled_subtree(const ExtensionTree& t, const Labeling& lb) {
  LabeledSubtree sub;
  sub.member.assign(t.size(), false);
  sub.member[t.root()] = true;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!sub.member[i]) continue;
    const auto& node = t.nodes()[i];
    if (lb.finite(i)) {
      for (std::size_t c : node.children)
        if (lb.at(c) == lb.at(i)) sub.member[c] = true;
      continue;
    }
    std::vector<std::size_t> inf_children;
    for (std::size_t c : node.children)
      if (!lb.finite(c)) inf_children.push_back(c);
    if (inf_children.size() >= lb.kappa) {
      for (std::size_t c : inf_children) sub.member[c] = true;
      continue;
    }
    // Distinct finite labels, least new point per label.
    std::map<std::uint64_t, std::size_t> least_per_label;
    for (std::size_t c : node.children) {
      if (!lb.finite(c)) continue;
      auto [it, inserted] = least_per_label.emplace(lb.at(c), c);
      if (!inserted && t.nodes()[c].alpha.back() < t.nodes()[it->second].alpha.back())
        it->second = c;
    }
    for (const auto& [w, c] : least_per_label) sub.member[c] = true;
  }
  return sub;
}

TreeLemmaReport check_tree_lemma(const ExtensionTree& t, const Labeling&) {
  TreeLemmaReport report;
  report.item1_note =
      "infinite paths are not applicable at finite scale; childless "
      "non-terminals are checked against the path conclusion instead";
  const auto& i_set = t.params().i_set;

  for (std::size_t i = 0; i < t.size(); ++i) {
    ++report.nodes_checked;
    const auto& node = t.nodes()[i];
    const bool blocked = t.range_blocked(node.alpha);  // independent re-run
    if (blocked != node.terminal) report.item2 = false;  // builder drifted

    if (!blocked) {
      // Item 2: every larger point of I extends the node inside T.
      for (Elem x : i_set) {
        if (!node.alpha.empty() && x <= node.alpha.back()) continue;
        std::vector<Elem> child = node.alpha;
        child.push_back(x);
        if (!t.find(child) || !t.member_by_rule(child)) report.item2 = false;
      }
      // Item 1 surrogate: a childless non-terminal is a maximal string, and
      // the passed expansion test is exactly the path conclusion over its
      // own range.
      if (node.children.empty()) report.item1_surrogate &= !blocked;
    } else {
      if (!t.terminal_witness(i)) report.item3 = false;
    }
  }

  bool root_witness = false;
  for (Elem w = t.params().threshold; w < t.params().w_cap && !root_witness; ++w)
    if (evaluate(t.delta(), t.params().e_set, w) == EvalOutcome::One)
      root_witness = true;
  report.item4 = root_witness == (t.size() == 1);
  return report;
}

std::optional<TerminalHit> find_terminal_with_label(
    const ExtensionTree& t, const LabeledSubtree& sub, const Labeling& lb,
    const std::function<bool(const ElemSet&, Elem)>& predicate) {
  // Preorder index order is depth-first lexicographic order.
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!sub.contains(i) || !t.nodes()[i].terminal) continue;
    Elem w = lb.at(i);
    const auto& range = t.nodes()[i].alpha;
    // Least F in subset-mask order attaining the label.
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << range.size());
         ++mask) {
      ElemSet f;
      for (std::size_t b = 0; b < range.size(); ++b)
        if (mask & (std::uint64_t{1} << b)) f.push_back(range[b]);
      ElemSet oracle = merge_sets(t.params().e_set, f);
      if (evaluate(t.delta(), oracle, w) == EvalOutcome::One) {
        if (predicate(f, w)) return TerminalHit{range, f, w};
        break;
      }
    }
  }
  return std::nullopt;
}

}  // namespace caclab
