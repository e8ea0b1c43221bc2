#pragma once

#include <array>
#include <cstdint>
#include <deque>
#include <vector>

#include "nsg/errors.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

/// Largest genus bound the enumerator accepts. Node bitmaps are fixed at 256
/// positions, which covers every window [0, c+m) along the tree because
/// c <= 2g and m <= g+1 give c+m <= 3g+2.
inline constexpr int kMaxEnumerableGenus = 84;

/// One vertex of the semigroup tree: a semigroup plus its Frobenius number.
/// Children remove one effective generator (a primitive exceeding the
/// Frobenius number, i.e. a primitive in [c, c+m)), raising the genus by one.
/// Stored as a trivially-copyable block so DFS stacks stay allocation-free.
struct TreeNode {
  static constexpr int kWords = 4;

  std::array<std::uint64_t, kWords> members;  // bit x = member, positions [0, 256)
  std::int32_t conductor = 0;
  std::int32_t multiplicity = 1;
  std::int32_t genus = 0;
  std::int32_t frobenius = -1;  // c - 1

  SemigroupView view() const { return {members.data(), conductor, multiplicity, genus}; }
  NumericalSemigroup to_semigroup() const;
  std::vector<int> gap_list() const;
  std::vector<int> effective_generators() const;

  bool operator==(const TreeNode& o) const {
    if (conductor != o.conductor || multiplicity != o.multiplicity || genus != o.genus) {
      return false;
    }
    // Equal windows and equal bits inside the window; tail bits are free.
    SemigroupView a = view(), b = o.view();
    for (int x = 0; x < a.window(); ++x) {
      if (a.contains(x) != b.contains(x)) return false;
    }
    return true;
  }
};

/// Decomposable / primitive masks of one node's window. Reused across nodes
/// by the enumeration loop.
struct NodeMasks {
  std::array<std::uint64_t, TreeNode::kWords> dec{};
  std::array<std::uint64_t, TreeNode::kWords> prim{};
};

/// The node for N, whose only effective generator is 1.
TreeNode root();

/// Fills masks.dec / masks.prim for the node's window.
void analyze_node(const TreeNode& n, NodeMasks& masks);

/// The child obtained by removing the effective generator x.
TreeNode child_of(const TreeNode& n, int x);

/// Pushes the children of n in decreasing removed-generator order, so a LIFO
/// stack expands them in increasing order.
void push_children(const TreeNode& n, const NodeMasks& masks, std::vector<TreeNode>& stack);

std::vector<TreeNode> children(const TreeNode& n);

/// A set of pairwise-disjoint pending subtrees plus the per-genus counts of
/// everything already expanded on the way to them.
struct Frontier {
  std::vector<TreeNode> pending;
  int genus_bound = 0;
  std::vector<std::uint64_t> counts;  // size genus_bound + 1
};

Frontier root_frontier(int genus_bound);

namespace detail {

inline void check_frobenius_bound(const TreeNode& n) {
  // Classical bound F <= 2g - 1; it sizes every window, so a violation is fatal.
  if (n.conductor > 2 * n.genus) {
    throw InternalInconsistency("Frobenius bound c - 1 <= 2g - 1 violated at genus " +
                                std::to_string(n.genus));
  }
}

inline void check_enumerable(int genus_bound) {
  if (genus_bound < 0) throw InvalidArgument("genus bound must be >= 0");
  if (genus_bound > kMaxEnumerableGenus) {
    throw BoundTooLarge("genus bound " + std::to_string(genus_bound) +
                        " exceeds the fixed node capacity (" +
                        std::to_string(kMaxEnumerableGenus) + ")");
  }
}

}  // namespace detail

/// Depth-first expansion of every pending subtree, bounded by
/// frontier.genus_bound. The visitor sees each node exactly once, after its
/// masks are computed; counts accumulate into frontier.counts.
template <class Visitor>
void drain_frontier(Frontier& frontier, Visitor&& visit) {
  detail::check_enumerable(frontier.genus_bound);
  frontier.counts.resize(frontier.genus_bound + 1, 0);
  std::vector<TreeNode> stack = std::move(frontier.pending);
  frontier.pending.clear();
  NodeMasks masks;
  while (!stack.empty()) {
    TreeNode n = stack.back();
    stack.pop_back();
    detail::check_frobenius_bound(n);
    analyze_node(n, masks);
    ++frontier.counts[n.genus];
    visit(static_cast<const TreeNode&>(n), static_cast<const NodeMasks&>(masks));
    if (n.genus < frontier.genus_bound) push_children(n, masks, stack);
  }
}

/// Visits every numerical semigroup of genus <= genus_bound exactly once and
/// returns the per-genus counts.
template <class Visitor>
std::vector<std::uint64_t> enumerate(int genus_bound, Visitor&& visit) {
  Frontier f = root_frontier(genus_bound);
  drain_frontier(f, [&](const TreeNode& n, const NodeMasks&) { visit(n); });
  return std::move(f.counts);
}

std::vector<std::uint64_t> enumerate_counts(int genus_bound);

/// Splits the pending work into k pairwise-disjoint frontiers, expanding
/// breadth-first as needed. Expanded nodes are counted into the first shard,
/// so the merged shard tallies equal the unsharded tallies exactly.
std::vector<Frontier> split(const Frontier& frontier, int k);

/// Independent per-genus census for cross-checking the tree: enumerates the
/// g-subsets of [1, 2g-1] and keeps those whose complement is additively
/// closed. Shares no logic with the tree walk. Guarded at genus_bound <= 12.
std::vector<std::uint64_t> brute_force_census(int genus_bound);
inline constexpr int kMaxCensusGenus = 12;

}  // namespace nsg
