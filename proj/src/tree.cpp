#include "nsg/tree.hpp"

#include <algorithm>

namespace nsg {

TreeNode root() {
  TreeNode n;
  n.members.fill(~std::uint64_t{0});
  return n;
}

NumericalSemigroup TreeNode::to_semigroup() const {
  std::vector<long long> gl;
  for (int x : gap_list()) gl.push_back(x);
  return NumericalSemigroup::from_gaps(gl);
}

std::vector<int> TreeNode::gap_list() const {
  std::vector<int> out;
  out.reserve(genus);
  for (int x = 1; x < conductor; ++x) {
    if (!bits::test(members.data(), x)) out.push_back(x);
  }
  return out;
}

void analyze_node(const TreeNode& n, NodeMasks& masks) {
  const SemigroupView v = n.view();
  decomposable_mask(v, masks.dec.data());
  primitive_mask(v, masks.dec.data(), masks.prim.data());
}

std::vector<int> TreeNode::effective_generators() const {
  if (conductor == 0) return {1};
  NodeMasks masks;
  analyze_node(*this, masks);
  std::vector<int> out;
  const int win = conductor + multiplicity;
  for (int x = bits::next_set(masks.prim.data(), conductor, win); x != -1;
       x = bits::next_set(masks.prim.data(), x + 1, win)) {
    out.push_back(x);
  }
  return out;
}

TreeNode child_of(const TreeNode& n, int x) {
  TreeNode c = n;
  bits::clear(c.members.data(), x);
  c.conductor = x + 1;
  c.frobenius = x;
  c.genus = n.genus + 1;
  if (x == n.multiplicity) {
    c.multiplicity = bits::next_set(c.members.data(), x + 1, 256);
  }
  return c;
}

void push_children(const TreeNode& n, const NodeMasks& masks, std::vector<TreeNode>& stack) {
  if (n.conductor == 0) {
    stack.push_back(child_of(n, 1));
    return;
  }
  // Effective generators are the primitives in [c, c+m). Push in decreasing
  // order so the LIFO stack pops them in increasing order.
  const int win = n.conductor + n.multiplicity;
  int gens[kMaxEnumerableGenus + 2];  // |P_q| <= m <= g+1
  int count = 0;
  for (int x = bits::next_set(masks.prim.data(), n.conductor, win); x != -1;
       x = bits::next_set(masks.prim.data(), x + 1, win)) {
    gens[count++] = x;
  }
  for (int i = count - 1; i >= 0; --i) stack.push_back(child_of(n, gens[i]));
}

std::vector<TreeNode> children(const TreeNode& n) {
  std::vector<TreeNode> out;
  for (int x : n.effective_generators()) out.push_back(child_of(n, x));
  return out;
}

Frontier root_frontier(int genus_bound) {
  detail::check_enumerable(genus_bound);
  Frontier f;
  f.genus_bound = genus_bound;
  f.counts.assign(genus_bound + 1, 0);
  f.pending.push_back(root());
  return f;
}

std::vector<std::uint64_t> enumerate_counts(int genus_bound) {
  return enumerate(genus_bound, [](const TreeNode&) {});
}

std::vector<Frontier> split(const Frontier& frontier, int k) {
  if (k < 1) throw InvalidArgument("shard count must be >= 1");
  detail::check_enumerable(frontier.genus_bound);
  if (k == 1) return {frontier};

  constexpr std::size_t kChunkPerShard = 32;
  const std::size_t target = static_cast<std::size_t>(k) * kChunkPerShard;

  std::deque<TreeNode> queue(frontier.pending.begin(), frontier.pending.end());
  std::vector<std::uint64_t> base = frontier.counts;
  base.resize(frontier.genus_bound + 1, 0);

  NodeMasks masks;
  while (!queue.empty() && queue.size() < target) {
    TreeNode n = queue.front();
    queue.pop_front();
    detail::check_frobenius_bound(n);
    ++base[n.genus];
    if (n.genus < frontier.genus_bound) {
      analyze_node(n, masks);
      std::vector<TreeNode> stack;
      push_children(n, masks, stack);
      // push_children emits in reverse; restore increasing order for BFS.
      for (auto it = stack.rbegin(); it != stack.rend(); ++it) queue.push_back(*it);
    }
  }

  std::vector<Frontier> shards(k);
  for (int i = 0; i < k; ++i) {
    shards[i].genus_bound = frontier.genus_bound;
    shards[i].counts.assign(frontier.genus_bound + 1, 0);
  }
  shards[0].counts = std::move(base);
  std::size_t idx = 0;
  for (const TreeNode& n : queue) shards[idx++ % k].pending.push_back(n);
  return shards;
}

std::vector<std::uint64_t> brute_force_census(int genus_bound) {
  if (genus_bound < 0) throw InvalidArgument("genus bound must be >= 0");
  if (genus_bound > kMaxCensusGenus) {
    throw BoundTooLarge("brute-force census is guarded at genus <= " +
                        std::to_string(kMaxCensusGenus));
  }
  std::vector<std::uint64_t> counts(genus_bound + 1, 0);
  counts[0] = 1;
  for (int g = 1; g <= genus_bound; ++g) {
    // Gap sets live inside [1, 2g-1]; iterate the g-subsets with Gosper's hack
    // over bit positions 0..2g-2 (position p encodes the gap p+1).
    const int span = 2 * g - 1;
    std::uint64_t subset = (std::uint64_t{1} << g) - 1;
    const std::uint64_t end = std::uint64_t{1} << span;
    std::uint64_t found = 0;
    while (subset < end) {
      const std::uint64_t gap_mask = subset << 1;  // bit z = "z is a gap"
      // Members of [0, 2g): everything not a gap. Closed iff no member pair
      // sums to a gap.
      const std::uint64_t member_mask = ~gap_mask & ((std::uint64_t{1} << (span + 1)) - 1);
      const std::uint64_t star = member_mask & ~std::uint64_t{1};
      bool closed = true;
      for (int x = 1; 2 * x <= span; ++x) {
        if (!((star >> x) & 1)) continue;
        if ((star << x) & gap_mask) {
          closed = false;
          break;
        }
      }
      if (closed) ++found;
      // Gosper: next subset with the same popcount.
      const std::uint64_t lo = subset & (~subset + 1);
      const std::uint64_t left = subset + lo;
      subset = left | (((subset ^ left) >> 2) / lo);
    }
    counts[g] = found;
  }
  return counts;
}

}  // namespace nsg
