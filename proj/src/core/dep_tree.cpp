#include "deplen/dep_tree.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace deplen {

Linearization Linearization::identity(int n) {
  std::vector<int> pos(n + 1);
  std::iota(pos.begin(), pos.end(), 0);
  return Linearization(std::move(pos));
}

Linearization Linearization::from_order(std::span<const NodeId> order) {
  const int n = static_cast<int>(order.size());
  std::vector<int> pos(n + 1, 0);
  for (int i = 0; i < n; ++i) {
    const NodeId v = order[i];
    if (v < 1 || v > n || pos[v] != 0)
      throw std::invalid_argument("word order is not a permutation of 1.." +
                                  std::to_string(n));
    pos[v] = i + 1;
  }
  return Linearization(std::move(pos));
}

std::vector<NodeId> Linearization::order() const {
  std::vector<NodeId> out(size());
  for (NodeId v = 1; v <= size(); ++v) out[pos_[v] - 1] = v;
  return out;
}

Linearization Linearization::reversed() const {
  std::vector<int> pos(pos_);
  const int n = size();
  for (NodeId v = 1; v <= n; ++v) pos[v] = n + 1 - pos_[v];
  return Linearization(std::move(pos));
}

DepTree DepTree::from_heads(std::span<const int> heads,
                            std::vector<TokenLabel> labels) {
  const int n = static_cast<int>(heads.size());
  if (n == 0) throw TreeError("empty tree");
  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    throw std::invalid_argument("label count does not match node count");

  DepTree t;
  t.parent_.assign(n + 1, 0);
  t.children_.assign(n + 1, {});
  for (NodeId v = 1; v <= n; ++v) {
    const int h = heads[v - 1];
    if (h < 0 || h > n)
      throw TreeError("token " + std::to_string(v) + ": head " +
                      std::to_string(h) + " out of range");
    if (h == v)
      throw TreeError("token " + std::to_string(v) + ": attached to itself");
    if (h == 0) {
      if (t.root_ != 0)
        throw TreeError("token " + std::to_string(v) +
                        ": second root (first is token " +
                        std::to_string(t.root_) + ")");
      t.root_ = v;
    } else {
      t.children_[h].push_back(v);
    }
    t.parent_[v] = h;
  }
  if (t.root_ == 0) throw TreeError("token 1: no root in sentence");

  // With exactly one root and n-1 arcs, the graph is a tree iff every node
  // reaches the root.
  const auto reached = t.topological_order();
  if (static_cast<int>(reached.size()) != n) {
    std::vector<bool> seen(n + 1, false);
    for (NodeId v : reached) seen[v] = true;
    NodeId first = 1;
    while (seen[first]) ++first;
    throw TreeError("token " + std::to_string(first) +
                    ": on a cycle or cut off from the root");
  }
  t.labels_ = std::move(labels);
  return t;
}

std::vector<int> DepTree::heads() const {
  return std::vector<int>(parent_.begin() + 1, parent_.end());
}

std::vector<NodeId> DepTree::topological_order() const {
  std::vector<NodeId> out;
  if (root_ == 0) return out;
  out.reserve(size());
  out.push_back(root_);
  for (std::size_t i = 0; i < out.size(); ++i)
    for (NodeId c : children_[out[i]]) out.push_back(c);
  return out;
}

namespace {

void check_order(const DepTree& tree, const Linearization& order) {
  if (order.size() != tree.size())
    throw std::invalid_argument("word order covers " +
                                std::to_string(order.size()) +
                                " nodes, tree has " +
                                std::to_string(tree.size()));
}

}  // namespace

std::int64_t deplen(const DepTree& tree, const Linearization& order) {
  check_order(tree, order);
  std::int64_t total = 0;
  for (NodeId v = 1; v <= tree.size(); ++v) {
    const NodeId h = tree.parent(v);
    if (h != 0) total += std::abs(order.position(h) - order.position(v));
  }
  return total;
}

std::int64_t deplen(const DepTree& tree) {
  return deplen(tree, Linearization::identity(tree.size()));
}

bool is_projective(const DepTree& tree, const Linearization& order) {
  check_order(tree, order);
  const int n = tree.size();
  std::vector<int> lo(n + 1), hi(n + 1), count(n + 1, 1);
  for (NodeId v = 1; v <= n; ++v) lo[v] = hi[v] = order.position(v);

  const auto topo = tree.topological_order();
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    const NodeId v = *it;
    if (hi[v] - lo[v] + 1 != count[v]) return false;
    const NodeId h = tree.parent(v);
    if (h == 0) continue;
    lo[h] = std::min(lo[h], lo[v]);
    hi[h] = std::max(hi[h], hi[v]);
    count[h] += count[v];
  }
  return true;
}

}  // namespace deplen
