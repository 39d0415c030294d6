#include <stdexcept>
#include <utility>

#include "deplen/baselines.hpp"

namespace deplen {

namespace {

// Linear-time Prufer decoding into an undirected edge list on 1..n.
std::vector<std::pair<NodeId, NodeId>> decode_prufer(
    const std::vector<NodeId>& code, int n) {
  std::vector<int> degree(n + 1, 1);
  for (NodeId v : code) ++degree[v];

  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(n - 1);
  NodeId ptr = 1;
  while (degree[ptr] != 1) ++ptr;
  NodeId leaf = ptr;
  for (NodeId v : code) {
    edges.emplace_back(leaf, v);
    if (--degree[v] == 1 && v < ptr) {
      leaf = v;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(leaf, n);
  return edges;
}

}  // namespace

DepTree sample_random_tree(int n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("random tree needs at least one node");

  std::vector<std::vector<NodeId>> adj(n + 1);
  if (n >= 2) {
    std::vector<NodeId> code(n >= 3 ? n - 2 : 0);
    for (NodeId& v : code) v = static_cast<NodeId>(rng.below(n)) + 1;
    for (auto [a, b] : decode_prufer(code, n)) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
  }

  const NodeId root = static_cast<NodeId>(rng.below(n)) + 1;
  std::vector<int> heads(n, -1);
  heads[root - 1] = 0;
  std::vector<NodeId> frontier{root};
  while (!frontier.empty()) {
    const NodeId v = frontier.back();
    frontier.pop_back();
    for (NodeId w : adj[v]) {
      if (heads[w - 1] != -1) continue;
      heads[w - 1] = v;
      frontier.push_back(w);
    }
  }
  return DepTree::from_heads(heads);
}

}  // namespace deplen
