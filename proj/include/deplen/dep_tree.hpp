// Dependency trees, word orders, and the dependency length metric.
//
// Nodes are identified by 1-based ids 1..n, which double as their attested
// positions. Slot 0 of every per-node vector is unused.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace deplen {

using NodeId = int;

/// Word-level annotation carried along for output. Not used by any metric.
struct TokenLabel {
  std::string form;
  std::string upos;
  std::string deprel;

  bool operator==(const TokenLabel&) const = default;
};

/// Thrown when head references do not form a single rooted tree.
class TreeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A bijection from nodes 1..n to positions 1..n.
class Linearization {
 public:
  Linearization() = default;

  /// The attested order: node v sits at position v.
  static Linearization identity(int n);

  /// Builds from a word sequence: `order[i]` is the node at position i+1.
  /// Throws std::invalid_argument unless `order` is a permutation of 1..n.
  static Linearization from_order(std::span<const NodeId> order);

  int size() const { return static_cast<int>(pos_.size()) - 1; }
  int position(NodeId v) const { return pos_[v]; }

  /// Nodes listed by position.
  std::vector<NodeId> order() const;

  /// The mirror image: position p becomes n+1-p.
  Linearization reversed() const;

  bool operator==(const Linearization&) const = default;

 private:
  explicit Linearization(std::vector<int> pos) : pos_(std::move(pos)) {}

  std::vector<int> pos_{0};
};

/// A validated rooted dependency tree whose attested order is node id order.
class DepTree {
 public:
  DepTree() = default;

  /// `heads[i]` is the head of node i+1, 0 marking the root.
  /// Throws TreeError on zero or several roots, out-of-range heads,
  /// self-attachment, or cycles.
  static DepTree from_heads(std::span<const int> heads,
                            std::vector<TokenLabel> labels = {});

  int size() const { return static_cast<int>(parent_.size()) - 1; }
  NodeId root() const { return root_; }

  /// Head of `v`, or 0 for the root.
  NodeId parent(NodeId v) const { return parent_[v]; }

  /// Direct dependents of `v` in attested order.
  const std::vector<NodeId>& children(NodeId v) const { return children_[v]; }

  int arity(NodeId v) const { return static_cast<int>(children_[v].size()); }

  /// Head indices in CoNLL-U convention, one entry per node.
  std::vector<int> heads() const;

  bool has_labels() const { return !labels_.empty(); }
  const TokenLabel& label(NodeId v) const { return labels_[v - 1]; }
  const std::vector<TokenLabel>& labels() const { return labels_; }

  /// Nodes ordered so that every head precedes its dependents.
  std::vector<NodeId> topological_order() const;

  bool operator==(const DepTree&) const = default;

 private:
  std::vector<NodeId> parent_{0};
  std::vector<std::vector<NodeId>> children_{{}};
  std::vector<TokenLabel> labels_;
  NodeId root_ = 0;
};

/// Sum over arcs of the distance between head and dependent under `order`.
/// The root attachment contributes nothing.
/// Throws std::invalid_argument if `order` does not cover exactly the tree's nodes.
std::int64_t deplen(const DepTree& tree, const Linearization& order);

/// deplen under the attested order.
std::int64_t deplen(const DepTree& tree);

/// True iff every subtree occupies a contiguous span of positions.
bool is_projective(const DepTree& tree, const Linearization& order);

}  // namespace deplen
