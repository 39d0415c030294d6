#include <numeric>
#include <stdexcept>

#include "deplen/baselines.hpp"

namespace deplen {

namespace {

constexpr std::array<std::string_view, 4> kNames = {
    "random-tree", "free", "projective", "head-fixed"};

void emit_projective(const DepTree& tree, NodeId v, Rng& rng,
                     std::vector<NodeId>& out) {
  std::vector<NodeId> items(tree.children(v));
  items.push_back(v);
  rng.shuffle(std::span(items));
  for (NodeId item : items) {
    if (item == v)
      out.push_back(v);
    else
      emit_projective(tree, item, rng, out);
  }
}

void emit_head_fixed(const DepTree& tree, NodeId v, Rng& rng,
                     std::vector<NodeId>& out) {
  std::vector<NodeId> left, right;
  for (NodeId c : tree.children(v)) (c < v ? left : right).push_back(c);
  rng.shuffle(std::span(left));
  rng.shuffle(std::span(right));
  for (NodeId c : left) emit_head_fixed(tree, c, rng, out);
  out.push_back(v);
  for (NodeId c : right) emit_head_fixed(tree, c, rng, out);
}

}  // namespace

std::string_view to_string(BaselineKind kind) {
  return kNames[static_cast<std::size_t>(kind)];
}

std::optional<BaselineKind> parse_baseline(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i)
    if (kNames[i] == name) return static_cast<BaselineKind>(i);
  return std::nullopt;
}

Linearization sample_free(const DepTree& tree, Rng& rng) {
  std::vector<NodeId> order(tree.size());
  std::iota(order.begin(), order.end(), 1);
  rng.shuffle(std::span(order));
  return Linearization::from_order(order);
}

Linearization sample_projective(const DepTree& tree, Rng& rng) {
  std::vector<NodeId> order;
  order.reserve(tree.size());
  emit_projective(tree, tree.root(), rng, order);
  return Linearization::from_order(order);
}

Linearization sample_head_fixed(const DepTree& tree, Rng& rng) {
  std::vector<NodeId> order;
  order.reserve(tree.size());
  emit_head_fixed(tree, tree.root(), rng, order);
  return Linearization::from_order(order);
}

std::int64_t sample_deplen(BaselineKind kind, const DepTree& tree, Rng& rng) {
  switch (kind) {
    case BaselineKind::RandomTree:
      return deplen(sample_random_tree(tree.size(), rng));
    case BaselineKind::FreeNonprojective:
      return deplen(tree, sample_free(tree, rng));
    case BaselineKind::Projective:
      return deplen(tree, sample_projective(tree, rng));
    case BaselineKind::HeadFixedProjective:
      return deplen(tree, sample_head_fixed(tree, rng));
  }
  throw std::logic_error("unknown baseline kind");
}

}  // namespace deplen
