#include "deplen/conllu.hpp"

namespace deplen {

std::optional<DepTree> strip_punct(const DepTree& tree, IngestReport& report) {
  if (!tree.has_labels()) return tree;
  const int n = tree.size();

  // A PUNCT node goes when its whole subtree is PUNCT; removing leaves one
  // pass at a time would reach the same fixed point.
  std::vector<bool> all_punct(n + 1);
  for (NodeId v = 1; v <= n; ++v) all_punct[v] = tree.label(v).upos == "PUNCT";
  const auto topo = tree.topological_order();
  for (auto it = topo.rbegin(); it != topo.rend(); ++it)
    if (const NodeId h = tree.parent(*it); h != 0 && !all_punct[*it])
      all_punct[h] = false;

  std::vector<int> new_id(n + 1, 0);
  int kept = 0;
  for (NodeId v = 1; v <= n; ++v) {
    if (all_punct[v]) {
      ++report.punct_dropped;
      continue;
    }
    new_id[v] = ++kept;
    if (tree.label(v).upos == "PUNCT") ++report.nonleaf_punct_kept;
  }
  if (kept == 0) return std::nullopt;
  if (kept == n) return tree;

  std::vector<int> heads;
  std::vector<TokenLabel> labels;
  heads.reserve(kept);
  labels.reserve(kept);
  for (NodeId v = 1; v <= n; ++v) {
    if (all_punct[v]) continue;
    heads.push_back(new_id[tree.parent(v)]);
    labels.push_back(tree.label(v));
  }
  return DepTree::from_heads(heads, std::move(labels));
}

}  // namespace deplen
