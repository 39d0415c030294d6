#include "deplen/projective.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace deplen {

namespace {

void check_cap(const DepTree& tree, int cap) {
  if (tree.size() > cap)
    throw CapExceeded("sentence of length " + std::to_string(tree.size()) +
                      " exceeds enumeration cap " + std::to_string(cap));
}

// Depth-first generator. Each node's block is a sequence of items: the node
// itself or the block of one of its dependents. Dependent blocks are expanded
// recursively, with the rest of the parent's item list as continuation.
class BlockEnumerator {
 public:
  BlockEnumerator(const DepTree& tree, bool head_fixed, const OrderVisitor& visit)
      : tree_(tree), head_fixed_(head_fixed), visit_(visit) {
    out_.reserve(tree.size());
  }

  void run() {
    arrange(tree_.root(), [this] { visit_(Linearization::from_order(out_)); });
  }

 private:
  using Continuation = std::function<void()>;

  void arrange(NodeId v, const Continuation& done) {
    const auto& kids = tree_.children(v);
    if (!head_fixed_) {
      std::vector<NodeId> items(kids);
      items.push_back(v);
      std::sort(items.begin(), items.end());
      do {
        place(v, items, 0, done);
      } while (std::next_permutation(items.begin(), items.end()));
      return;
    }
    std::vector<NodeId> left, right;
    for (NodeId c : kids) (c < v ? left : right).push_back(c);
    std::vector<NodeId> items;
    do {
      do {
        items = left;
        items.push_back(v);
        items.insert(items.end(), right.begin(), right.end());
        place(v, items, 0, done);
      } while (std::next_permutation(right.begin(), right.end()));
    } while (std::next_permutation(left.begin(), left.end()));
  }

  void place(NodeId v, const std::vector<NodeId>& items, std::size_t k,
             const Continuation& done) {
    if (k == items.size()) {
      done();
      return;
    }
    const NodeId item = items[k];
    if (item == v) {
      out_.push_back(v);
      place(v, items, k + 1, done);
      out_.pop_back();
    } else {
      arrange(item, [&] { place(v, items, k + 1, done); });
    }
  }

  const DepTree& tree_;
  bool head_fixed_;
  const OrderVisitor& visit_;
  std::vector<NodeId> out_;
};

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (b != 0 && a > std::numeric_limits<std::uint64_t>::max() / b)
    throw std::overflow_error("sample space size exceeds 2^64");
  return a * b;
}

std::uint64_t factorial(int k) {
  std::uint64_t f = 1;
  for (int i = 2; i <= k; ++i) f = checked_mul(f, i);
  return f;
}

ExactSpace mean_over(const DepTree& tree,
                     void (*each)(const DepTree&, const OrderVisitor&, int),
                     int cap) {
  std::uint64_t count = 0;
  std::int64_t sum = 0;
  each(tree, [&](const Linearization& lin) {
    ++count;
    sum += deplen(tree, lin);
  }, cap);
  return {count, count ? static_cast<double>(sum) / count : 0.0};
}

}  // namespace

void for_each_projective(const DepTree& tree, const OrderVisitor& visit, int cap) {
  check_cap(tree, cap);
  BlockEnumerator(tree, false, visit).run();
}

void for_each_head_fixed(const DepTree& tree, const OrderVisitor& visit, int cap) {
  check_cap(tree, cap);
  BlockEnumerator(tree, true, visit).run();
}

std::vector<Linearization> enumerate_projective(const DepTree& tree, int cap) {
  std::vector<Linearization> out;
  for_each_projective(tree, [&](const Linearization& lin) { out.push_back(lin); }, cap);
  return out;
}

std::uint64_t count_projective(const DepTree& tree) {
  std::uint64_t total = 1;
  for (NodeId v = 1; v <= tree.size(); ++v)
    total = checked_mul(total, factorial(tree.arity(v) + 1));
  return total;
}

std::uint64_t count_head_fixed(const DepTree& tree) {
  std::uint64_t total = 1;
  for (NodeId v = 1; v <= tree.size(); ++v) {
    const auto& kids = tree.children(v);
    const int left = static_cast<int>(
        std::count_if(kids.begin(), kids.end(), [v](NodeId c) { return c < v; }));
    const int right = static_cast<int>(kids.size()) - left;
    total = checked_mul(total, checked_mul(factorial(left), factorial(right)));
  }
  return total;
}

ExactSpace exact_projective(const DepTree& tree, int cap) {
  return mean_over(tree, &for_each_projective, cap);
}

ExactSpace exact_head_fixed(const DepTree& tree, int cap) {
  return mean_over(tree, &for_each_head_fixed, cap);
}

ExactSpace exact_all_orders(const DepTree& tree, int cap) {
  check_cap(tree, cap);
  const int n = tree.size();
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), 1);
  std::vector<int> pos(n + 1);
  std::uint64_t count = 0;
  std::int64_t sum = 0;
  do {
    for (int i = 0; i < n; ++i) pos[order[i]] = i + 1;
    for (NodeId v = 1; v <= n; ++v)
      if (const NodeId h = tree.parent(v)) sum += std::abs(pos[h] - pos[v]);
    ++count;
  } while (std::next_permutation(order.begin(), order.end()));
  return {count, static_cast<double>(sum) / count};
}

}  // namespace deplen
