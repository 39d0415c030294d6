// Exhaustive enumeration of projective word orders over a fixed tree.

#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "deplen/dep_tree.hpp"

namespace deplen {

inline constexpr int kDefaultEnumerationCap = 10;

/// Thrown when a tree is too large to enumerate.
class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

using OrderVisitor = std::function<void(const Linearization&)>;

/// Calls `visit` once for every projective linearization of `tree`.
/// Throws CapExceeded if tree.size() > cap.
void for_each_projective(const DepTree& tree, const OrderVisitor& visit,
                         int cap = kDefaultEnumerationCap);

/// Calls `visit` once for every projective linearization that keeps each
/// dependent on its attested side of its head.
void for_each_head_fixed(const DepTree& tree, const OrderVisitor& visit,
                         int cap = kDefaultEnumerationCap);

/// All projective linearizations, in generation order.
std::vector<Linearization> enumerate_projective(
    const DepTree& tree, int cap = kDefaultEnumerationCap);

/// Product over nodes of (arity + 1)!. Throws std::overflow_error past 2^64.
std::uint64_t count_projective(const DepTree& tree);

/// Product over nodes of L! * R!, with L and R the attested left and right
/// dependent counts.
std::uint64_t count_head_fixed(const DepTree& tree);

/// Exact statistics of deplen over a finite sample space.
struct ExactSpace {
  std::uint64_t count = 0;
  double mean = 0.0;
};

ExactSpace exact_projective(const DepTree& tree,
                            int cap = kDefaultEnumerationCap);
ExactSpace exact_head_fixed(const DepTree& tree,
                            int cap = kDefaultEnumerationCap);

/// Walks all n! permutations.
ExactSpace exact_all_orders(const DepTree& tree,
                            int cap = kDefaultEnumerationCap);

}  // namespace deplen
