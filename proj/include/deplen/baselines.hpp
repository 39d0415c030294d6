// Randomized baselines for dependency length.
//
// Word-order baselines keep the tree and draw a new linearization; the
// random-tree baseline discards the structure and keeps only the length.

#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "deplen/dep_tree.hpp"
#include "deplen/rng.hpp"

namespace deplen {

enum class BaselineKind {
  RandomTree,
  FreeNonprojective,
  Projective,
  HeadFixedProjective,
};

inline constexpr std::array kAllBaselines = {
    BaselineKind::RandomTree,
    BaselineKind::FreeNonprojective,
    BaselineKind::Projective,
    BaselineKind::HeadFixedProjective,
};

/// CLI / CSV spelling: random-tree, free, projective, head-fixed.
std::string_view to_string(BaselineKind kind);
std::optional<BaselineKind> parse_baseline(std::string_view name);

/// Uniform permutation of all nodes.
Linearization sample_free(const DepTree& tree, Rng& rng);

/// Uniform over projective linearizations: every node's block is a uniform
/// shuffle of the node and its dependents' blocks.
Linearization sample_projective(const DepTree& tree, Rng& rng);

/// Like sample_projective, but dependents left of their head in the attested
/// order stay left and right ones stay right; only sisters on the same side
/// are permuted.
Linearization sample_head_fixed(const DepTree& tree, Rng& rng);

/// Uniform over the n^(n-1) rooted labeled trees on 1..n, via a Prufer code
/// and a uniform root. Throws std::invalid_argument for n < 1.
DepTree sample_random_tree(int n, Rng& rng);

/// Dispatch: for RandomTree draws a fresh tree of the same size and scores it
/// under identity order, otherwise scores a sampled order of `tree`.
std::int64_t sample_deplen(BaselineKind kind, const DepTree& tree, Rng& rng);

}  // namespace deplen
