#pragma once

#include <string>
#include <vector>

#include "deplen/baselines.hpp"
#include "deplen/dep_tree.hpp"

namespace deplen::testing {

// "John threw out the trash": John=1 threw=2 out=3 the=4 trash=5.
inline const std::vector<int> kThrewOutHeads = {2, 0, 2, 5, 2};
// Same tree, reordered "John threw the trash out".
inline const std::vector<NodeId> kThrewTrashOutOrder = {1, 2, 4, 5, 3};
// Three random trees over A..E, identity order.
inline const std::vector<int> kExampleAHeads = {0, 5, 1, 3, 3};
inline const std::vector<int> kExampleBHeads = {4, 4, 1, 0, 1};
inline const std::vector<int> kExampleCHeads = {2, 5, 5, 5, 0};
// Head with one dependent on each side.
inline const std::vector<int> kStar3Heads = {2, 0, 2};
inline const std::vector<int> kChain3Heads = {0, 1, 2};

inline DepTree tree(const std::vector<int>& heads) { return DepTree::from_heads(heads); }

inline std::string data_path(const std::string& name) {
  return std::string(DEPLEN_TEST_DATA_DIR) + "/" + name;
}

inline std::string corpus_path() {
  return std::string(DEPLEN_CORPUS_DIR) + "/cs_pud-gold.conllu";
}

}  // namespace deplen::testing
