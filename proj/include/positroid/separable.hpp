#pragma once

#include <memory>
#include <string>
#include <vector>

#include "positroid/permutation.hpp"

namespace positroid {

// Decomposition tree of a separable permutation over direct sum (+) and skew
// sum (-). Leaves are single letters. Canonical form: split into
// indecomposable blocks and fold left, so 321 prints as ((1-1)-1).
struct SepNode {
  enum class Kind { Leaf, Plus, Minus } kind = Kind::Leaf;
  std::unique_ptr<SepNode> left, right;

  std::string str() const;
};

struct SepResult {
  bool separable = false;
  std::unique_ptr<SepNode> tree;   // set when separable
  std::vector<int> witness;        // positions of a 3142 or 2413 occurrence otherwise
};

// Decides separability by the O(n^4) pattern scan and, when separable,
// produces the canonical decomposition tree.
SepResult separable_decompose(const std::vector<int>& word);

// Positional descent count of a word.
int descents(const std::vector<int>& word);

// The bijection sending a separable w on [n-1] to the n-cycle
// (w_1, ..., w_{n-1}, n), a tree-type decorated permutation on [n].
// w has k descents exactly when the result has type (k+1, n).
DecoratedPermutation beta(const std::vector<int>& w);

// All separable permutations of [m], in lexicographic order.
std::vector<std::vector<int>> enumerate_separable(int m);

}  // namespace positroid
