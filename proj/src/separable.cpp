#include "positroid/separable.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace positroid {

std::string SepNode::str() const {
  if (kind == Kind::Leaf) return "1";
  return "(" + left->str() + (kind == Kind::Plus ? "+" : "-") + right->str() + ")";
}

namespace {

std::unique_ptr<SepNode> leaf() {
  auto t = std::make_unique<SepNode>();
  t->kind = SepNode::Kind::Leaf;
  return t;
}

std::unique_ptr<SepNode> combine(SepNode::Kind op, std::unique_ptr<SepNode> l,
                                 std::unique_ptr<SepNode> r) {
  auto t = std::make_unique<SepNode>();
  t->kind = op;
  t->left = std::move(l);
  t->right = std::move(r);
  return t;
}

// Recursive block decomposition. A window of the word whose value set is an
// interval is processed standalone (as the pattern it induces).
std::unique_ptr<SepNode> decompose(const std::vector<int>& w) {
  int n = static_cast<int>(w.size());
  if (n == 1) return leaf();

  // Direct-sum split points: prefixes whose values are exactly {min..}.
  // Greedily collecting indecomposable blocks and left-folding yields the
  // canonical tree.
  auto fold = [&](const std::vector<int>& cuts, SepNode::Kind op) -> std::unique_ptr<SepNode> {
    std::unique_ptr<SepNode> acc;
    int start = 0;
    for (int c : cuts) {
      std::vector<int> block(w.begin() + start, w.begin() + c);
      // Normalize block values to 1..|block| preserving relative order.
      std::vector<int> sorted = block;
      std::sort(sorted.begin(), sorted.end());
      for (int& v : block)
        v = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()) + 1;
      auto sub = decompose(block);
      if (!sub) return nullptr;
      acc = acc ? combine(op, std::move(acc), std::move(sub)) : std::move(sub);
      start = c;
    }
    return acc;
  };

  // Try direct sum: block boundary after position p when max(prefix) == p.
  std::vector<int> plus_cuts;
  int mx = 0;
  for (int p = 1; p <= n; ++p) {
    mx = std::max(mx, w[p - 1]);
    if (mx == p) plus_cuts.push_back(p);
  }
  if (static_cast<int>(plus_cuts.size()) > 1) return fold(plus_cuts, SepNode::Kind::Plus);

  // Try skew sum: prefix values are exactly the top ones.
  std::vector<int> minus_cuts;
  int mn = n + 1;
  for (int p = 1; p <= n; ++p) {
    mn = std::min(mn, w[p - 1]);
    if (mn == n - p + 1) minus_cuts.push_back(p);
  }
  if (static_cast<int>(minus_cuts.size()) > 1) return fold(minus_cuts, SepNode::Kind::Minus);

  return nullptr;  // simple (neither sum- nor skew-decomposable) and n > 1
}

}  // namespace

SepResult separable_decompose(const std::vector<int>& word) {
  int n = static_cast<int>(word.size());
  SepResult res;
  // O(n^4) scan for a 3142 or 2413 occurrence.
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          int p = word[a], q = word[b], r = word[c], s = word[d];
          bool p3142 = q < s && s < p && p < r;  // ranks (3,1,4,2)
          bool p2413 = r < p && p < s && s < q;  // ranks (2,4,1,3)
          if (p3142 || p2413) {
            res.separable = false;
            res.witness = {a + 1, b + 1, c + 1, d + 1};
            return res;
          }
        }
  res.separable = true;
  if (n == 0) return res;
  res.tree = decompose(word);
  if (!res.tree) throw std::logic_error("separable_decompose: scan and decomposition disagree");
  return res;
}

int descents(const std::vector<int>& word) {
  int d = 0;
  for (size_t i = 0; i + 1 < word.size(); ++i)
    if (word[i] > word[i + 1]) ++d;
  return d;
}

DecoratedPermutation beta(const std::vector<int>& w) {
  SepResult chk = separable_decompose(w);
  if (!chk.separable) throw std::invalid_argument("beta: word is not separable");
  int n = static_cast<int>(w.size()) + 1;
  std::vector<int> images(n);
  // The n-cycle (w_1, ..., w_{n-1}, n).
  for (size_t i = 0; i + 1 < w.size(); ++i) images[w[i] - 1] = w[i + 1];
  if (!w.empty()) {
    images[w.back() - 1] = n;
    images[n - 1] = w.front();
  } else {
    images[0] = 1;
  }
  if (n == 1) return DecoratedPermutation(images, {}, {1});
  return DecoratedPermutation(images);
}

std::vector<std::vector<int>> enumerate_separable(int m) {
  std::vector<int> word(m);
  std::iota(word.begin(), word.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    if (separable_decompose(word).separable) out.push_back(word);
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

}  // namespace positroid
