#include "positroid/wperm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace positroid {

std::vector<int> cyclic_descents(const std::vector<int>& word) {
  int n = static_cast<int>(word.size());
  std::vector<int> pos(n + 1);
  for (int p = 1; p <= n; ++p) pos[word[p - 1]] = p;
  std::vector<int> out;
  if (pos[1] < pos[n]) out.push_back(1);
  for (int i = 2; i <= n; ++i)
    if (pos[i] < pos[i - 1]) out.push_back(i);
  return out;
}

WPermutation::WPermutation(std::vector<int> w) : n(static_cast<int>(w.size())), word(std::move(w)) {
  std::vector<bool> seen(n + 1, false);
  for (int v : word) {
    if (v < 1 || v > n || seen[v]) throw std::invalid_argument("WPermutation: not a permutation word");
    seen[v] = true;
  }
  if (word.empty() || word.back() != n)
    throw std::invalid_argument("WPermutation: word must end with n");
  k = static_cast<int>(cyclic_descents(word).size()) - 1;
}

std::vector<std::vector<int>> w_vertex_sets(const WPermutation& w) {
  int n = w.n;
  std::vector<std::vector<int>> I(n);
  // Rotation of the word ending at the value a, then its cyclic descents.
  for (int r = 1; r <= n; ++r) {
    int a = r == 1 ? n : r - 1;
    int cut = 0;
    while (w.word[cut] != a) ++cut;  // word[cut] == a; rotation ends here
    std::vector<int> rot;
    rot.reserve(n);
    for (int t = 1; t <= n; ++t) rot.push_back(w.word[(cut + t) % n]);
    I[r - 1] = cyclic_descents(rot);
  }
  return I;
}

bool is_sorted_pair(const std::vector<int>& I, const std::vector<int>& J) {
  if (I.size() != J.size()) throw std::invalid_argument("is_sorted_pair: size mismatch");
  std::vector<int> a = I, b = J;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  for (size_t l = 0; l < a.size(); ++l) {
    if (a[l] > b[l]) return false;
    if (l + 1 < a.size() && b[l] > a[l + 1]) return false;
  }
  return true;
}

std::vector<WPermutation> enumerate_D(int k, int n) {
  if (k < 0 || k > n - 2) throw std::invalid_argument("enumerate_D: need 0 <= k <= n-2");
  std::vector<int> head(n - 1);
  std::iota(head.begin(), head.end(), 1);
  std::vector<WPermutation> out;
  do {
    std::vector<int> w = head;
    w.push_back(n);
    WPermutation cand(std::move(w));
    if (cand.k == k) out.push_back(std::move(cand));
  } while (std::next_permutation(head.begin(), head.end()));
  return out;
}

long eulerian_number(int k, int m) {
  if (m == 0) return k == 0 ? 1 : 0;
  if (k < 0 || k >= m) return 0;
  std::vector<std::vector<long>> E(m + 1, std::vector<long>(m + 1, 0));
  E[1][0] = 1;
  for (int r = 2; r <= m; ++r)
    for (int j = 0; j < r; ++j) {
      long a = j >= 0 ? (j < r ? E[r - 1][j] : 0) : 0;
      long b = j >= 1 ? E[r - 1][j - 1] : 0;
      E[r][j] = (j + 1) * a + (r - j) * b;
    }
  return E[m][k];
}

}  // namespace positroid
