#pragma once

#include <vector>

namespace positroid {

// Cyclic left descents of a permutation word: {i >= 2 : i occurs left of i-1}
// together with 1 when 1 occurs left of n. Always nonempty.
std::vector<int> cyclic_descents(const std::vector<int>& word);

// Element of D_{k+1,n}: word on [n] with w_n = n and exactly k+1 cyclic
// descents. These index the w-simplices of the hypersimplex and the
// w-chambers of the amplituhedron.
struct WPermutation {
  int n = 0;
  int k = 0;  // |cdes(w)| - 1
  std::vector<int> word;

  explicit WPermutation(std::vector<int> w);

  bool operator==(const WPermutation& o) const { return word == o.word; }
  bool operator<(const WPermutation& o) const { return word < o.word; }
};

// Vertex sets I_1..I_n of the w-simplex: I_r is the cyclic descent set of the
// rotation of w ending at r-1 (the rotation ending at n for r=1). Each I_r is
// a (k+1)-subset containing r but not r-1.
std::vector<std::vector<int>> w_vertex_sets(const WPermutation& w);

// Interleaving order on equal-size subsets: with I = {i_1<...<i_t} and
// J = {j_1<...<j_t}, requires i_1 <= j_1 <= i_2 <= j_2 <= ... <= i_t <= j_t.
bool is_sorted_pair(const std::vector<int>& I, const std::vector<int>& J);

// All of D_{k+1,n} in lexicographic word order; |D_{k+1,n}| is the Eulerian
// number E_{k,n-1}.
std::vector<WPermutation> enumerate_D(int k, int n);

// Eulerian number E_{k,m} = #{permutations of [m] with k descents}, used as
// the counting oracle for enumerate_D.
long eulerian_number(int k, int m);

}  // namespace positroid
