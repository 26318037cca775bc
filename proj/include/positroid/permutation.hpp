#pragma once

#include <string>
#include <vector>

namespace positroid {

enum class Decoration { None, Loop, Coloop };

// Permutation of [n] in one-line notation (1-based), with every fixed point
// colored as a loop or a coloop. The type (k,n) has k = number of
// anti-excedances; loops/coloops count as k-neutral/k-contributing
// respectively.
struct DecoratedPermutation {
  int n = 0;
  std::vector<int> img;          // img[i-1] = pi(i)
  std::vector<Decoration> dec;   // None unless i is a fixed point

  DecoratedPermutation() = default;
  DecoratedPermutation(std::vector<int> images, std::vector<int> loops = {},
                       std::vector<int> coloops = {});

  int operator()(int i) const { return img[i - 1]; }
  int inverse_at(int v) const;
  bool is_fixed(int i) const { return img[i - 1] == i; }
  bool is_loop(int i) const { return dec[i - 1] == Decoration::Loop; }
  bool is_coloop(int i) const { return dec[i - 1] == Decoration::Coloop; }
  bool loopless() const;
  bool coloopless() const;

  bool operator==(const DecoratedPermutation& o) const { return img == o.img && dec == o.dec; }
  bool operator<(const DecoratedPermutation& o) const {
    return img != o.img ? img < o.img : dec < o.dec;
  }

  // One-line wire format: "3 2_ 5 1 6 8 7^ 4" with _ marking loops and
  // ^ marking coloops.
  std::string str() const;
  static DecoratedPermutation parse(const std::string& s);
};

int anti_excedances(const DecoratedPermutation& pi);

// Affine lift: window values w(i) with i <= w(i) <= i+n, extended by
// w(i+n) = w(i) + n. Loops stay put, coloops jump by n, images below their
// position wrap up by n.
struct AffinePermutation {
  int n = 0;
  std::vector<long> window;  // window[i-1] = pi(i) for i in [n]

  long operator()(long j) const;  // value at any integer position
  int k() const;                  // (k,n)-boundedness constant
  bool bounded() const;           // i <= pi(i) <= i+n for the window
  long inversions() const;
  int cell_dimension() const;     // k(n-k) - inversions

  bool operator==(const AffinePermutation& o) const { return window == o.window; }
  bool operator<(const AffinePermutation& o) const { return window < o.window; }
};

AffinePermutation to_affine(const DecoratedPermutation& pi);
DecoratedPermutation to_decorated(const AffinePermutation& pi);

// All nu = t o pi (t an affine reflection) that stay bounded and have exactly
// one more inversion: the cells covered by S_pi in the closure order, one
// dimension down.
std::vector<AffinePermutation> bruhat_covers(const AffinePermutation& pi);

// T-dual of a loopless type-(k+1,n) decorated permutation: hat(pi)(i) =
// pi(i-1) cyclically, new fixed points become loops. The result is coloopless
// of type (k,n).
DecoratedPermutation t_dual(const DecoratedPermutation& pi);

// Inverse of t_dual: shifts the other way, new fixed points become coloops.
DecoratedPermutation t_dual_inverse(const DecoratedPermutation& pihat);

}  // namespace positroid
