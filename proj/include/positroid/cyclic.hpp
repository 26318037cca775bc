#pragma once

#include <stdexcept>
#include <vector>

namespace positroid {

// Cyclic interval [a,b] inside [n] = {1,...,n}: the labels a, a+1, ..., b with
// wrap-around when b < a. [a,a] is the singleton {a}.
struct CyclicInterval {
  int a = 1, b = 1, n = 1;

  CyclicInterval(int a_, int b_, int n_) : a(a_), b(b_), n(n_) {
    if (n < 1 || a < 1 || a > n || b < 1 || b > n)
      throw std::invalid_argument("CyclicInterval: labels out of range");
  }

  bool contains(int x) const {
    if (x < 1 || x > n) return false;
    if (a <= b) return a <= x && x <= b;
    return x >= a || x <= b;
  }

  int size() const { return a <= b ? b - a + 1 : n - a + b + 1; }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(size());
    for (int x = a;; x = (x % n) + 1) {
      out.push_back(x);
      if (x == b) break;
    }
    return out;
  }
};

inline int cyclic_next(int i, int n) { return i % n + 1; }
inline int cyclic_prev(int i, int n) { return (i + n - 2) % n + 1; }

// Representative of x in [1,n] under mod-n shifts.
inline int mod1(long x, int n) {
  long r = ((x - 1) % n + n) % n;
  return static_cast<int>(r) + 1;
}

}  // namespace positroid
