#include "positroid/permutation.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "positroid/cyclic.hpp"

namespace positroid {

DecoratedPermutation::DecoratedPermutation(std::vector<int> images, std::vector<int> loops,
                                           std::vector<int> coloops)
    : n(static_cast<int>(images.size())), img(std::move(images)), dec(n, Decoration::None) {
  std::vector<bool> seen(n + 1, false);
  for (int v : img) {
    if (v < 1 || v > n || seen[v]) throw std::invalid_argument("DecoratedPermutation: not a bijection");
    seen[v] = true;
  }
  for (int i : loops) {
    if (img[i - 1] != i) throw std::invalid_argument("DecoratedPermutation: loop at non-fixed point");
    dec[i - 1] = Decoration::Loop;
  }
  for (int i : coloops) {
    if (img[i - 1] != i) throw std::invalid_argument("DecoratedPermutation: coloop at non-fixed point");
    if (dec[i - 1] != Decoration::None)
      throw std::invalid_argument("DecoratedPermutation: point decorated twice");
    dec[i - 1] = Decoration::Coloop;
  }
  for (int i = 1; i <= n; ++i)
    if (img[i - 1] == i && dec[i - 1] == Decoration::None)
      throw std::invalid_argument("DecoratedPermutation: undecorated fixed point");
}

int DecoratedPermutation::inverse_at(int v) const {
  for (int i = 1; i <= n; ++i)
    if (img[i - 1] == v) return i;
  throw std::invalid_argument("DecoratedPermutation: value out of range");
}

bool DecoratedPermutation::loopless() const {
  return std::none_of(dec.begin(), dec.end(), [](Decoration d) { return d == Decoration::Loop; });
}

bool DecoratedPermutation::coloopless() const {
  return std::none_of(dec.begin(), dec.end(), [](Decoration d) { return d == Decoration::Coloop; });
}

std::string DecoratedPermutation::str() const {
  std::ostringstream os;
  for (int i = 1; i <= n; ++i) {
    if (i > 1) os << ' ';
    os << img[i - 1];
    if (dec[i - 1] == Decoration::Loop) os << '_';
    if (dec[i - 1] == Decoration::Coloop) os << '^';
  }
  return os.str();
}

DecoratedPermutation DecoratedPermutation::parse(const std::string& s) {
  std::istringstream is(s);
  std::vector<int> images;
  std::vector<int> loops, coloops;
  std::string tok;
  while (is >> tok) {
    bool loop = false, coloop = false;
    if (!tok.empty() && tok.back() == '_') { loop = true; tok.pop_back(); }
    else if (!tok.empty() && tok.back() == '^') { coloop = true; tok.pop_back(); }
    int v = std::stoi(tok);
    images.push_back(v);
    if (loop) loops.push_back(static_cast<int>(images.size()));
    if (coloop) coloops.push_back(static_cast<int>(images.size()));
  }
  return DecoratedPermutation(images, loops, coloops);
}

int anti_excedances(const DecoratedPermutation& pi) {
  int k = 0;
  for (int i = 1; i <= pi.n; ++i) {
    if (pi.is_coloop(i)) { ++k; continue; }
    if (!pi.is_fixed(i) && pi.inverse_at(i) > i) ++k;
  }
  return k;
}

long AffinePermutation::operator()(long j) const {
  long q = (j - 1) / n, r = (j - 1) % n;
  if (r < 0) { r += n; q -= 1; }
  return window[r] + q * n;
}

int AffinePermutation::k() const {
  long s = 0;
  for (int i = 1; i <= n; ++i) s += window[i - 1] - i;
  return static_cast<int>(s / n);
}

bool AffinePermutation::bounded() const {
  std::vector<bool> seen(n, false);
  for (int i = 1; i <= n; ++i) {
    long v = window[i - 1];
    if (v < i || v > i + n) return false;
    int r = static_cast<int>(((v - 1) % n + n) % n);
    if (seen[r]) return false;
    seen[r] = true;
  }
  return true;
}

long AffinePermutation::inversions() const {
  // pi(j) >= j always, so positions beyond i+n cannot invert against i.
  long inv = 0;
  for (int i = 1; i <= n; ++i)
    for (long j = i + 1; j <= i + n; ++j)
      if ((*this)(i) > (*this)(j)) ++inv;
  return inv;
}

int AffinePermutation::cell_dimension() const {
  int kk = k();
  return kk * (n - kk) - static_cast<int>(inversions());
}

AffinePermutation to_affine(const DecoratedPermutation& pi) {
  AffinePermutation a;
  a.n = pi.n;
  a.window.resize(pi.n);
  for (int i = 1; i <= pi.n; ++i) {
    int v = pi(i);
    if (pi.is_loop(i)) a.window[i - 1] = i;
    else if (pi.is_coloop(i)) a.window[i - 1] = i + pi.n;
    else a.window[i - 1] = v > i ? v : v + pi.n;
  }
  return a;
}

DecoratedPermutation to_decorated(const AffinePermutation& pi) {
  std::vector<int> images(pi.n);
  std::vector<int> loops, coloops;
  for (int i = 1; i <= pi.n; ++i) {
    long v = pi.window[i - 1];
    images[i - 1] = mod1(v, pi.n);
    if (v == i) loops.push_back(i);
    if (v == i + pi.n) coloops.push_back(i);
  }
  return DecoratedPermutation(images, loops, coloops);
}

std::vector<AffinePermutation> bruhat_covers(const AffinePermutation& pi) {
  if (!pi.bounded()) throw std::invalid_argument("bruhat_covers: window not (k,n)-bounded");
  std::set<AffinePermutation> out;
  long base = pi.inversions();
  int n = pi.n;
  // nu = t_{a,b} o pi swaps the value residues a and b keeping offsets; offsets
  // beyond 2n change the length by more than 1, so this range is exhaustive.
  for (int a = 1; a <= n; ++a) {
    for (long b = a + 1; b < a + 2 * n; ++b) {
      if ((b - a) % n == 0) continue;
      AffinePermutation nu = pi;
      for (int i = 1; i <= n; ++i) {
        long v = pi.window[i - 1];
        long r = ((v - a) % n + n) % n;
        if (r == 0) nu.window[i - 1] = v + (b - a);
        else if ((v - b) % n == 0) nu.window[i - 1] = v - (b - a);
      }
      if (!nu.bounded()) continue;
      if (nu.inversions() == base + 1) out.insert(nu);
    }
  }
  return {out.begin(), out.end()};
}

DecoratedPermutation t_dual(const DecoratedPermutation& pi) {
  if (!pi.loopless()) throw std::invalid_argument("t_dual: input must be loopless");
  int n = pi.n;
  std::vector<int> images(n);
  std::vector<int> loops;
  for (int i = 1; i <= n; ++i) {
    images[i - 1] = pi(cyclic_prev(i, n));
    if (images[i - 1] == i) loops.push_back(i);
  }
  return DecoratedPermutation(images, loops, {});
}

DecoratedPermutation t_dual_inverse(const DecoratedPermutation& pihat) {
  if (!pihat.coloopless()) throw std::invalid_argument("t_dual_inverse: input must be coloopless");
  int n = pihat.n;
  std::vector<int> images(n);
  std::vector<int> coloops;
  for (int i = 1; i <= n; ++i) {
    images[i - 1] = pihat(cyclic_next(i, n));
    if (images[i - 1] == i) coloops.push_back(i);
  }
  return DecoratedPermutation(images, {}, coloops);
}

}  // namespace positroid
