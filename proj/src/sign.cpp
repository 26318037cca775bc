#include "positroid/sign.hpp"

#include <algorithm>

namespace positroid {

VarCount sign_var_signs(const std::vector<Sign>& v) {
  VarCount out;
  int last = 0;
  for (Sign s : v) {
    int x = static_cast<int>(s);
    if (x == 0) continue;
    if (last != 0 && x != last) ++out.var;
    last = x;
  }
  // varbar: maximize over the two sign choices at each zero.
  // best[s] = max changes achievable with the completed prefix ending in sign s.
  const int kNone = -1000000;
  int best_pos = 0, best_neg = 0;
  bool started = false;
  for (Sign s : v) {
    int x = static_cast<int>(s);
    if (!started) {
      started = true;
      if (x > 0) { best_neg = kNone; }
      else if (x < 0) { best_pos = kNone; }
      continue;
    }
    int np, nn;
    np = std::max(best_pos, best_neg + 1);
    nn = std::max(best_neg, best_pos + 1);
    if (x > 0) { best_pos = np; best_neg = kNone; }
    else if (x < 0) { best_neg = nn; best_pos = kNone; }
    else { best_pos = np; best_neg = nn; }
  }
  out.varbar = started ? std::max(best_pos, best_neg) : 0;
  return out;
}

VarCount sign_var(const std::vector<Rational>& v) { return sign_var_signs(signs_of(v)); }

std::vector<int> flip_set(const std::vector<Sign>& v) {
  int n = static_cast<int>(v.size());
  std::vector<int> out;
  for (int i = 1; i <= n; ++i) {
    Sign a = v[i - 1];
    Sign b = v[i % n];
    if (a != Sign::Zero && b == opposite(a)) out.push_back(i);
  }
  return out;
}

}  // namespace positroid
