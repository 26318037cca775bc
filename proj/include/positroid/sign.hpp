#pragma once

#include <vector>

#include "positroid/rational.hpp"

namespace positroid {

// Three-valued sign. The enum values are ordered Neg < Zero < Pos so that
// serialized sign vectors compare canonically.
enum class Sign : int { Neg = -1, Zero = 0, Pos = 1 };

inline Sign sign_of(const Rational& r) { return static_cast<Sign>(r.sign()); }
inline Sign sign_of(int s) { return static_cast<Sign>((s > 0) - (s < 0)); }
inline char sign_char(Sign s) { return s == Sign::Pos ? '+' : (s == Sign::Neg ? '-' : '0'); }
inline Sign opposite(Sign s) { return static_cast<Sign>(-static_cast<int>(s)); }

struct VarCount {
  int var = 0;     // sign changes, zeros skipped
  int varbar = 0;  // max sign changes over all completions of the zeros
};

// var counts strict sign alternations in the zero-free subsequence. varbar is
// the maximum over ways of replacing each zero by +/-; the classical closed
// form evaluates it per maximal zero run: a run of z zeros between equal signs
// contributes z rounded up to even, between opposite signs the odd round-up,
// and leading/trailing runs contribute their full length.
VarCount sign_var(const std::vector<Rational>& v);
VarCount sign_var_signs(const std::vector<Sign>& v);

// Cyclic flip positions: i in [n] such that v_i and v_{i+1 mod n} are both
// nonzero and have opposite signs. Zeros never participate in a flip.
std::vector<int> flip_set(const std::vector<Sign>& v);

inline std::vector<Sign> signs_of(const std::vector<Rational>& v) {
  std::vector<Sign> s;
  s.reserve(v.size());
  for (const auto& x : v) s.push_back(sign_of(x));
  return s;
}

}  // namespace positroid
