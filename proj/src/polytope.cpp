#include "positroid/polytope.hpp"

#include <algorithm>
#include <stdexcept>

namespace positroid {

Rational HPoint::sum() const {
  Rational s;
  for (const auto& v : x) s += v;
  return s;
}

Rational HPoint::interval_sum(const CyclicInterval& iv) const {
  if (iv.n != n())
    throw std::invalid_argument("HPoint::interval_sum: interval on wrong ground set");
  Rational s;
  for (int i : iv.elements()) s += coord(i);
  return s;
}

HPoint indicator(int n, const std::vector<int>& S) {
  HPoint p;
  p.x.assign(n, Rational(0));
  for (int i : S) {
    if (i < 1 || i > n)
      throw std::invalid_argument("indicator: label out of range");
    p.x[static_cast<size_t>(i) - 1] = Rational(1);
  }
  return p;
}

int subset_rank(const PositroidPolytope& P, const std::vector<int>& S) {
  int best = 0;
  for (const auto& B : P.bases) {
    int hit = 0;
    for (int b : B)
      if (std::find(S.begin(), S.end(), b) != S.end()) ++hit;
    best = std::max(best, hit);
  }
  return best;
}

bool point_in_polytope(const PositroidPolytope& P, const HPoint& p,
                       bool strict) {
  if (p.n() != P.n)
    throw std::invalid_argument("point_in_polytope: point in wrong dimension");
  if (p.sum() != Rational(P.rank)) return false;
  if (!P.facets.empty()) {
    for (const auto& f : P.facets) {
      Rational s = p.interval_sum(f.iv);
      if (strict ? !(s > Rational(f.lb)) : !(s >= Rational(f.lb))) return false;
    }
    return true;
  }
  if (strict)
    throw std::invalid_argument(
        "point_in_polytope: strict membership needs a facet description");
  // Matroid description: x >= 0 and x_S <= rank(S) for every subset S.
  for (const auto& v : p.x)
    if (v.sign() < 0) return false;
  int n = P.n;
  for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
    std::vector<int> S;
    Rational xs;
    for (int i = 1; i <= n; ++i)
      if (mask & (1u << (i - 1))) {
        S.push_back(i);
        xs += p.coord(i);
      }
    if (xs > Rational(subset_rank(P, S))) return false;
  }
  return true;
}

std::set<std::vector<Rational>> vertices_of_facets(
    int n, int rank, const std::vector<FacetIneq>& facets) {
  std::vector<const FacetIneq*> rows;
  for (const auto& f : facets)
    if (f.facet) rows.push_back(&f);
  int m = static_cast<int>(rows.size());
  if (m < n - 1)
    throw std::invalid_argument("vertices_of_facets: too few facet rows");

  std::set<std::vector<Rational>> out;
  std::vector<int> pick(n - 1);
  for (int i = 0; i < n - 1; ++i) pick[i] = i;
  auto advance = [&]() {
    int i = n - 2;
    while (i >= 0 && pick[i] == m - (n - 1 - i)) --i;
    if (i < 0) return false;
    ++pick[i];
    for (int t = i + 1; t < n - 1; ++t) pick[t] = pick[t - 1] + 1;
    return true;
  };
  do {
    // Solve: coordinate sum = rank, chosen rows at equality. The kernel of
    // the system augmented with the negated right-hand side is the solution
    // ray (x, t); a unique vertex needs kernel dimension one and t != 0.
    ExactMatrix M(n, n + 1);
    for (int j = 0; j < n; ++j) M(0, j) = Rational(1);
    M(0, n) = Rational(-rank);
    for (int r = 0; r < n - 1; ++r) {
      for (int i : rows[pick[r]]->iv.elements()) M(r + 1, i - 1) = Rational(1);
      M(r + 1, n) = Rational(-rows[pick[r]]->lb);
    }
    ExactMatrix K = M.kernel();
    if (K.rows() != 1) continue;
    const Rational& t = K(0, n);
    if (t.is_zero()) continue;
    std::vector<Rational> x(n);
    bool ok = true;
    for (int j = 0; j < n; ++j) x[j] = K(0, j) / t;
    for (const auto& f : facets) {
      Rational s;
      for (int i : f.iv.elements()) s += x[static_cast<size_t>(i) - 1];
      if (s < Rational(f.lb)) {
        ok = false;
        break;
      }
    }
    if (ok) out.insert(std::move(x));
  } while (advance());
  return out;
}

}  // namespace positroid
