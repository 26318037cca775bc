#pragma once

#include <set>
#include <vector>

#include "positroid/cyclic.hpp"
#include "positroid/matrix.hpp"
#include "positroid/rational.hpp"

namespace positroid {

// Exact point of the ambient R^n of a hypersimplex; coordinates are 1-based
// through coord().
struct HPoint {
  std::vector<Rational> x;

  int n() const { return static_cast<int>(x.size()); }
  const Rational& coord(int i) const { return x.at(static_cast<size_t>(i) - 1); }
  Rational sum() const;
  Rational interval_sum(const CyclicInterval& iv) const;
};

// One inequality x_{iv} >= lb. `facet` marks the inequalities that cut actual
// facets (interval arcs oriented with their black polygon on the left, plus
// the nonnegativity rows); the rest are valid on the polytope but redundant,
// and are kept because the interval normalized to start in [1,n] reads more
// naturally in reports.
struct FacetIneq {
  CyclicInterval iv;
  int lb = 0;
  bool facet = true;

  bool operator==(const FacetIneq& o) const {
    return iv.a == o.iv.a && iv.b == o.iv.b && lb == o.lb && facet == o.facet;
  }
  bool operator<(const FacetIneq& o) const {
    if (iv.a != o.iv.a) return iv.a < o.iv.a;
    if (iv.b != o.iv.b) return iv.b < o.iv.b;
    if (lb != o.lb) return lb < o.lb;
    return facet < o.facet;
  }
};

// Positroid polytope: the convex hull of the indicator vectors e_B over the
// bases B of a positroid of the given rank on [n]. `facets` is non-empty only
// when an exact inequality description is known (tree positroids); together
// with x_{[n]} = rank it then cuts the polytope exactly.
struct PositroidPolytope {
  int n = 0;
  int rank = 0;  // number of elements in each basis
  std::set<std::vector<int>> bases;
  std::vector<FacetIneq> facets;
};

// Matroid rank of a label set: max |B ∩ S| over bases.
int subset_rank(const PositroidPolytope& P, const std::vector<int>& S);

// Closed membership. With a facet list, checks the coordinate sum and the
// listed inequalities; otherwise falls back to the matroid description
// (x >= 0, coordinate sum, and x_S <= rank(S) for every subset S). `strict`
// asks for the relative interior and requires a facet list.
bool point_in_polytope(const PositroidPolytope& P, const HPoint& p,
                       bool strict = false);

// All vertices of {x : x_{[n]} = rank, facet rows of `facets` hold}, by
// enumerating maximal active sets exactly. Intended for the small polytopes
// in this library; cost grows as binom(#facets, n-1).
std::set<std::vector<Rational>> vertices_of_facets(
    int n, int rank, const std::vector<FacetIneq>& facets);

// Indicator vector of a sorted label set as a point of R^n.
HPoint indicator(int n, const std::vector<int>& S);

}  // namespace positroid
