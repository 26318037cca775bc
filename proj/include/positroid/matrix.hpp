#pragma once

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "positroid/rational.hpp"

namespace positroid {

// Dense exact matrix. Entries are accessed 0-based via operator(); the
// combinatorial layer (Pluecker indices, boundary labels) is 1-based to match
// the usual conventions, so plucker() and friends take 1-based column labels.
class ExactMatrix {
 public:
  ExactMatrix() : rows_(0), cols_(0) {}
  ExactMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}
  ExactMatrix(std::initializer_list<std::initializer_list<Rational>> init);

  static ExactMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& operator()(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  const Rational& operator()(int i, int j) const {
    return e_[static_cast<size_t>(i) * cols_ + j];
  }

  ExactMatrix transpose() const;
  ExactMatrix operator*(const ExactMatrix& o) const;
  ExactMatrix scaled(const Rational& c) const;

  // Submatrix on 1-based column labels, all rows.
  ExactMatrix columns(const std::vector<int>& labels) const;
  // Vertical stack: rows of this followed by rows of o.
  ExactMatrix stack(const ExactMatrix& o) const;
  std::vector<Rational> row(int i) const;

  // Exact determinant by fraction-free Bareiss elimination on the
  // denominator-cleared integer matrix.
  Rational det() const;

  int rank() const;

  // Basis of the right null space {x : M x = 0}, returned as the rows of a
  // (cols-rank) x cols matrix in reduced echelon shape.
  ExactMatrix kernel() const;

  bool operator==(const ExactMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }

 private:
  int rows_, cols_;
  std::vector<Rational> e_;
};

// Maximal minor of M on the 1-based column label set I (|I| = rows, sorted by
// the caller's convention; the value is for the labels in the given order).
Rational plucker(const ExactMatrix& M, const std::vector<int>& I);

// n x p matrix with row i = (1, i, i^2, ..., i^{p-1}) on nodes 1..n; all
// maximal minors (and in fact all minors) are positive.
ExactMatrix vandermonde_positive(int n, int p);

// Same shape but on caller-supplied strictly increasing positive nodes.
ExactMatrix vandermonde_on_nodes(const std::vector<Rational>& nodes, int p);

// Cyclic row shift with twist: row i of the result is row i+steps of Z, and
// every row that wraps past the bottom is multiplied by (-1)^(p-1). This is
// the symmetry of Mat^{>0}_{n,p}, so positivity of maximal minors survives.
ExactMatrix twisted_shift(const ExactMatrix& Z, int steps);

// R_ij = q^((i-j)^2), 0 < q < 1: a strictly totally positive kernel that
// approaches the identity entrywise as q -> 0+. Used to nudge a boundary
// point of a positivity cell into the interior without leaving exact
// arithmetic.
ExactMatrix gaussian_tp_kernel(int n, const Rational& q);

// True when every maximal minor of the n x p matrix (n >= p) is > 0.
bool all_maximal_minors_positive(const ExactMatrix& M);

// True when every minor of every size is > 0 (exhaustive; small inputs only).
bool totally_positive(const ExactMatrix& M);

}  // namespace positroid
