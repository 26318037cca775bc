#include "positroid/matrix.hpp"

#include <algorithm>
#include <functional>

namespace positroid {

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<Rational>> init) {
  rows_ = static_cast<int>(init.size());
  cols_ = rows_ ? static_cast<int>(init.begin()->size()) : 0;
  e_.reserve(static_cast<size_t>(rows_) * cols_);
  for (const auto& r : init) {
    if (static_cast<int>(r.size()) != cols_)
      throw std::invalid_argument("ExactMatrix: ragged initializer");
    for (const auto& x : r) e_.push_back(x);
  }
}

ExactMatrix ExactMatrix::identity(int n) {
  ExactMatrix M(n, n);
  for (int i = 0; i < n; ++i) M(i, i) = 1;
  return M;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix T(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) T(j, i) = (*this)(i, j);
  return T;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("ExactMatrix: size mismatch in product");
  ExactMatrix P(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Rational& b = o(k, j);
        if (!b.is_zero()) P(i, j) += a * b;
      }
    }
  return P;
}

ExactMatrix ExactMatrix::scaled(const Rational& c) const {
  ExactMatrix S(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) S(i, j) = (*this)(i, j) * c;
  return S;
}

ExactMatrix ExactMatrix::columns(const std::vector<int>& labels) const {
  ExactMatrix S(rows_, static_cast<int>(labels.size()));
  for (size_t j = 0; j < labels.size(); ++j) {
    int c = labels[j];
    if (c < 1 || c > cols_) throw std::invalid_argument("ExactMatrix: column label out of range");
    for (int i = 0; i < rows_; ++i) S(i, static_cast<int>(j)) = (*this)(i, c - 1);
  }
  return S;
}

ExactMatrix ExactMatrix::stack(const ExactMatrix& o) const {
  if (cols_ != o.cols_) throw std::invalid_argument("ExactMatrix: size mismatch in stack");
  ExactMatrix S(rows_ + o.rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) S(i, j) = (*this)(i, j);
  for (int i = 0; i < o.rows_; ++i)
    for (int j = 0; j < cols_; ++j) S(rows_ + i, j) = o(i, j);
  return S;
}

std::vector<Rational> ExactMatrix::row(int i) const {
  std::vector<Rational> r(cols_);
  for (int j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
  return r;
}

Rational ExactMatrix::det() const {
  if (rows_ != cols_) throw std::invalid_argument("ExactMatrix: det of non-square matrix");
  int n = rows_;
  if (n == 0) return 1;

  // Clear denominators row by row so Bareiss runs over the integers.
  std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
  Rational scale = 1;  // det(original) = det(integer matrix) / scale
  for (int i = 0; i < n; ++i) {
    Int l = 1;
    for (int j = 0; j < n; ++j) l = lcm(l, (*this)(i, j).den());
    scale *= Rational(l);
    for (int j = 0; j < n; ++j) {
      const Rational& x = (*this)(i, j);
      a[i][j] = x.num() * (l / x.den());
    }
  }

  int sign = 1;
  Int prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (sgn(a[k][k]) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (sgn(a[i][k]) != 0) { p = i; break; }
      if (p < 0) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Int t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = t;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  Rational d(a[n - 1][n - 1]);
  if (sign < 0) d = -d;
  return d / scale;
}

namespace {

// Row-reduce in place over the rationals; returns pivot column list.
std::vector<int> echelonize(ExactMatrix& M) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < M.cols() && r < M.rows(); ++c) {
    int p = -1;
    for (int i = r; i < M.rows(); ++i)
      if (!M(i, c).is_zero()) { p = i; break; }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < M.cols(); ++j) std::swap(M(p, j), M(r, j));
    Rational inv = Rational(1) / M(r, c);
    for (int j = c; j < M.cols(); ++j) M(r, j) *= inv;
    for (int i = 0; i < M.rows(); ++i) {
      if (i == r || M(i, c).is_zero()) continue;
      Rational f = M(i, c);
      for (int j = c; j < M.cols(); ++j) M(i, j) -= f * M(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int ExactMatrix::rank() const {
  ExactMatrix M = *this;
  return static_cast<int>(echelonize(M).size());
}

ExactMatrix ExactMatrix::kernel() const {
  ExactMatrix M = *this;
  std::vector<int> pivots = echelonize(M);
  std::vector<bool> is_pivot(cols_, false);
  for (int c : pivots) is_pivot[c] = true;
  ExactMatrix K(cols_ - static_cast<int>(pivots.size()), cols_);
  int row = 0;
  for (int c = 0; c < cols_; ++c) {
    if (is_pivot[c]) continue;
    K(row, c) = 1;
    for (size_t r = 0; r < pivots.size(); ++r) K(row, pivots[r]) = -M(static_cast<int>(r), c);
    ++row;
  }
  return K;
}

Rational plucker(const ExactMatrix& M, const std::vector<int>& I) {
  if (static_cast<int>(I.size()) != M.rows())
    throw std::invalid_argument("plucker: index set size must equal row count");
  return M.columns(I).det();
}

ExactMatrix vandermonde_positive(int n, int p) {
  if (p > n) throw std::invalid_argument("vandermonde_positive: need p <= n");
  std::vector<Rational> nodes;
  nodes.reserve(n);
  for (int i = 1; i <= n; ++i) nodes.push_back(Rational(i));
  return vandermonde_on_nodes(nodes, p);
}

ExactMatrix vandermonde_on_nodes(const std::vector<Rational>& nodes, int p) {
  int n = static_cast<int>(nodes.size());
  ExactMatrix M(n, p);
  for (int i = 0; i < n; ++i) {
    Rational v = 1;
    for (int j = 0; j < p; ++j) {
      M(i, j) = v;
      v *= nodes[i];
    }
  }
  return M;
}

ExactMatrix twisted_shift(const ExactMatrix& Z, int steps) {
  int n = Z.rows(), p = Z.cols();
  bool twist = (p % 2 == 0);  // (-1)^(p-1) is -1 exactly when p is even
  ExactMatrix S(n, p);
  for (int i = 0; i < n; ++i) {
    long src = i + steps;
    long wraps = src >= 0 ? src / n : -((-src + n - 1) / n);
    int r = static_cast<int>(src - wraps * n);
    bool flip = twist && (wraps % 2 != 0);
    for (int j = 0; j < p; ++j) S(i, j) = flip ? -Z(r, j) : Z(r, j);
  }
  return S;
}

ExactMatrix gaussian_tp_kernel(int n, const Rational& q) {
  if (!(q > Rational(0) && q < Rational(1)))
    throw std::invalid_argument("gaussian_tp_kernel: need 0 < q < 1");
  ExactMatrix R(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      long d = i - j;
      R(i, j) = pow(q, static_cast<unsigned long>(d * d));
    }
  return R;
}

namespace {

bool for_each_subset(int n, int k, const std::function<bool(const std::vector<int>&)>& f) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i + 1;
  while (true) {
    if (!f(idx)) return false;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i + 1) --i;
    if (i < 0) return true;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

bool all_maximal_minors_positive(const ExactMatrix& M) {
  int n = M.rows(), p = M.cols();
  if (p > n) return all_maximal_minors_positive(M.transpose());
  ExactMatrix T = M.transpose();  // p x n; plucker takes column sets
  return for_each_subset(n, p, [&](const std::vector<int>& I) {
    return plucker(T, I).sign() > 0;
  });
}

bool totally_positive(const ExactMatrix& M) {
  int m = std::min(M.rows(), M.cols());
  for (int s = 1; s <= m; ++s) {
    bool ok = for_each_subset(M.rows(), s, [&](const std::vector<int>& R) {
      return for_each_subset(M.cols(), s, [&](const std::vector<int>& C) {
        ExactMatrix S(s, s);
        for (int i = 0; i < s; ++i)
          for (int j = 0; j < s; ++j) S(i, j) = M(R[i] - 1, C[j] - 1);
        return S.det().sign() > 0;
      });
    });
    if (!ok) return false;
  }
  return true;
}

}  // namespace positroid
