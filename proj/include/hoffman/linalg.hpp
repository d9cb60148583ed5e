#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "hoffman/error.hpp"

namespace hoffman {

/// Dense row-major matrix of doubles.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  double& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const std::vector<double>& data() const { return data_; }
  std::vector<double>& data() { return data_; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw InputError("Matrix: dimension mismatch in product");
    Matrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const double aik = a(i, k);
        if (aik == 0.0) continue;
        for (int j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }
  friend Matrix operator*(double s, Matrix a) {
    for (double& x : a.data_) x *= s;
    return a;
  }

  double max_abs() const {
    double m = 0.0;
    for (double x : data_) m = std::max(m, std::abs(x));
    return m;
  }
  double frobenius() const {
    double s = 0.0;
    for (double x : data_) s += x * x;
    return std::sqrt(s);
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

/// <A, B> = sum_ij A_ij B_ij.
inline double inner(const Matrix& a, const Matrix& b) {
  return std::inner_product(a.data().begin(), a.data().end(), b.data().begin(), 0.0);
}

/// Eigenvalues sorted descending; eigenvector i is column i.
struct EigenDecomposition {
  std::vector<double> values;
  Matrix vectors;
};

struct JacobiOptions {
  // stop once the off-diagonal Frobenius norm is at most
  // max(abs_tol, rel_tol * ||A||_F)
  double abs_tol = 1e-300;
  double rel_tol = 1e-15;
  int max_sweeps = 100;
};

namespace detail {

inline double off_diagonal_norm(const Matrix& a) {
  double s = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

// In-place cyclic (row-by-row) Jacobi on symmetric a; v accumulates
// rotations from the right.
inline void jacobi_sweeps(Matrix& a, Matrix& v, const JacobiOptions& opt) {
  const int n = a.rows();
  const double threshold = std::max(opt.abs_tol, opt.rel_tol * a.frobenius());
  for (int sweep = 0; sweep < opt.max_sweeps; ++sweep) {
    if (off_diagonal_norm(a) <= threshold) return;
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double app = a(p, p), aqq = a(q, q);
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = a(k, p), akq = a(k, q);
          const double np = c * akp - s * akq;
          const double nq = s * akp + c * akq;
          a(k, p) = a(p, k) = np;
          a(k, q) = a(q, k) = nq;
        }
        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = a(q, p) = 0.0;
        for (int k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
  }
}

inline EigenDecomposition sorted_decomposition(const Matrix& diag, const Matrix& v) {
  const int n = diag.rows();
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int x, int y) { return diag(x, x) > diag(y, y); });
  EigenDecomposition out{std::vector<double>(n), Matrix(n, n)};
  for (int j = 0; j < n; ++j) {
    out.values[j] = diag(idx[j], idx[j]);
    for (int i = 0; i < n; ++i) out.vectors(i, j) = v(i, idx[j]);
  }
  return out;
}

}  // namespace detail

/// Full eigendecomposition of a symmetric matrix by cyclic Jacobi
/// rotations. Deterministic: rotations are applied in fixed (p, q) order.
inline EigenDecomposition jacobi_eigen(Matrix a, const JacobiOptions& opt = {}) {
  if (a.rows() != a.cols()) throw InputError("jacobi_eigen: matrix must be square");
  Matrix v = Matrix::identity(a.rows());
  detail::jacobi_sweeps(a, v, opt);
  return detail::sorted_decomposition(a, v);
}

/// Same, starting from an approximate orthonormal eigenbasis `basis`
/// (e.g. the previous iterate in a sequence of nearby matrices); the
/// rotated matrix is nearly diagonal so few sweeps are needed.
inline EigenDecomposition jacobi_eigen_warm(const Matrix& a, const Matrix& basis, const JacobiOptions& opt = {}) {
  Matrix b = basis.transpose() * a * basis;
  // re-symmetrize rounding noise
  for (int i = 0; i < b.rows(); ++i)
    for (int j = i + 1; j < b.cols(); ++j) b(i, j) = b(j, i) = 0.5 * (b(i, j) + b(j, i));
  Matrix v = basis;
  detail::jacobi_sweeps(b, v, opt);
  return detail::sorted_decomposition(b, v);
}

}  // namespace hoffman
