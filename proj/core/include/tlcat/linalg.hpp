#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "tlcat/cyclotomic.hpp"
#include "tlcat/errors.hpp"
#include "tlcat/scalar.hpp"

namespace tlcat {

inline bool is_zero(const mpq_class& x) { return sgn(x) == 0; }
inline mpq_class inverse(const mpq_class& x) {
  if (sgn(x) == 0) throw DivisionByZero();
  return 1 / x;
}

inline std::string to_text(const mpq_class& x) { return x.get_str(); }
inline std::string to_text(const Scalar& x) { return x.str(); }
inline std::string to_text(const Cyclotomic& x) { return x.str(); }

// Dense row-major matrix over an exact field T (mpq_class, Cyclotomic, Scalar).
// Fields that need context (Cyclotomic) get their unit from the caller.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : r_(rows), c_(cols), a_(std::size_t(rows) * std::size_t(cols)) {}

  static Matrix identity(int n, const T& one) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }
  T& operator()(int i, int j) { return a_[std::size_t(i) * std::size_t(c_) + std::size_t(j)]; }
  const T& operator()(int i, int j) const { return a_[std::size_t(i) * std::size_t(c_) + std::size_t(j)]; }

  bool is_zero() const {
    for (const T& x : a_)
      if (!tlcat::is_zero(x)) return false;
    return true;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
  }
  Matrix& operator*=(const T& x) {
    for (T& y : a_) y *= x;
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const T& x, Matrix a) { return a *= x; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.c_ != b.r_) throw InterfaceMismatch("matrix product shape");
    Matrix r(a.r_, b.c_);
    for (int i = 0; i < a.r_; ++i)
      for (int k = 0; k < a.c_; ++k) {
        const T& x = a(i, k);
        if (tlcat::is_zero(x)) continue;
        for (int j = 0; j < b.c_; ++j)
          if (!tlcat::is_zero(b(k, j))) r(i, j) += x * b(k, j);
      }
    return r;
  }

  bool operator==(const Matrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) return false;
    for (std::size_t i = 0; i < a_.size(); ++i)
      if (!tlcat::is_zero(a_[i] - o.a_[i])) return false;
    return true;
  }

  template <class F>
  auto map(F&& f) const {
    using U = decltype(f(a_[0]));
    Matrix<U> r(r_, c_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) r(i, j) = f((*this)(i, j));
    return r;
  }

  // Rows of entry strings, one row per line.
  std::string str() const {
    std::string s;
    for (int i = 0; i < r_; ++i) {
      s += '[';
      for (int j = 0; j < c_; ++j) {
        if (j) s += ", ";
        s += to_text((*this)(i, j));
      }
      s += "]\n";
    }
    return s;
  }

 private:
  void check_same(const Matrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw InterfaceMismatch("matrix shapes differ");
  }
  int r_ = 0;
  int c_ = 0;
  std::vector<T> a_;
};

// In-place reduced row echelon form; returns pivot columns.
template <class T>
std::vector<int> rref(Matrix<T>& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int p = row;
    while (p < m.rows() && is_zero(m(p, col))) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    const T inv = inverse(m(row, col));
    for (int j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || is_zero(m(i, col))) continue;
      const T f = m(i, col);
      for (int j = col; j < m.cols(); ++j)
        if (!is_zero(m(row, j))) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class T>
int rank(Matrix<T> m) {
  return int(rref(m).size());
}

// Basis of the right kernel, one column vector per element.
template <class T>
std::vector<std::vector<T>> kernel(Matrix<T> m, const T& one) {
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(std::size_t(m.cols()), false);
  for (int p : pivots) is_pivot[std::size_t(p)] = true;
  std::vector<std::vector<T>> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[std::size_t(free)]) continue;
    std::vector<T> v(std::size_t(m.cols()));
    v[std::size_t(free)] = one;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[std::size_t(pivots[r])] = -m(int(r), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class T>
T determinant(Matrix<T> m, const T& one) {
  if (m.rows() != m.cols()) throw InterfaceMismatch("determinant of a non-square matrix");
  T det = one;
  const int n = m.rows();
  for (int col = 0; col < n; ++col) {
    int p = col;
    while (p < n && is_zero(m(p, col))) ++p;
    if (p == n) return T();
    if (p != col) {
      for (int j = 0; j < n; ++j) std::swap(m(p, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    const T inv = inverse(m(col, col));
    for (int i = col + 1; i < n; ++i) {
      if (is_zero(m(i, col))) continue;
      const T f = m(i, col) * inv;
      for (int j = col; j < n; ++j)
        if (!is_zero(m(col, j))) m(i, j) -= f * m(col, j);
    }
  }
  return det;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& m, const T& one) {
  const int n = m.rows();
  if (n != m.cols()) throw InterfaceMismatch("inverse of a non-square matrix");
  Matrix<T> aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = one;
  }
  const auto pivots = rref(aug);
  if (int(pivots.size()) < n || pivots[std::size_t(n - 1)] != n - 1) throw DivisionByZero();
  Matrix<T> r(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r(i, j) = aug(i, n + j);
  return r;
}

// λ if m = λ·1.
template <class T>
std::optional<T> scalar_value(const Matrix<T>& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  if (m.rows() == 0) return std::nullopt;
  const T lam = m(0, 0);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      const T expect = i == j ? lam : T();
      if (!is_zero(m(i, j) - expect)) return std::nullopt;
    }
  return lam;
}

// Nullities of (m - λ)^j for j = 0, 1, ..., until they stabilise.
template <class T>
std::vector<int> nullity_sequence(const Matrix<T>& m, const T& lambda, const T& one) {
  const int n = m.rows();
  const Matrix<T> a = m - lambda * Matrix<T>::identity(n, one);
  std::vector<int> out{0};
  Matrix<T> p = Matrix<T>::identity(n, one);
  for (;;) {
    p = p * a;
    const int nul = n - rank(p);
    if (nul == out.back()) break;
    out.push_back(nul);
  }
  return out;
}

// Jordan block sizes for λ, largest first: the number of blocks of size ≥ j
// is nullity((m-λ)^j) - nullity((m-λ)^{j-1}).
std::vector<int> partition_from_nullities(const std::vector<int>& nullities);

}  // namespace tlcat
