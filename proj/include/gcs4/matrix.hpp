#ifndef GCS4_MATRIX_HPP
#define GCS4_MATRIX_HPP

#include "gcs4/gaussian.hpp"
#include "gcs4/rational.hpp"

#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace gcs4 {

template <typename T>
using Vec = std::vector<T>;

/// Dense row-major matrix over an exact scalar field (Rational or
/// GaussianRational). Small and immutable in spirit: operations return new
/// values; in-place mutation is limited to entry assignment during
/// construction phases.
template <typename T>
class Matrix {
public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    e_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw std::invalid_argument("Matrix: ragged initializer");
      for (const auto& x : row) e_.push_back(x);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const T& operator()(std::size_t i, std::size_t j) const {
    assert(i < rows_ && j < cols_);
    return e_[i * cols_ + j];
  }
  T& operator()(std::size_t i, std::size_t j) {
    assert(i < rows_ && j < cols_);
    return e_[i * cols_ + j];
  }

  Vec<T> row(std::size_t i) const {
    Vec<T> r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
  }
  Vec<T> col(std::size_t j) const {
    Vec<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }
  void set_row(std::size_t i, const Vec<T>& r) {
    assert(r.size() == cols_);
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = r[j];
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    for (const T& x : e_)
      if (!x.is_zero()) return false;
    return true;
  }
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }
  bool is_skew() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i; j < cols_; ++j)
        if ((*this)(i, j) != -(*this)(j, i)) return false;
    return true;
  }

  /// Copy the r x c block with top-left corner (i0, j0).
  Matrix block(std::size_t i0, std::size_t j0, std::size_t r, std::size_t c) const {
    assert(i0 + r <= rows_ && j0 + c <= cols_);
    Matrix b(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) b(i, j) = (*this)(i0 + i, j0 + j);
    return b;
  }
  void set_block(std::size_t i0, std::size_t j0, const Matrix& b) {
    assert(i0 + b.rows_ <= rows_ && j0 + b.cols_ <= cols_);
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) (*this)(i0 + i, j0 + j) = b(i, j);
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("Matrix: shape mismatch in +");
    Matrix s(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.e_.size(); ++k) s.e_[k] = a.e_[k] + b.e_[k];
    return s;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("Matrix: shape mismatch in -");
    Matrix s(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.e_.size(); ++k) s.e_[k] = a.e_[k] - b.e_[k];
    return s;
  }
  Matrix operator-() const {
    Matrix s(rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) s.e_[k] = -e_[k];
    return s;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: shape mismatch in *");
    Matrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += aik * b(k, j);
      }
    return p;
  }
  friend Matrix operator*(const T& s, const Matrix& a) {
    Matrix p(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.e_.size(); ++k) p.e_[k] = s * a.e_[k];
    return p;
  }

  /// Matrix-vector product (columns act on vector entries).
  friend Vec<T> operator*(const Matrix& a, const Vec<T>& v) {
    if (a.cols_ != v.size()) throw std::invalid_argument("Matrix: shape mismatch in m*v");
    Vec<T> r(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) r[i] += a(i, j) * v[j];
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  T trace() const {
    assert(is_square());
    T t{};
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  std::string str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
      os << (i ? ", [" : "[");
      for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
      os << ']';
    }
    os << ']';
    return os.str();
  }
  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) { return os << m.str(); }

private:
  std::size_t rows_, cols_;
  std::vector<T> e_;
};

using QMatrix = Matrix<Rational>;
using CMatrix = Matrix<GaussianRational>;
using QVec = Vec<Rational>;
using CVec = Vec<GaussianRational>;

/// Elementary matrix unit: sends basis vector j to basis vector i
/// (1 in row i, column j), the building block for all structure matrices.
template <typename T = Rational>
Matrix<T> unit_matrix(std::size_t n, std::size_t i, std::size_t j) {
  Matrix<T> m(n, n);
  m(i, j) = T(1);
  return m;
}

template <typename T>
Vec<T> operator+(const Vec<T>& a, const Vec<T>& b) {
  assert(a.size() == b.size());
  Vec<T> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}
template <typename T>
Vec<T> operator-(const Vec<T>& a, const Vec<T>& b) {
  assert(a.size() == b.size());
  Vec<T> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}
template <typename T>
Vec<T> operator*(const T& s, const Vec<T>& a) {
  Vec<T> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}
template <typename T>
Vec<T> operator-(const Vec<T>& a) {
  Vec<T> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}
template <typename T>
bool is_zero_vec(const Vec<T>& v) {
  for (const T& x : v)
    if (!x.is_zero()) return false;
  return true;
}
/// Plain bilinear dot product (no conjugation), the pairing used throughout.
template <typename T>
T dot(const Vec<T>& a, const Vec<T>& b) {
  assert(a.size() == b.size());
  T s{};
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// Real 4x4 (or nxn) matrix promoted entrywise to Q(i).
inline CMatrix complexify(const QMatrix& m) {
  CMatrix c(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) c(i, j) = GaussianRational(m(i, j));
  return c;
}
inline CVec complexify(const QVec& v) {
  CVec c(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) c[i] = GaussianRational(v[i]);
  return c;
}

}  // namespace gcs4

#endif
