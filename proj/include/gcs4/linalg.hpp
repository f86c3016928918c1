#ifndef GCS4_LINALG_HPP
#define GCS4_LINALG_HPP

#include "gcs4/matrix.hpp"

#include <optional>
#include <tuple>
#include <utility>

namespace gcs4 {

/// Reduced row-echelon form, exact field arithmetic, pivoting rule fixed to
/// the first nonzero entry in column order — RREF output is the unique
/// canonical form for the row span, which Subspace relies on for equality.
template <typename T>
Matrix<T> rref(Matrix<T> m) {
  std::size_t pr = 0;
  for (std::size_t pc = 0; pc < m.cols() && pr < m.rows(); ++pc) {
    std::size_t piv = pr;
    while (piv < m.rows() && m(piv, pc).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != pr)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pr, j), m(piv, j));
    T inv = m(pr, pc).inverse();
    for (std::size_t j = pc; j < m.cols(); ++j) m(pr, j) = inv * m(pr, j);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == pr || m(i, pc).is_zero()) continue;
      T f = m(i, pc);
      for (std::size_t j = pc; j < m.cols(); ++j) m(i, j) -= f * m(pr, j);
    }
    ++pr;
  }
  return m;
}

/// Pivot column indices of an RREF matrix (one per nonzero row).
template <typename T>
std::vector<std::size_t> pivot_columns(const Matrix<T>& r) {
  std::vector<std::size_t> p;
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = p.empty() ? 0 : p.back() + 1; j < r.cols(); ++j)
      if (!r(i, j).is_zero()) {
        p.push_back(j);
        break;
      }
  return p;
}

template <typename T>
std::size_t rank(const Matrix<T>& m) {
  return pivot_columns(rref(m)).size();
}

/// Basis of {x : m x = 0}, one vector per free column, returned in RREF
/// (canonical) order as rows of the result.
template <typename T>
Matrix<T> kernel_basis(const Matrix<T>& m) {
  Matrix<T> r = rref(m);
  std::vector<std::size_t> piv = pivot_columns(r);
  std::vector<bool> is_piv(m.cols(), false);
  for (std::size_t p : piv) is_piv[p] = true;

  std::vector<Vec<T>> basis;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (is_piv[j]) continue;
    Vec<T> v(m.cols());
    v[j] = T(1);
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r(i, j);
    basis.push_back(std::move(v));
  }
  Matrix<T> k(basis.size(), m.cols());
  for (std::size_t i = 0; i < basis.size(); ++i) k.set_row(i, basis[i]);
  return rref(k);
}

/// One solution x of m x = b, or nullopt when b is outside the column span.
template <typename T>
std::optional<Vec<T>> solve(const Matrix<T>& m, const Vec<T>& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: dimension mismatch");
  Matrix<T> aug(m.rows(), m.cols() + 1);
  aug.set_block(0, 0, m);
  for (std::size_t i = 0; i < m.rows(); ++i) aug(i, m.cols()) = b[i];
  Matrix<T> r = rref(aug);
  std::vector<std::size_t> piv = pivot_columns(r);
  if (!piv.empty() && piv.back() == m.cols()) return std::nullopt;  // row [0..0|1]
  Vec<T> x(m.cols());
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = r(i, m.cols());
  return x;
}

/// Exact inverse; throws on singular input.
template <typename T>
Matrix<T> inverse(const Matrix<T>& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse: not square");
  std::size_t n = m.rows();
  Matrix<T> aug(n, 2 * n);
  aug.set_block(0, 0, m);
  aug.set_block(0, n, Matrix<T>::identity(n));
  Matrix<T> r = rref(aug);
  if (r.block(0, 0, n, n) != Matrix<T>::identity(n)) throw std::domain_error("inverse: singular matrix");
  return r.block(0, n, n, n);
}

/// A linear subspace of T^n held in canonical form: the basis matrix is the
/// RREF of whatever spanning set built it, so equal spans compare equal.
template <typename T>
class Subspace {
public:
  Subspace() : ambient_(0) {}
  explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

  /// Span of the rows of `gens` (need not be independent).
  static Subspace row_span(const Matrix<T>& gens) {
    Subspace s(gens.cols());
    Matrix<T> r = rref(gens);
    std::size_t rk = pivot_columns(r).size();
    s.basis_ = r.block(0, 0, rk, gens.cols());
    return s;
  }
  static Subspace span(std::size_t ambient, const std::vector<Vec<T>>& gens) {
    Matrix<T> g(gens.size(), ambient);
    for (std::size_t i = 0; i < gens.size(); ++i) g.set_row(i, gens[i]);
    return row_span(g);
  }
  static Subspace zero(std::size_t ambient) { return Subspace(ambient); }
  static Subspace full(std::size_t ambient) { return row_span(Matrix<T>::identity(ambient)); }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix<T>& basis() const { return basis_; }
  Vec<T> basis_vector(std::size_t i) const { return basis_.row(i); }

  bool contains(const Vec<T>& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("Subspace: ambient mismatch");
    Matrix<T> stacked(dim() + 1, ambient_);
    stacked.set_block(0, 0, basis_);
    stacked.set_row(dim(), v);
    return rank(stacked) == dim();
  }
  bool contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw std::invalid_argument("Subspace: ambient mismatch");
    return sum(*this, other).dim() == dim();
  }

  friend Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_) throw std::invalid_argument("Subspace: ambient mismatch");
    Matrix<T> stacked(a.dim() + b.dim(), a.ambient_);
    stacked.set_block(0, 0, a.basis_);
    stacked.set_block(a.dim(), 0, b.basis_);
    return row_span(stacked);
  }

  /// Intersection via double annihilator: V = ker(K_V)^perp for the plain
  /// bilinear dot pairing, so V cap W = perp of (V^perp + W^perp).
  friend Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_) throw std::invalid_argument("Subspace: ambient mismatch");
    Matrix<T> ka = kernel_basis(a.basis_);
    Matrix<T> kb = kernel_basis(b.basis_);
    Matrix<T> stacked(ka.rows() + kb.rows(), a.ambient_);
    stacked.set_block(0, 0, ka);
    stacked.set_block(ka.rows(), 0, kb);
    return row_span(kernel_basis(stacked));
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
  std::size_t ambient_;
  Matrix<T> basis_;
};

/// dim(big/small); throws when small is not contained in big.
template <typename T>
std::size_t quotient_dim(const Subspace<T>& big, const Subspace<T>& small) {
  if (!big.contains(small)) throw std::invalid_argument("quotient_dim: small is not a subspace of big");
  return big.dim() - small.dim();
}

using QSubspace = Subspace<Rational>;
using CSubspace = Subspace<GaussianRational>;

/// Result of a congruence diagonalization P^T s P = D.
struct CongruenceResult {
  QVec diagonal;        ///< entries of D
  QMatrix transform;    ///< the invertible P
  int positives = 0, negatives = 0, zeros = 0;

  bool positive_definite() const { return zeros == 0 && negatives == 0; }
};

/// Diagonalize a symmetric rational matrix by congruence (no eigenvalues —
/// signature only needs Sylvester's law). Zero diagonal pivots with a nonzero
/// off-diagonal entry are repaired by the symmetric row+column addition trick.
CongruenceResult congruence_diagonalize(const QMatrix& s);

}  // namespace gcs4

#endif
