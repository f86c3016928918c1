#include "gcs4/linalg.hpp"

#include <stdexcept>

namespace gcs4 {

namespace {

// s <- E^T s E and p <- p E for the elementary operation "col_k += f * col_j"
// (mirrored on rows to keep s symmetric).
void add_col_row(QMatrix& s, QMatrix& p, std::size_t k, std::size_t j, const Rational& f) {
  std::size_t n = s.rows();
  for (std::size_t i = 0; i < n; ++i) s(i, k) += f * s(i, j);
  for (std::size_t i = 0; i < n; ++i) s(k, i) += f * s(j, i);
  for (std::size_t i = 0; i < n; ++i) p(i, k) += f * p(i, j);
}

}  // namespace

CongruenceResult congruence_diagonalize(const QMatrix& s0) {
  if (!s0.is_symmetric()) throw std::invalid_argument("congruence_diagonalize: matrix not symmetric");
  std::size_t n = s0.rows();
  QMatrix s = s0;
  QMatrix p = QMatrix::identity(n);

  for (std::size_t k = 0; k < n; ++k) {
    if (s(k, k).is_zero()) {
      // Repair a zero pivot with col_k += f*col_j (mirrored on rows): the new
      // pivot is f^2 s(j,j) + 2f s(k,j), and f = 1 or f = -1 always makes it
      // nonzero unless s(j,j) and s(k,j) both vanish (characteristic zero).
      for (std::size_t j = k + 1; j < n && s(k, k).is_zero(); ++j) {
        if (s(j, j).is_zero() && s(k, j).is_zero()) continue;
        Rational with_plus = s(j, j) + Rational(2) * s(k, j);
        add_col_row(s, p, k, j, with_plus.is_zero() ? Rational(-1) : Rational(1));
      }
      if (s(k, k).is_zero()) continue;  // row/col k entirely zero from k on
    }
    for (std::size_t j = k + 1; j < n; ++j) {
      if (s(k, j).is_zero()) continue;
      add_col_row(s, p, j, k, -s(k, j) / s(k, k));
    }
  }

  CongruenceResult r;
  r.transform = p;
  r.diagonal.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    r.diagonal[i] = s(i, i);
    int sg = s(i, i).sign();
    if (sg > 0) ++r.positives;
    else if (sg < 0) ++r.negatives;
    else ++r.zeros;
  }
  return r;
}

}  // namespace gcs4
