#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <string>

#include "gcs4/gaussian.hpp"
#include "gcs4/lie_algebra.hpp"
#include "gcs4/matrix.hpp"

namespace gcs4 {

// An element of the complexified exterior algebra over the dual of a fixed
// 4-dimensional space: a formal sum over the 16 subsets of {e^1,..,e^4} with
// Gaussian rational coefficients. Mixed degrees are allowed (spinors live in
// the full even or odd part). Subsets are encoded as bitmasks, bit i for
// e^{i+1}, with the basis form of a mask being the wedge of its covectors in
// increasing order.
class CForm {
  public:
    static constexpr std::size_t kDim = 4;
    static constexpr std::size_t kMasks = 16;

    CForm() = default;

    static CForm scalar(const GaussianRational& c);
    // e^{i1} ^ e^{i2} ^ ... for 0-based indices in any order (sign adjusted);
    // repeated indices give zero.
    static CForm basis_form(std::initializer_list<std::size_t> idx,
                            const GaussianRational& c = GaussianRational(Rational(1)));
    static CForm one_form(const CVec& alpha);
    // From a skew matrix: sum of omega(i,j) e^{i+1} ^ e^{j+1} over i < j.
    static CForm two_form(const CMatrix& omega);
    static CForm two_form(const QMatrix& omega);

    const GaussianRational& coeff(std::size_t mask) const { return c_.at(mask); }
    GaussianRational& coeff(std::size_t mask) { return c_.at(mask); }

    bool is_zero() const;
    // Largest/smallest nonzero degree helpers and graded component.
    CForm component(std::size_t degree) const;
    bool is_homogeneous(std::size_t degree) const;

    CForm operator-() const;
    CForm& operator+=(const CForm& o);
    CForm& operator-=(const CForm& o);
    friend CForm operator+(CForm a, const CForm& b) { return a += b; }
    friend CForm operator-(CForm a, const CForm& b) { return a -= b; }
    friend CForm operator*(const GaussianRational& s, const CForm& a);
    friend bool operator==(const CForm& a, const CForm& b) { return a.c_ == b.c_; }
    friend bool operator!=(const CForm& a, const CForm& b) { return !(a == b); }

    // Interior product with a complex vector (coordinates in e_1..e_4).
    CForm contract(const CVec& x) const;
    CForm conj() const;

    // Coefficient vector over all 16 masks in increasing mask order.
    CVec flatten() const;
    static CForm unflatten(const CVec& coords);

    std::string str() const;

  private:
    std::array<GaussianRational, kMasks> c_{};
};

CForm wedge(const CForm& a, const CForm& b);

// Chevalley-Eilenberg differential of the (complexified) Lie algebra:
// (d alpha)(u, v) = -alpha([u, v]) on one-forms, extended as an
// anti-derivation.
CForm ce_d(const LieAlgebra& g, const CForm& w);

// Clifford action of x + xi on a form: (x + xi) . rho = i_x rho + xi ^ rho.
CForm clifford(const CVec& x, const CVec& xi, const CForm& rho);

// Algebra morphism on forms replacing each covector e^k by the k-th column
// of M (coordinates in the same covector basis): one-forms map linearly,
// higher degrees multiplicatively.
CForm map_covectors(const CMatrix& M, const CForm& w);
CForm map_covectors(const QMatrix& M, const CForm& w);

// (1 + B^ + B^B/2 + ...) ^ rho for a 2-form B; terminates in dimension 4.
CForm wedge_exponential(const CForm& B, const CForm& rho);

}  // namespace gcs4
