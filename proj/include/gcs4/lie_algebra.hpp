#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gcs4/linalg.hpp"
#include "gcs4/matrix.hpp"
#include "gcs4/rational.hpp"

namespace gcs4 {

// A finite dimensional real Lie algebra given by its structure constants
// over a fixed basis (e_1, ..., e_n).  Brackets are stored as
// [e_i, e_j] = sum_k c[i][j][k] e_k with antisymmetry enforced at build
// time.  All coefficients are exact rationals.
class LieAlgebra {
public:
    explicit LieAlgebra(std::size_t dim = 0);

    std::size_t dim() const { return dim_; }

    // Sets [e_i, e_j] (0-indexed) to the given coordinate vector and
    // [e_j, e_i] to its negative.  Throws std::invalid_argument on i == j
    // with a nonzero value or on dimension mismatch.
    void set_bracket(std::size_t i, std::size_t j, const QVec& value);

    const QVec& basis_bracket(std::size_t i, std::size_t j) const;

    // Bilinear extension of the basis brackets.
    QVec bracket(const QVec& u, const QVec& v) const;

    // Matrix of ad_u : v -> [u, v] acting on coordinate vectors.
    QMatrix ad(const QVec& u) const;
    QMatrix ad_basis(std::size_t i) const;

    // Matrix of the coadjoint action on g* characterized by
    // <coad_u(alpha), v> = -<alpha, [u, v]>; equals -ad(u)^t.
    QMatrix coad(const QVec& u) const;

    // Jacobi identity report: empty list means the brackets define a Lie
    // algebra; otherwise each entry holds a violating basis triple and the
    // nonzero cyclic sum.
    struct JacobiViolation {
        std::size_t i, j, k;
        QVec residual;
    };
    std::vector<JacobiViolation> jacobi_violations() const;
    bool is_lie_algebra() const { return jacobi_violations().empty(); }

    // Unimodularity: trace(ad_u) = 0 for all u.
    bool is_unimodular() const;

    // Killing form K(u, v) = trace(ad_u ad_v) as a symmetric matrix over
    // the chosen basis.
    QMatrix killing_form() const;

    // Derived subalgebra [g, g] as a subspace of coordinate vectors.
    QSubspace derived_subalgebra() const;
    QSubspace center() const;

    // T is an automorphism when it is invertible and T[u,v] = [Tu, Tv].
    bool is_automorphism(const QMatrix& T) const;

    // F maps this algebra onto `target` (columns of F are the images of
    // the basis vectors expressed in the target basis) iff F is invertible
    // and F[u,v] = [Fu, Fv]_target.
    bool is_isomorphism_onto(const LieAlgebra& target, const QMatrix& F) const;

    // Space of closed 2-forms: skew bilinear B with
    // B([u,v],w) + B([v,w],u) + B([w,u],v) = 0.  Basis returned as a
    // subspace of skew matrices flattened to vectors of upper-triangle
    // coordinates (B(e_i,e_j) for i<j in lexicographic order).
    QSubspace two_cocycle_space() const;

    // Helpers between skew matrices and their upper-triangle coordinates.
    static QVec skew_to_coords(const QMatrix& B);
    static QMatrix coords_to_skew(std::size_t dim, const QVec& coords);

private:
    std::size_t dim_;
    std::vector<std::vector<QVec>> c_;
};

}  // namespace gcs4
