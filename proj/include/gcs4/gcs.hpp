#pragma once

#include <optional>

#include "gcs4/exterior.hpp"
#include "gcs4/lie_algebra.hpp"
#include "gcs4/matrix.hpp"
#include "gcs4/triple.hpp"

namespace gcs4 {

// The double of a 4-dimensional Lie algebra: 8-coordinate vectors (X | xi)
// holding a vector X and a covector xi. It carries the split-signature
// pairing <X+xi, Y+eta> = (1/2)(xi(Y) + eta(X)) and the bracket
// [X+xi, Y+eta] = [X,Y] + coad(X)eta - coad(Y)xi, which is a Lie bracket
// whenever the underlying algebra is one.

QMatrix pairing_matrix();  // 8x8 matrix of the split pairing
Rational neutral_pairing(const QVec& a, const QVec& b);
QVec double_bracket(const LieAlgebra& g, const QVec& a, const QVec& b);

// Endomorphism of the double built from a triple: [[J, R], [sigma, -J^t]].
QMatrix build_K(const Triple& t);

struct AlmostReport {
    bool r_skew = false;
    bool sigma_skew = false;
    bool squares_to_minus_id = false;
    bool ok() const { return r_skew && sigma_skew && squares_to_minus_id; }
};
// Pointwise conditions: R, sigma skew (equivalent to K being skew for the
// pairing) and K^2 = -Id.
AlmostReport almost_structure_check(const Triple& t);

QVec nijenhuis_double(const LieAlgebra& g, const QMatrix& K, const QVec& a, const QVec& b);
// N_K(a,b) = [Ka,Kb] - K[Ka,b] - K[a,Kb] + K^2[a,b] vanishes on all pairs.
bool nijenhuis_vanishes(const LieAlgebra& g, const Triple& t);

// Component conditions equivalent to the vanishing of N_K for an almost
// structure: block identities, the Schouten square of R, the R-bracket
// compatibility of J^t, the Nijenhuis defect of J against d(sigma form),
// and closedness compatibility of sigma twisted by J.
struct ConditionReport {
    bool c0 = false;  // J^2 + R sigma = -Id, JR = RJ^t, sigma J = J^t sigma
    bool c1 = false;  // [R,R] = 0
    bool c2 = false;  // J^t is a morphism for the R-bracket on covectors
    bool c3 = false;  // N_J(u,v) = R(i_{u^v} d sigma^b)
    bool c4 = false;  // d sigma_J = sum of d sigma^b twisted by J
    bool all() const { return c0 && c1 && c2 && c3 && c4; }
};
ConditionReport integrability_conditions(const LieAlgebra& g, const Triple& t);

bool is_gcs(const LieAlgebra& g, const Triple& t);

// The 2-form associated to a skew map m: g -> g*, (u,v) -> (m u)(v).
CForm form_of_map(const QMatrix& m);

// Type of the structure: 0 for invertible R (symplectic-like), 1 for rank-2
// R, 2 for R = 0 (complex-like).
int type_by_rank(const Triple& t);

// Canonical spinor line: the one-dimensional space of forms annihilated by
// the +i eigenspace of K under the Clifford action, normalized so the first
// nonzero coefficient is 1. Requires the almost conditions.
CForm annihilator_spinor(const Triple& t);
// Lowest nonzero degree of the canonical spinor; agrees with type_by_rank.
int type_by_spinor(const Triple& t);
bool projectively_equal(const CForm& a, const CForm& b);

// A real section X+xi with d rho = (X+xi).rho, when one exists. Existence
// is equivalent to integrability of an almost structure with spinor rho.
std::optional<QVec> spinor_exactness_section(const LieAlgebra& g, const CForm& rho);

// Closed-form spinor of a rank-2 structure: rho = (1 + (i-lambda) omega) ^
// (theta + i J^t theta) with theta annihilating Im R, J = lambda Id on Im R,
// i_X omega = 0 on ker sigma and i_{R xi} omega = -xi on the annihilator of
// ker sigma. Throws unless the triple has type 1 and J|_{Im R} is scalar.
CForm rank2_spinor(const Triple& t);

// d rho = 0, i.e. the structure is generalized Calabi-Yau.
bool is_calabi_yau(const LieAlgebra& g, const Triple& t);

// Conjugation by an automorphism A: (AJA^{-1}, ARA^t, A^{-t} sigma A^{-1}).
// Throws if A is not an automorphism of g.
Triple apply_automorphism(const LieAlgebra& g, const QMatrix& A, const Triple& t);

// Skew B: g -> g* with cyclic sum B([u,v])(w) + B([v,w])(u) + B([w,u])(v)=0.
bool is_two_cocycle(const LieAlgebra& g, const QMatrix& B);

// Shear by a 2-cocycle B: (J - RB, R, BJ + sigma - BRB + J^t B).
// Throws if B is not a 2-cocycle of g.
Triple apply_b_transform(const LieAlgebra& g, const QMatrix& B, const Triple& t);

// Pull back a triple through a change of basis F whose columns express the
// new basis in the old coordinates: (F^{-1}JF, F^{-1}RF^{-t}, F^t sigma F).
// Throws on singular F.
Triple transport(const QMatrix& F, const Triple& t);

Triple negate_bivector(const Triple& t);  // (J, -R, -sigma), always again a GCS

// sigma = 0 forces R invertible; the pair (J, R) is then a structure exactly
// when J^2 = -Id, N_J = 0, JR = RJ^t and both omega and omega_J are closed,
// where omega(u,v) = (R^{-1}u)(v) and omega_J(u,v) = omega(Ju, v).
struct PoissonReport {
    bool r_invertible = false;
    bool j_squares = false;
    bool nj_zero = false;
    bool jr_compatible = false;
    bool omega_closed = false;
    bool omega_j_closed = false;
    bool ok() const {
        return r_invertible && j_squares && nj_zero && jr_compatible && omega_closed &&
               omega_j_closed;
    }
};
PoissonReport holomorphic_poisson_check(const LieAlgebra& g, const QMatrix& J, const QMatrix& R);

// Matrices over the quadratic extension Q(sqrt(m)): rat + sqrt(m) * irr.
// Used to verify conjugations whose matrices involve a single square root,
// without ever inverting: identities are split into rational and radical
// parts and checked exactly.
struct QuadMatrix {
    Rational m;
    QMatrix rat, irr;
    QuadMatrix(const Rational& radicand, QMatrix rational_part, QMatrix radical_part);
    explicit QuadMatrix(const QMatrix& rational_part);  // m = 0 embedding
};
QuadMatrix quad_mul(const QuadMatrix& a, const QuadMatrix& b);
QuadMatrix quad_transpose(const QuadMatrix& a);
bool quad_is_invertible(const QuadMatrix& t);
bool quad_is_automorphism(const LieAlgebra& g, const QuadMatrix& t);
// Whether conjugating `source` by T gives `target`, i.e. target.J T = T
// source.J, target.R = T source.R T^t and source.sigma = T^t target.sigma T,
// with T invertible. Equivalent to apply_automorphism when T is rational.
bool quad_conjugates(const QuadMatrix& t, const Triple& source, const Triple& target);

}  // namespace gcs4
