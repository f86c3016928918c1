#pragma once

#include "gcs4/expr.hpp"
#include "gcs4/gcs.hpp"
#include "gcs4/lie_algebra.hpp"
#include "gcs4/linalg.hpp"
#include "gcs4/triple.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace gcs4 {

// A candidate generalized Kahler pair: two generalized complex structures on
// the same Lie algebra. Nothing is validated at construction time; the
// functions below report on commutation, positivity and type constraints.
struct KahlerPair {
    Triple first, second;
};

/// True when the two block endomorphisms commute on g (+) g*.
bool pair_commutes(const KahlerPair& p);

/// The symmetric bilinear form G(u, v) = <K1 K2 u, v> as an 8x8 matrix in the
/// basis (e_1..e_4, e^1..e^4), where <.,.> is the split pairing. Throws
/// std::invalid_argument unless the endomorphisms commute (G would not be
/// symmetric otherwise).
QMatrix pair_metric(const KahlerPair& p);

/// Positive definiteness of the pair metric, decided exactly by congruence
/// diagonalization. Throws on non-commuting pairs.
bool is_positive_pair(const KahlerPair& p);

/// Value of the component form of the positivity condition at (X, xi):
///
///   (J2^t xi - sigma2 X)(J1 X + R1 xi) + (J1^t xi - sigma1 X)(J2 X + R2 xi)
///
/// with each summand read as a duality pairing g* x g -> Q. For commuting
/// pairs this equals 2 G(u, u) with u = X + xi, so it is positive on every
/// nonzero argument exactly when the pair metric is positive definite.
Rational positivity_value(const KahlerPair& p, const QVec& x, const QVec& xi);

struct PositivityReport {
    bool commute = false;
    bool positive = false;            ///< pair metric is positive definite
    bool matches_twice_metric = false;///< positivity_value == 2 G(u,u) on all samples
    bool witness_consistent = false;  ///< samples (plus a congruence witness when
                                      ///< G is indefinite) agree with `positive`
    int samples = 0;
    bool ok() const { return commute && matches_twice_metric && witness_consistent; }
};

/// Samples the component positivity form at random nonzero arguments and at a
/// definiteness witness extracted from the congruence diagonalization, and
/// cross-checks it against the pair metric.
PositivityReport positivity_check(const KahlerPair& p, int samples, std::uint64_t seed);

struct TypeCompatibilityReport {
    int type_first = -1, type_second = -1;
    bool types_admissible = false;     ///< when neither type is 2: types are equal
    int image_intersection_dim = -1;   ///< dim(Im R1 /\ Im R2)
    bool images_transverse = false;    ///< Im R1 /\ Im R2 = {0}
    bool ok() const {
        if (!types_admissible) return false;
        if (type_first == 1 && type_second == 1) return images_transverse;
        return true;
    }
};

/// Checks the type constraints a positive commuting pair must satisfy: if
/// neither structure has type 2 the types agree, and a type (1,1) pair has
/// transverse bivector images.
TypeCompatibilityReport type_compatibility(const KahlerPair& p);

/// A classified pair together with the algebra carrying it.
struct ClassifiedPair {
    LieAlgebra algebra;
    KahlerPair pair;
};

/// The classified type (1,1) pairs. `name` is one of the catalogue keys
/// "A3_6+A1", "A2+2A1", "2A2", "A4_6"; parameters: "rho" > 0 (all, default 1),
/// "r" > 0 (2A2 only, default 1), "alpha" != 0 (A4_6 only, mandatory; the
/// underlying algebra is A4_6 with beta = 0). Throws std::invalid_argument on
/// unknown names or out-of-range parameters.
ClassifiedPair classified_type11_pair(const std::string& name, const ParamMap& params);

struct ZeroTypeScanReport {
    int structures = 0;   ///< base type-0 structures scanned
    int pairs = 0;        ///< candidate pairs formed
    int commuting = 0;    ///< pairs whose endomorphisms commute
    int positive = 0;     ///< commuting pairs with positive definite metric
    std::vector<std::string> positive_cases;  ///< labels of positive pairs (expected empty)
};

/// Finite search for a positive pair of type (0,0): takes every structure with
/// invertible bivector and vanishing 2-form from the classification, pairs it
/// with itself, its bivector negation, and shears of both by invariant
/// 2-cocycles at sampled coefficients, and reports how many candidate pairs
/// commute and how many are positive. A clean run reports none positive.
ZeroTypeScanReport zero_type_pair_scan();

// ---------------------------------------------------------------------------
// Left-invariant Riemannian data

/// A left-invariant metric, stored as the Gram matrix of the basis.
struct InvariantMetric {
    QMatrix g;
    InvariantMetric() : g(QMatrix::identity(4)) {}
    explicit InvariantMetric(QMatrix gram) : g(std::move(gram)) {}
    bool symmetric() const;
    bool positive_definite() const;
};

/// Levi-Civita connection of a left-invariant metric: entry i is the matrix of
/// nabla_{e_i} acting on basis columns. Determined by the six-term formula
/// 2<nabla_u v, w> = <[u,v],w> - <[v,w],u> + <[w,u],v>. Throws
/// std::invalid_argument unless the metric is symmetric and invertible.
std::vector<QMatrix> levi_civita(const LieAlgebra& g, const InvariantMetric& m);

/// Curvature endomorphism R(e_i, e_j) = [nabla_i, nabla_j] - nabla_{[e_i,e_j]}
/// computed from a previously assembled connection.
QMatrix curvature_endo(const LieAlgebra& g, const std::vector<QMatrix>& nabla, int i, int j);

/// True when every curvature endomorphism vanishes.
bool is_flat(const LieAlgebra& g, const InvariantMetric& m);

/// Ricci operator Q = g^{-1} ric with ric(u,v) = tr(z -> R(z,u)v).
QMatrix ricci_operator(const LieAlgebra& g, const InvariantMetric& m);

// ---------------------------------------------------------------------------
// Bihermitian data attached to the classified type (1,1) pairs

struct BihermitianData {
    LieAlgebra algebra;
    InvariantMetric metric;
    QMatrix i_plus, i_minus;
    QMatrix expected_ricci;  ///< the published Ricci operator for this case
    BihermitianData() : i_plus(4, 4), i_minus(4, 4), expected_ricci(4, 4) {}
};

/// The bihermitian triple (g, I+, I-) attached to a classified pair; `name`
/// and `params` as in classified_type11_pair.
BihermitianData bihermitian_data(const std::string& name, const ParamMap& params);

struct BihermitianReport {
    bool metric_positive = false;
    bool complex_structures = false;   ///< both I's square to -Id and are torsion-free
    bool hermitian = false;            ///< g(I.,I.) = g for both
    bool opposite = false;             ///< I- = -I+
    bool kahler_form_closed = false;   ///< d(g(I+ ., .)) = 0
    bool ricci_matches = false;        ///< computed Ricci equals the published one
    bool flat = false;                 ///< every curvature endomorphism vanishes
    QMatrix ricci;                     ///< computed Ricci operator
    BihermitianReport() : ricci(4, 4) {}
    bool ok() const {
        return metric_positive && complex_structures && hermitian && opposite &&
               kahler_form_closed && ricci_matches;
    }
};

/// Validates the bihermitian data of a classified pair and compares its Ricci
/// operator with the published value.
BihermitianReport bihermitian_check(const std::string& name, const ParamMap& params);

}  // namespace gcs4
