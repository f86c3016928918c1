#include "gcs4/gcs.hpp"

#include <cassert>
#include <stdexcept>

#include "gcs4/linalg.hpp"

namespace gcs4 {

namespace {

constexpr std::size_t kN = 4;

QVec vector_part(const QVec& a) {
    QVec x(kN);
    for (std::size_t i = 0; i < kN; ++i) x[i] = a[i];
    return x;
}

QVec covector_part(const QVec& a) {
    QVec xi(kN);
    for (std::size_t i = 0; i < kN; ++i) xi[i] = a[kN + i];
    return xi;
}

QVec join(const QVec& x, const QVec& xi) {
    QVec a(2 * kN);
    for (std::size_t i = 0; i < kN; ++i) {
        a[i] = x[i];
        a[kN + i] = xi[i];
    }
    return a;
}

bool is_skew(const QMatrix& m) { return m.transpose() == -m; }

QVec basis_vec(std::size_t n, std::size_t k) {
    QVec v(n);
    v[k] = Rational(1);
    return v;
}

CVec complexify_vec(const QVec& v) {
    CVec w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = GaussianRational(v[i]);
    return w;
}

// Degree-1 part of a real-coefficient form as a rational covector.
QVec real_one_form_coords(const CForm& f) {
    QVec xi(kN);
    for (std::size_t i = 0; i < kN; ++i) {
        const GaussianRational& c = f.coeff(1u << i);
        assert(c.is_real());
        xi[i] = c.re();
    }
    return xi;
}

GaussianRational scalar_part(const CForm& f) { return f.coeff(0); }

// Vector-field Nijenhuis torsion of an endomorphism (literal J^2 term).
QVec endo_nijenhuis(const LieAlgebra& g, const QMatrix& J, const QVec& u, const QVec& v) {
    return g.bracket(J * u, J * v) - J * g.bracket(J * u, v) - J * g.bracket(u, J * v) +
           (J * J) * g.bracket(u, v);
}

}  // namespace

QMatrix pairing_matrix() {
    QMatrix p(2 * kN, 2 * kN);
    const Rational half(1, 2);
    for (std::size_t i = 0; i < kN; ++i) {
        p(i, kN + i) = half;
        p(kN + i, i) = half;
    }
    return p;
}

Rational neutral_pairing(const QVec& a, const QVec& b) {
    Rational s;
    for (std::size_t i = 0; i < kN; ++i)
        s = s + Rational(1, 2) * (a[kN + i] * b[i] + b[kN + i] * a[i]);
    return s;
}

QVec double_bracket(const LieAlgebra& g, const QVec& a, const QVec& b) {
    QVec x = vector_part(a), y = vector_part(b);
    QVec xi = covector_part(a), eta = covector_part(b);
    return join(g.bracket(x, y), g.coad(x) * eta - g.coad(y) * xi);
}

QMatrix build_K(const Triple& t) {
    QMatrix k(2 * kN, 2 * kN);
    k.set_block(0, 0, t.J);
    k.set_block(0, kN, t.R);
    k.set_block(kN, 0, t.sigma);
    k.set_block(kN, kN, -t.J.transpose());
    return k;
}

AlmostReport almost_structure_check(const Triple& t) {
    AlmostReport rep;
    rep.r_skew = is_skew(t.R);
    rep.sigma_skew = is_skew(t.sigma);
    QMatrix k = build_K(t);
    rep.squares_to_minus_id = (k * k == -QMatrix::identity(2 * kN));
    return rep;
}

QVec nijenhuis_double(const LieAlgebra& g, const QMatrix& K, const QVec& a, const QVec& b) {
    return double_bracket(g, K * a, K * b) - K * double_bracket(g, K * a, b) -
           K * double_bracket(g, a, K * b) + (K * K) * double_bracket(g, a, b);
}

bool nijenhuis_vanishes(const LieAlgebra& g, const Triple& t) {
    QMatrix k = build_K(t);
    for (std::size_t i = 0; i < 2 * kN; ++i)
        for (std::size_t j = i + 1; j < 2 * kN; ++j) {
            QVec n = nijenhuis_double(g, k, basis_vec(2 * kN, i), basis_vec(2 * kN, j));
            if (!is_zero_vec(n)) return false;
        }
    return true;
}

CForm form_of_map(const QMatrix& m) { return CForm::two_form(m.transpose()); }

ConditionReport integrability_conditions(const LieAlgebra& g, const Triple& t) {
    ConditionReport rep;
    if (!is_skew(t.R) || !is_skew(t.sigma)) return rep;
    const QMatrix& J = t.J;
    const QMatrix& R = t.R;
    const QMatrix& S = t.sigma;
    QMatrix Jt = J.transpose();

    rep.c0 = (J * J + R * S == -QMatrix::identity(kN)) && (J * R == R * Jt) && (S * J == Jt * S);

    // Schouten square of R on basis covector triples.
    rep.c1 = true;
    for (std::size_t i = 0; i < kN && rep.c1; ++i)
        for (std::size_t j = i + 1; j < kN && rep.c1; ++j)
            for (std::size_t k = j + 1; k < kN && rep.c1; ++k) {
                QVec ri = R.col(i), rj = R.col(j), rk = R.col(k);
                Rational s = g.bracket(rj, rk)[i] + g.bracket(rk, ri)[j] + g.bracket(ri, rj)[k];
                if (!s.is_zero()) rep.c1 = false;
            }

    // J^t as a morphism of the R-bracket on covectors.
    auto r_bracket = [&](const QVec& alpha, const QVec& beta) {
        return g.coad(R * alpha) * beta - g.coad(R * beta) * alpha;
    };
    rep.c2 = true;
    for (std::size_t i = 0; i < kN && rep.c2; ++i)
        for (std::size_t j = i + 1; j < kN && rep.c2; ++j) {
            QVec alpha = basis_vec(kN, i), beta = basis_vec(kN, j);
            QVec lhs = Jt * r_bracket(alpha, beta);
            QVec rhs = g.coad(R * alpha) * (Jt * beta) - g.coad(R * beta) * (Jt * alpha);
            if (!is_zero_vec(lhs - rhs)) rep.c2 = false;
        }

    // Nijenhuis defect of J against the differential of the sigma form.
    CForm dsb = ce_d(g, form_of_map(S));
    rep.c3 = true;
    for (std::size_t i = 0; i < kN && rep.c3; ++i)
        for (std::size_t j = i + 1; j < kN && rep.c3; ++j) {
            QVec u = basis_vec(kN, i), v = basis_vec(kN, j);
            CForm contracted = dsb.contract(complexify_vec(u)).contract(complexify_vec(v));
            QVec rhs = R * real_one_form_coords(contracted);
            if (!is_zero_vec(endo_nijenhuis(g, J, u, v) - rhs)) rep.c3 = false;
        }

    // d of sigma twisted by J versus the J-twist of d sigma; the twist is a
    // 2-form only when sigma J = J^t sigma, which c0 already records.
    QMatrix SJ = S * J;
    if (is_skew(SJ)) {
        CForm lhs3 = ce_d(g, form_of_map(SJ));
        auto eval3 = [](const CForm& w, const CVec& u, const CVec& v, const CVec& z) {
            return scalar_part(w.contract(u).contract(v).contract(z));
        };
        rep.c4 = true;
        for (std::size_t i = 0; i < kN && rep.c4; ++i)
            for (std::size_t j = i + 1; j < kN && rep.c4; ++j)
                for (std::size_t k = j + 1; k < kN && rep.c4; ++k) {
                    CVec u = complexify_vec(basis_vec(kN, i));
                    CVec v = complexify_vec(basis_vec(kN, j));
                    CVec w = complexify_vec(basis_vec(kN, k));
                    CVec Ju = complexify_vec(J * basis_vec(kN, i));
                    CVec Jv = complexify_vec(J * basis_vec(kN, j));
                    CVec Jw = complexify_vec(J * basis_vec(kN, k));
                    GaussianRational rhs =
                        eval3(dsb, Ju, v, w) + eval3(dsb, u, Jv, w) + eval3(dsb, u, v, Jw);
                    if (eval3(lhs3, u, v, w) != rhs) rep.c4 = false;
                }
    }
    return rep;
}

bool is_gcs(const LieAlgebra& g, const Triple& t) {
    return almost_structure_check(t).ok() && nijenhuis_vanishes(g, t);
}

int type_by_rank(const Triple& t) {
    std::size_t r = rank(t.R);
    assert(r % 2 == 0);
    return static_cast<int>((kN - r) / 2);
}

CForm annihilator_spinor(const Triple& t) {
    if (!almost_structure_check(t).ok())
        throw std::invalid_argument("annihilator_spinor: not an almost structure");
    QMatrix K = build_K(t);
    const GaussianRational im(Rational(0), Rational(1));

    // Stack the Clifford action of the spanning set {w - i K w} of the +i
    // eigenspace; its kernel is the spinor line.
    CMatrix sys(2 * kN * CForm::kMasks, CForm::kMasks);
    for (std::size_t w = 0; w < 2 * kN; ++w) {
        QVec e = basis_vec(2 * kN, w);
        QVec ke = K * e;
        CVec x(kN), xi(kN);
        for (std::size_t i = 0; i < kN; ++i) {
            x[i] = GaussianRational(e[i]) - im * GaussianRational(ke[i]);
            xi[i] = GaussianRational(e[kN + i]) - im * GaussianRational(ke[kN + i]);
        }
        for (std::size_t mask = 0; mask < CForm::kMasks; ++mask) {
            CForm basis;
            basis.coeff(mask) = GaussianRational(Rational(1));
            CVec acted = clifford(x, xi, basis).flatten();
            for (std::size_t out = 0; out < CForm::kMasks; ++out)
                sys(w * CForm::kMasks + out, mask) = acted[out];
        }
    }
    CMatrix ker = kernel_basis(sys);
    if (ker.rows() != 1) throw std::domain_error("annihilator_spinor: spinor line not unique");
    CForm rho = CForm::unflatten(ker.row(0));
    for (std::size_t mask = 0; mask < CForm::kMasks; ++mask)
        if (!rho.coeff(mask).is_zero()) return rho.coeff(mask).inverse() * rho;
    throw std::domain_error("annihilator_spinor: zero spinor");
}

int type_by_spinor(const Triple& t) {
    CForm rho = annihilator_spinor(t);
    for (std::size_t d = 0; d <= kN; ++d)
        if (!rho.component(d).is_zero()) return static_cast<int>(d);
    throw std::domain_error("type_by_spinor: zero spinor");
}

bool projectively_equal(const CForm& a, const CForm& b) {
    GaussianRational ca, cb;
    for (std::size_t mask = 0; mask < CForm::kMasks; ++mask) {
        bool za = a.coeff(mask).is_zero(), zb = b.coeff(mask).is_zero();
        if (za != zb) return false;
        if (!za && ca.is_zero()) {
            ca = a.coeff(mask);
            cb = b.coeff(mask);
        }
    }
    if (ca.is_zero()) return true;  // both zero
    for (std::size_t mask = 0; mask < CForm::kMasks; ++mask)
        if (a.coeff(mask) * cb != b.coeff(mask) * ca) return false;
    return true;
}

std::optional<QVec> spinor_exactness_section(const LieAlgebra& g, const CForm& rho) {
    CForm target = ce_d(g, rho);
    // 32 real equations (real and imaginary coefficient parts) in the 8 real
    // coordinates of the section.
    QMatrix sys(2 * CForm::kMasks, 2 * kN);
    QVec b(2 * CForm::kMasks);
    for (std::size_t j = 0; j < 2 * kN; ++j) {
        CVec x(kN), xi(kN);
        if (j < kN)
            x[j] = GaussianRational(Rational(1));
        else
            xi[j - kN] = GaussianRational(Rational(1));
        CVec col = clifford(x, xi, rho).flatten();
        for (std::size_t m = 0; m < CForm::kMasks; ++m) {
            sys(m, j) = col[m].re();
            sys(CForm::kMasks + m, j) = col[m].im();
        }
    }
    CVec tgt = target.flatten();
    for (std::size_t m = 0; m < CForm::kMasks; ++m) {
        b[m] = tgt[m].re();
        b[CForm::kMasks + m] = tgt[m].im();
    }
    return solve(sys, b);
}

CForm rank2_spinor(const Triple& t) {
    if (!is_skew(t.R) || !is_skew(t.sigma))
        throw std::invalid_argument("rank2_spinor: R and sigma must be skew");
    if (rank(t.R) != 2 || rank(t.sigma) != 2)
        throw std::invalid_argument("rank2_spinor: R and sigma must have rank 2");

    QMatrix p_basis = kernel_basis(t.sigma);       // rows: basis of ker sigma
    QMatrix p_ann = kernel_basis(p_basis);         // rows: covectors killing ker sigma
    assert(p_basis.rows() == 2 && p_ann.rows() == 2);
    QVec xi1 = p_ann.row(0), xi2 = p_ann.row(1);
    QVec h1 = t.R * xi1, h2 = t.R * xi2;

    QMatrix h_rows(2, kN);
    h_rows.set_row(0, h1);
    h_rows.set_row(1, h2);
    if (rank(h_rows) != 2) throw std::domain_error("rank2_spinor: R degenerate on the annihilator");

    // J must be scalar on Im R; extract the scalar.
    std::size_t piv = 0;
    while (h1[piv].is_zero()) ++piv;
    QVec jh1 = t.J * h1;
    Rational lambda = jh1[piv] / h1[piv];
    if (!is_zero_vec(jh1 - lambda * h1) || !is_zero_vec(t.J * h2 - lambda * h2))
        throw std::domain_error("rank2_spinor: J is not scalar on Im R");

    // The 2-form that kills ker sigma and contracts R-images back to minus
    // their covectors, expressed first in the adapted basis.
    QMatrix adapted(kN, kN);
    for (std::size_t i = 0; i < kN; ++i) {
        adapted(i, 0) = h1[i];
        adapted(i, 1) = h2[i];
        adapted(i, 2) = p_basis.row(0)[i];
        adapted(i, 3) = p_basis.row(1)[i];
    }
    QMatrix w_adapted(kN, kN);
    Rational c = -dot(xi1, h2);
    w_adapted(0, 1) = c;
    w_adapted(1, 0) = -c;
    QMatrix back = inverse(adapted);
    QMatrix w_std = back.transpose() * w_adapted * back;
    CForm omega = CForm::two_form(w_std);

    QVec theta = kernel_basis(h_rows).row(0);  // annihilator of Im R
    QVec jtheta = t.J.transpose() * theta;
    CVec big_theta(kN);
    for (std::size_t i = 0; i < kN; ++i)
        big_theta[i] = GaussianRational(theta[i], jtheta[i]);
    CForm theta_form = CForm::one_form(big_theta);
    GaussianRational i_minus_lambda(-lambda, Rational(1));
    return theta_form + i_minus_lambda * wedge(omega, theta_form);
}

bool is_calabi_yau(const LieAlgebra& g, const Triple& t) {
    return ce_d(g, annihilator_spinor(t)).is_zero();
}

Triple apply_automorphism(const LieAlgebra& g, const QMatrix& A, const Triple& t) {
    if (!g.is_automorphism(A))
        throw std::invalid_argument("apply_automorphism: not an automorphism");
    QMatrix ainv = inverse(A);
    return Triple(A * t.J * ainv, A * t.R * A.transpose(),
                  ainv.transpose() * t.sigma * ainv);
}

bool is_two_cocycle(const LieAlgebra& g, const QMatrix& B) {
    if (B.rows() != kN || B.cols() != kN || !is_skew(B)) return false;
    for (std::size_t i = 0; i < kN; ++i)
        for (std::size_t j = i + 1; j < kN; ++j)
            for (std::size_t k = j + 1; k < kN; ++k) {
                QVec bij = B * g.basis_bracket(i, j);
                QVec bjk = B * g.basis_bracket(j, k);
                QVec bki = B * g.basis_bracket(k, i);
                if (!(bij[k] + bjk[i] + bki[j]).is_zero()) return false;
            }
    return true;
}

Triple apply_b_transform(const LieAlgebra& g, const QMatrix& B, const Triple& t) {
    if (!is_two_cocycle(g, B)) throw std::invalid_argument("apply_b_transform: not a 2-cocycle");
    QMatrix Jt = t.J.transpose();
    return Triple(t.J - t.R * B, t.R, B * t.J + t.sigma - B * t.R * B + Jt * B);
}

Triple transport(const QMatrix& F, const Triple& t) {
    QMatrix finv = inverse(F);  // throws on singular F
    return Triple(finv * t.J * F, finv * t.R * finv.transpose(),
                  F.transpose() * t.sigma * F);
}

Triple negate_bivector(const Triple& t) { return Triple(t.J, -t.R, -t.sigma); }

PoissonReport holomorphic_poisson_check(const LieAlgebra& g, const QMatrix& J, const QMatrix& R) {
    PoissonReport rep;
    rep.r_invertible = is_skew(R) && rank(R) == kN;
    rep.j_squares = (J * J == -QMatrix::identity(kN));
    rep.jr_compatible = (J * R == R * J.transpose());
    rep.nj_zero = true;
    for (std::size_t i = 0; i < kN && rep.nj_zero; ++i)
        for (std::size_t j = i + 1; j < kN && rep.nj_zero; ++j)
            if (!is_zero_vec(endo_nijenhuis(g, J, basis_vec(kN, i), basis_vec(kN, j))))
                rep.nj_zero = false;
    if (rep.r_invertible) {
        QMatrix rinv = inverse(R);
        rep.omega_closed = ce_d(g, form_of_map(rinv)).is_zero();
        if (rep.jr_compatible) {
            QMatrix twisted = rinv * J;
            assert(is_skew(twisted));
            rep.omega_j_closed = ce_d(g, form_of_map(twisted)).is_zero();
        }
    }
    return rep;
}

QuadMatrix::QuadMatrix(const Rational& radicand, QMatrix rational_part, QMatrix radical_part)
    : m(radicand), rat(std::move(rational_part)), irr(std::move(radical_part)) {
    if (rat.rows() != irr.rows() || rat.cols() != irr.cols())
        throw std::invalid_argument("QuadMatrix: mismatched part shapes");
}

QuadMatrix::QuadMatrix(const QMatrix& rational_part)
    : m(0), rat(rational_part), irr(QMatrix(rational_part.rows(), rational_part.cols())) {}

namespace {
Rational field_radicand(const QuadMatrix& a, const QuadMatrix& b) {
    auto zero = [](const QMatrix& m) {
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                if (!m(i, j).is_zero()) return false;
        return true;
    };
    if (a.m == b.m) return a.m;
    if (zero(a.irr)) return b.m;
    if (zero(b.irr)) return a.m;
    throw std::invalid_argument("QuadMatrix: mixing different radicands");
}
}  // namespace

QuadMatrix quad_mul(const QuadMatrix& a, const QuadMatrix& b) {
    Rational m = field_radicand(a, b);
    return QuadMatrix(m, a.rat * b.rat + m * (a.irr * b.irr), a.rat * b.irr + a.irr * b.rat);
}

QuadMatrix quad_transpose(const QuadMatrix& a) {
    return QuadMatrix(a.m, a.rat.transpose(), a.irr.transpose());
}

bool quad_is_invertible(const QuadMatrix& t) {
    // Multiplication by t as a rational-linear map on pairs (x, y) standing
    // for x + sqrt(m) y; full rank is exact invertibility for nonsquare m.
    std::size_t n = t.rat.rows();
    QMatrix real(2 * n, 2 * n);
    real.set_block(0, 0, t.rat);
    real.set_block(0, n, t.m * t.irr);
    real.set_block(n, 0, t.irr);
    real.set_block(n, n, t.rat);
    return rank(real) == 2 * n;
}

bool quad_is_automorphism(const LieAlgebra& g, const QuadMatrix& t) {
    if (!quad_is_invertible(t)) return false;
    for (std::size_t i = 0; i < kN; ++i)
        for (std::size_t j = i + 1; j < kN; ++j) {
            QVec br = g.basis_bracket(i, j);
            QVec rat_lhs = t.rat * br;
            QVec irr_lhs = t.irr * br;
            QVec rat_rhs = g.bracket(t.rat.col(i), t.rat.col(j)) +
                           t.m * g.bracket(t.irr.col(i), t.irr.col(j));
            QVec irr_rhs = g.bracket(t.rat.col(i), t.irr.col(j)) +
                           g.bracket(t.irr.col(i), t.rat.col(j));
            if (!is_zero_vec(rat_lhs - rat_rhs) || !is_zero_vec(irr_lhs - irr_rhs)) return false;
        }
    return true;
}

bool quad_conjugates(const QuadMatrix& t, const Triple& source, const Triple& target) {
    if (!quad_is_invertible(t)) return false;
    const QMatrix &T0 = t.rat, &T1 = t.irr;
    QMatrix T0t = T0.transpose(), T1t = T1.transpose();
    // target.J T = T source.J
    if (target.J * T0 != T0 * source.J || target.J * T1 != T1 * source.J) return false;
    // target.R = T source.R T^t
    if (T0 * source.R * T0t + t.m * (T1 * source.R * T1t) != target.R) return false;
    QMatrix r_rad = T0 * source.R * T1t + T1 * source.R * T0t;
    // source.sigma = T^t target.sigma T
    QMatrix s_rat = T0t * target.sigma * T0 + t.m * (T1t * target.sigma * T1);
    QMatrix s_rad = T0t * target.sigma * T1 + T1t * target.sigma * T0;
    if (s_rat != source.sigma) return false;
    for (std::size_t i = 0; i < kN; ++i)
        for (std::size_t j = 0; j < kN; ++j)
            if (!r_rad(i, j).is_zero() || !s_rad(i, j).is_zero()) return false;
    return true;
}

}  // namespace gcs4
