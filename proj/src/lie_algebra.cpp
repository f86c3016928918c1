#include "gcs4/lie_algebra.hpp"

#include <stdexcept>

namespace gcs4 {

LieAlgebra::LieAlgebra(std::size_t dim) : dim_(dim) {
    c_.assign(dim, std::vector<QVec>(dim, QVec(dim, Rational(0))));
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, const QVec& value) {
    if (i >= dim_ || j >= dim_ || value.size() != dim_)
        throw std::invalid_argument("set_bracket: index or vector size out of range");
    if (i == j && !is_zero_vec(value))
        throw std::invalid_argument("set_bracket: [e_i, e_i] must vanish");
    c_[i][j] = value;
    c_[j][i] = -value;
}

const QVec& LieAlgebra::basis_bracket(std::size_t i, std::size_t j) const {
    return c_[i][j];
}

QVec LieAlgebra::bracket(const QVec& u, const QVec& v) const {
    if (u.size() != dim_ || v.size() != dim_)
        throw std::invalid_argument("bracket: vector size mismatch");
    QVec out(dim_, Rational(0));
    for (std::size_t i = 0; i < dim_; ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (v[j].is_zero()) continue;
            Rational f = u[i] * v[j];
            for (std::size_t k = 0; k < dim_; ++k) out[k] += f * c_[i][j][k];
        }
    }
    return out;
}

QMatrix LieAlgebra::ad(const QVec& u) const {
    QMatrix m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        QVec ej(dim_, Rational(0));
        ej[j] = Rational(1);
        QVec col = bracket(u, ej);
        for (std::size_t k = 0; k < dim_; ++k) m(k, j) = col[k];
    }
    return m;
}

QMatrix LieAlgebra::ad_basis(std::size_t i) const {
    QVec u(dim_, Rational(0));
    u[i] = Rational(1);
    return ad(u);
}

QMatrix LieAlgebra::coad(const QVec& u) const { return -ad(u).transpose(); }

std::vector<LieAlgebra::JacobiViolation> LieAlgebra::jacobi_violations() const {
    std::vector<JacobiViolation> out;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i + 1; j < dim_; ++j)
            for (std::size_t k = j + 1; k < dim_; ++k) {
                // cyclic sum [[e_j,e_k],e_i] + [[e_k,e_i],e_j] + [[e_i,e_j],e_k]
                QVec ei(dim_, Rational(0)), ej(dim_, Rational(0)), ek(dim_, Rational(0));
                ei[i] = Rational(1);
                ej[j] = Rational(1);
                ek[k] = Rational(1);
                QVec sum = bracket(c_[j][k], ei) + bracket(c_[k][i], ej) + bracket(c_[i][j], ek);
                if (!is_zero_vec(sum)) out.push_back({i, j, k, sum});
            }
    return out;
}

bool LieAlgebra::is_unimodular() const {
    for (std::size_t i = 0; i < dim_; ++i)
        if (!ad_basis(i).trace().is_zero()) return false;
    return true;
}

QMatrix LieAlgebra::killing_form() const {
    std::vector<QMatrix> ads;
    ads.reserve(dim_);
    for (std::size_t i = 0; i < dim_; ++i) ads.push_back(ad_basis(i));
    QMatrix k(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i; j < dim_; ++j) {
            Rational t = (ads[i] * ads[j]).trace();
            k(i, j) = t;
            k(j, i) = t;
        }
    return k;
}

QSubspace LieAlgebra::derived_subalgebra() const {
    std::vector<QVec> gens;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i + 1; j < dim_; ++j)
            if (!is_zero_vec(c_[i][j])) gens.push_back(c_[i][j]);
    return QSubspace::span(dim_, gens);
}

QSubspace LieAlgebra::center() const {
    // u is central iff ad(e_i) u = 0 for all i; stack the ad matrices and
    // take the kernel.
    QMatrix stacked(dim_ * dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        stacked.set_block(i * dim_, 0, ad_basis(i));
    return QSubspace::row_span(kernel_basis(stacked));
}

bool LieAlgebra::is_automorphism(const QMatrix& T) const {
    return is_isomorphism_onto(*this, T);
}

bool LieAlgebra::is_isomorphism_onto(const LieAlgebra& target, const QMatrix& F) const {
    if (F.rows() != target.dim() || F.cols() != dim_) return false;
    if (rank(F) != dim_ || dim_ != target.dim()) return false;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i + 1; j < dim_; ++j) {
            QVec fi = F.col(i), fj = F.col(j);
            QVec lhs = F * c_[i][j];
            QVec rhs = target.bracket(fi, fj);
            if (!(is_zero_vec(lhs - rhs))) return false;
        }
    return true;
}

QVec LieAlgebra::skew_to_coords(const QMatrix& B) {
    std::size_t n = B.rows();
    QVec out;
    out.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) out.push_back(B(i, j));
    return out;
}

QMatrix LieAlgebra::coords_to_skew(std::size_t dim, const QVec& coords) {
    QMatrix b(dim, dim);
    std::size_t idx = 0;
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j) {
            b(i, j) = coords[idx];
            b(j, i) = -coords[idx];
            ++idx;
        }
    return b;
}

QSubspace LieAlgebra::two_cocycle_space() const {
    // Closedness of a skew form B is linear in its upper-triangle
    // coordinates: for each basis triple (i, j, k),
    //   B([e_i,e_j], e_k) + B([e_j,e_k], e_i) + B([e_k,e_i], e_j) = 0.
    std::size_t ncoords = dim_ * (dim_ - 1) / 2;
    std::vector<QVec> rows;
    auto coord_index = [&](std::size_t a, std::size_t b) {
        // index of the (min,max) pair in lexicographic order, with sign
        std::size_t lo = a < b ? a : b, hi = a < b ? b : a;
        std::size_t idx = 0;
        for (std::size_t i = 0; i < lo; ++i) idx += dim_ - 1 - i;
        idx += hi - lo - 1;
        return idx;
    };
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i + 1; j < dim_; ++j)
            for (std::size_t k = j + 1; k < dim_; ++k) {
                QVec row(ncoords, Rational(0));
                struct Term {
                    const QVec* br;
                    std::size_t other;
                };
                Term terms[3] = {{&c_[i][j], k}, {&c_[j][k], i}, {&c_[k][i], j}};
                for (const auto& t : terms)
                    for (std::size_t m = 0; m < dim_; ++m) {
                        if ((*t.br)[m].is_zero() || m == t.other) continue;
                        Rational sign = m < t.other ? Rational(1) : Rational(-1);
                        row[coord_index(m, t.other)] += sign * (*t.br)[m];
                    }
                rows.push_back(row);
            }
    QMatrix sys(rows.size(), ncoords);
    for (std::size_t r = 0; r < rows.size(); ++r) sys.set_row(r, rows[r]);
    return QSubspace::row_span(kernel_basis(sys));
}

}  // namespace gcs4
