#include "gcs4/exterior.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace gcs4 {

namespace {

// Sign of e^S ^ e^T as a reordering of the concatenation S,T into increasing
// order: (-1)^{number of pairs (s in S, t in T) with s > t}.
int merge_sign(std::size_t s, std::size_t t) {
    int inversions = 0;
    for (std::size_t i = 0; i < CForm::kDim; ++i)
        if (t & (1u << i)) {
            std::size_t higher = s >> (i + 1);
            inversions += std::popcount(static_cast<unsigned>(higher));
        }
    return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

CForm CForm::scalar(const GaussianRational& c) {
    CForm f;
    f.c_[0] = c;
    return f;
}

CForm CForm::basis_form(std::initializer_list<std::size_t> idx, const GaussianRational& c) {
    CForm f;
    std::size_t mask = 0;
    int sign = 1;
    for (std::size_t i : idx) {
        if (i >= kDim) throw std::invalid_argument("CForm: index out of range");
        std::size_t bit = 1u << i;
        if (mask & bit) return f;  // repeated covector wedges to zero
        sign *= merge_sign(mask, bit);
        mask |= bit;
    }
    f.c_[mask] = sign == 1 ? c : -c;
    return f;
}

CForm CForm::one_form(const CVec& alpha) {
    if (alpha.size() != kDim) throw std::invalid_argument("CForm: covector size");
    CForm f;
    for (std::size_t i = 0; i < kDim; ++i) f.c_[1u << i] = alpha[i];
    return f;
}

CForm CForm::two_form(const CMatrix& omega) {
    if (omega.rows() != kDim || omega.cols() != kDim)
        throw std::invalid_argument("CForm: 2-form matrix size");
    CForm f;
    for (std::size_t i = 0; i < kDim; ++i)
        for (std::size_t j = i + 1; j < kDim; ++j) f.c_[(1u << i) | (1u << j)] = omega(i, j);
    return f;
}

CForm CForm::two_form(const QMatrix& omega) { return two_form(complexify(omega)); }

bool CForm::is_zero() const {
    for (const auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

CForm CForm::component(std::size_t degree) const {
    CForm out;
    for (std::size_t m = 0; m < kMasks; ++m)
        if (std::popcount(static_cast<unsigned>(m)) == static_cast<int>(degree)) out.c_[m] = c_[m];
    return out;
}

bool CForm::is_homogeneous(std::size_t degree) const { return *this == component(degree); }

CForm CForm::operator-() const {
    CForm out;
    for (std::size_t m = 0; m < kMasks; ++m) out.c_[m] = -c_[m];
    return out;
}

CForm& CForm::operator+=(const CForm& o) {
    for (std::size_t m = 0; m < kMasks; ++m) c_[m] = c_[m] + o.c_[m];
    return *this;
}

CForm& CForm::operator-=(const CForm& o) {
    for (std::size_t m = 0; m < kMasks; ++m) c_[m] = c_[m] - o.c_[m];
    return *this;
}

CForm operator*(const GaussianRational& s, const CForm& a) {
    CForm out;
    for (std::size_t m = 0; m < CForm::kMasks; ++m) out.c_[m] = s * a.c_[m];
    return out;
}

CForm wedge(const CForm& a, const CForm& b) {
    CForm out;
    for (std::size_t s = 0; s < CForm::kMasks; ++s) {
        if (a.coeff(s).is_zero()) continue;
        for (std::size_t t = 0; t < CForm::kMasks; ++t) {
            if (b.coeff(t).is_zero() || (s & t)) continue;
            GaussianRational term = a.coeff(s) * b.coeff(t);
            out.coeff(s | t) =
                out.coeff(s | t) + (merge_sign(s, t) == 1 ? term : -term);
        }
    }
    return out;
}

CForm CForm::contract(const CVec& x) const {
    if (x.size() != kDim) throw std::invalid_argument("CForm: vector size");
    CForm out;
    for (std::size_t m = 0; m < kMasks; ++m) {
        if (c_[m].is_zero()) continue;
        int pos = 0;  // position of bit i within the increasing list of m
        for (std::size_t i = 0; i < kDim; ++i) {
            if (!(m & (1u << i))) continue;
            if (!x[i].is_zero()) {
                GaussianRational term = x[i] * c_[m];
                std::size_t rest = m & ~(1u << i);
                out.c_[rest] = out.c_[rest] + (pos % 2 == 0 ? term : -term);
            }
            ++pos;
        }
    }
    return out;
}

CForm CForm::conj() const {
    CForm out;
    for (std::size_t m = 0; m < kMasks; ++m) out.c_[m] = c_[m].conj();
    return out;
}

CVec CForm::flatten() const {
    CVec v(kMasks);
    for (std::size_t m = 0; m < kMasks; ++m) v[m] = c_[m];
    return v;
}

CForm CForm::unflatten(const CVec& coords) {
    if (coords.size() != kMasks) throw std::invalid_argument("CForm: flatten size");
    CForm f;
    for (std::size_t m = 0; m < kMasks; ++m) f.c_[m] = coords[m];
    return f;
}

std::string CForm::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t m = 0; m < kMasks; ++m) {
        if (c_[m].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c_[m].str() << ")";
        if (m != 0) {
            os << " e^{";
            for (std::size_t i = 0; i < kDim; ++i)
                if (m & (1u << i)) os << (i + 1);
            os << "}";
        }
    }
    if (first) os << "0";
    return os.str();
}

CForm ce_d(const LieAlgebra& g, const CForm& w) {
    if (g.dim() != CForm::kDim) throw std::invalid_argument("ce_d: dimension mismatch");
    // d e^k = - sum_{i<j} c^k_{ij} e^i ^ e^j
    std::array<CForm, CForm::kDim> d1;
    for (std::size_t i = 0; i < CForm::kDim; ++i)
        for (std::size_t j = i + 1; j < CForm::kDim; ++j) {
            const QVec& cij = g.basis_bracket(i, j);
            for (std::size_t k = 0; k < CForm::kDim; ++k)
                if (cij[k] != Rational(0))
                    d1[k] += CForm::basis_form({i, j}, GaussianRational(-cij[k]));
        }

    CForm out;
    for (std::size_t m = 0; m < CForm::kMasks; ++m) {
        if (w.coeff(m).is_zero()) continue;
        int pos = 0;
        for (std::size_t i = 0; i < CForm::kDim; ++i) {
            if (!(m & (1u << i))) continue;
            CForm rest;
            rest.coeff(m & ~(1u << i)) = w.coeff(m);
            CForm term = wedge(d1[i], rest);
            out += pos % 2 == 0 ? term : -term;
            ++pos;
        }
    }
    return out;
}

CForm clifford(const CVec& x, const CVec& xi, const CForm& rho) {
    return rho.contract(x) + wedge(CForm::one_form(xi), rho);
}

CForm map_covectors(const CMatrix& M, const CForm& w) {
    if (M.rows() != CForm::kDim || M.cols() != CForm::kDim)
        throw std::invalid_argument("map_covectors: matrix size");
    std::array<CForm, CForm::kDim> images;
    for (std::size_t k = 0; k < CForm::kDim; ++k) images[k] = CForm::one_form(M.col(k));
    CForm out;
    for (std::size_t m = 0; m < CForm::kMasks; ++m) {
        if (w.coeff(m).is_zero()) continue;
        CForm term = CForm::scalar(w.coeff(m));
        for (std::size_t i = 0; i < CForm::kDim; ++i)
            if (m & (1u << i)) term = wedge(term, images[i]);
        out += term;
    }
    return out;
}

CForm map_covectors(const QMatrix& M, const CForm& w) { return map_covectors(complexify(M), w); }

CForm wedge_exponential(const CForm& B, const CForm& rho) {
    CForm out = rho;
    CForm power = B;
    Rational factorial(1);
    for (std::size_t k = 1; k <= CForm::kDim / 2; ++k) {
        factorial = factorial * Rational(static_cast<long>(k));
        out += GaussianRational(Rational(1) / factorial) * wedge(power, rho);
        power = wedge(power, B);
    }
    return out;
}

}  // namespace gcs4
