#include "gcs4/kahler.hpp"

#include "gcs4/catalogue.hpp"
#include "gcs4/embedded_data.hpp"
#include "gcs4/exterior.hpp"
#include "gcs4/json_io.hpp"

#include <json.hpp>

#include <cassert>
#include <random>
#include <stdexcept>

namespace gcs4 {

namespace {

constexpr std::size_t kN = 4;

// e_j |-> e_i, both 1-indexed.
QMatrix elem(int i, int j) {
    QMatrix m(kN, kN);
    m(i - 1, j - 1) = Rational(1);
    return m;
}

// Shared matrix of the induced maps of f_i ^ f_j (on covectors) and
// f^i ^ f^j (on vectors): entry (j-1, i-1) = 1, entry (i-1, j-1) = -1.
QMatrix pair_unit(int i, int j) {
    QMatrix m(kN, kN);
    m(j - 1, i - 1) = Rational(1);
    m(i - 1, j - 1) = Rational(-1);
    return m;
}

Rational quadratic(const QMatrix& G, const QVec& u) {
    return dot(u, G * u);
}

Rational param_or(const ParamMap& params, const std::string& key, const Rational& fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

}  // namespace

bool pair_commutes(const KahlerPair& p) {
    const QMatrix k1 = build_K(p.first), k2 = build_K(p.second);
    return k1 * k2 == k2 * k1;
}

QMatrix pair_metric(const KahlerPair& p) {
    if (!pair_commutes(p))
        throw std::invalid_argument("pair_metric: the two structures do not commute");
    const QMatrix prod = build_K(p.first) * build_K(p.second);
    QMatrix G = prod.transpose() * pairing_matrix();
    assert(G.is_symmetric());
    return G;
}

bool is_positive_pair(const KahlerPair& p) {
    return congruence_diagonalize(pair_metric(p)).positive_definite();
}

Rational positivity_value(const KahlerPair& p, const QVec& x, const QVec& xi) {
    const Triple& a = p.first;
    const Triple& b = p.second;
    const QVec left1 = b.J.transpose() * xi - b.sigma * x;
    const QVec right1 = a.J * x + a.R * xi;
    const QVec left2 = a.J.transpose() * xi - a.sigma * x;
    const QVec right2 = b.J * x + b.R * xi;
    return dot(left1, right1) + dot(left2, right2);
}

PositivityReport positivity_check(const KahlerPair& p, int samples, std::uint64_t seed) {
    PositivityReport rep;
    rep.commute = pair_commutes(p);
    if (!rep.commute) return rep;

    const QMatrix G = pair_metric(p);
    const auto diag = congruence_diagonalize(G);
    rep.positive = diag.positive_definite();

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(-3, 3);

    std::vector<QVec> args;
    for (std::size_t k = 0; k < 2 * kN; ++k) {  // basis directions first
        QVec u(2 * kN);
        u[k] = Rational(1);
        args.push_back(u);
    }
    while (args.size() < static_cast<std::size_t>(samples)) {
        QVec u(2 * kN);
        for (std::size_t k = 0; k < 2 * kN; ++k) u[k] = Rational(coeff(rng));
        if (!is_zero_vec(u)) args.push_back(u);
    }
    // When G is indefinite or degenerate the congruence transform hands us an
    // explicit direction of non-positivity; add it so the sample set is a
    // faithful witness either way.
    if (!rep.positive) {
        for (std::size_t k = 0; k < diag.diagonal.size(); ++k) {
            if (diag.diagonal[k] > Rational(0)) continue;
            QVec u(2 * kN);
            for (std::size_t r = 0; r < 2 * kN; ++r) u[r] = diag.transform(r, k);
            args.push_back(u);
            break;
        }
    }

    rep.matches_twice_metric = true;
    bool all_positive = true;
    bool found_nonpositive = false;
    for (const QVec& u : args) {
        QVec x(kN), xi(kN);
        for (std::size_t k = 0; k < kN; ++k) {
            x[k] = u[k];
            xi[k] = u[kN + k];
        }
        const Rational value = positivity_value(p, x, xi);
        if (value != Rational(2) * quadratic(G, u)) rep.matches_twice_metric = false;
        if (value <= Rational(0)) {
            all_positive = false;
            found_nonpositive = true;
        }
    }
    rep.samples = static_cast<int>(args.size());
    rep.witness_consistent = rep.positive ? all_positive : found_nonpositive;
    return rep;
}

TypeCompatibilityReport type_compatibility(const KahlerPair& p) {
    TypeCompatibilityReport rep;
    rep.type_first = type_by_rank(p.first);
    rep.type_second = type_by_rank(p.second);
    rep.types_admissible = (rep.type_first == 2 || rep.type_second == 2)
                               ? true
                               : rep.type_first == rep.type_second;

    // dim(Im R1 /\ Im R2) = rank R1 + rank R2 - rank [R1 | R2].
    QMatrix stacked(kN, 2 * kN);
    stacked.set_block(0, 0, p.first.R);
    stacked.set_block(0, kN, p.second.R);
    const int r1 = rank(p.first.R), r2 = rank(p.second.R);
    rep.image_intersection_dim = r1 + r2 - rank(stacked);
    rep.images_transverse = rep.image_intersection_dim == 0;
    return rep;
}

ClassifiedPair classified_type11_pair(const std::string& name, const ParamMap& params) {
    const Rational rho = param_or(params, "rho", Rational(1));
    if (rho <= Rational(0))
        throw std::invalid_argument("classified_type11_pair: rho must be positive");
    const Rational rho_inv = rho.inverse();

    ClassifiedPair out;
    KahlerPair& p = out.pair;
    if (name == "A3_6+A1") {
        out.algebra = Catalogue::instance().build("A3_6+A1", {}).algebra;
        p.first = Triple(elem(1, 2) - elem(2, 1), -pair_unit(3, 4), -pair_unit(3, 4));
        p.second = Triple(rho * elem(4, 3) - rho_inv * elem(3, 4), pair_unit(1, 2),
                          pair_unit(1, 2));
    } else if (name == "A2+2A1") {
        out.algebra = Catalogue::instance().build("A2+2A1", {}).algebra;
        p.first = Triple(elem(3, 4) - elem(4, 3), -pair_unit(1, 2), -pair_unit(1, 2));
        p.second = Triple(rho * elem(2, 1) - rho_inv * elem(1, 2), pair_unit(3, 4),
                          pair_unit(3, 4));
    } else if (name == "2A2") {
        const Rational r = param_or(params, "r", Rational(1));
        if (r <= Rational(0))
            throw std::invalid_argument("classified_type11_pair: r must be positive");
        out.algebra = Catalogue::instance().build("2A2", {}).algebra;
        p.first = Triple(elem(3, 4) - elem(4, 3), -pair_unit(1, 2), -pair_unit(1, 2));
        p.second = Triple(rho * elem(2, 1) - rho_inv * elem(1, 2), r * pair_unit(3, 4),
                          r.inverse() * pair_unit(3, 4));
    } else if (name == "A4_6") {
        auto it = params.find("alpha");
        if (it == params.end())
            throw std::invalid_argument("classified_type11_pair: A4_6 needs alpha");
        out.algebra =
            Catalogue::instance().build("A4_6", {{"alpha", it->second}, {"beta", Rational(0)}})
                .algebra;
        p.first = Triple(elem(2, 3) - elem(3, 2), -pair_unit(1, 4), -pair_unit(1, 4));
        p.second = Triple(rho * elem(4, 1) - rho_inv * elem(1, 4), pair_unit(2, 3),
                          pair_unit(2, 3));
    } else {
        throw std::invalid_argument("classified_type11_pair: unknown case " + name);
    }
    return out;
}

namespace {

struct ZeroTypeCase {
    std::string cocycle_id;   // row in the cocycle listing
    std::string family;
    ParamMap params;
    Triple triple;
};

std::vector<ZeroTypeCase> zero_type_cases() {
    std::vector<ZeroTypeCase> cases;
    {
        ZeroTypeCase c;
        c.cocycle_id = "A3_1+A1";
        c.family = "A3_1+A1";
        c.triple = Triple(elem(4, 1) - elem(1, 4) + elem(3, 2) - elem(2, 3),
                          pair_unit(1, 2) + pair_unit(3, 4), QMatrix(kN, kN));
        cases.push_back(c);
    }
    {
        ZeroTypeCase c;
        c.cocycle_id = "A4_5.alpha=-1.beta=1";
        c.family = "A4_5";
        c.params = {{"alpha", Rational(-1)}, {"beta", Rational(1)}};
        c.triple = Triple(elem(3, 1) - elem(1, 3) + elem(4, 2) - elem(2, 4),
                          pair_unit(2, 3) - pair_unit(1, 4), QMatrix(kN, kN));
        cases.push_back(c);
    }
    // The one-parameter circle of bivectors: two rational points on it.
    const Rational half(1, 2);
    const std::vector<std::pair<Rational, Rational>> angles = {
        {Rational(1), Rational(0)}, {Rational(3, 5), Rational(4, 5)}};
    for (const auto& [c_th, s_th] : angles) {
        ZeroTypeCase c;
        c.cocycle_id = "A4_9.beta=-1/2";
        c.family = "A4_9";
        c.params = {{"beta", -half}};
        const QMatrix r = c_th * (pair_unit(2, 4) - half * pair_unit(1, 3)) +
                          s_th * (pair_unit(1, 4) + half * pair_unit(2, 3));
        c.triple = Triple(elem(2, 1) - elem(1, 2) + Rational(2) * elem(4, 3) - half * elem(3, 4),
                          r, QMatrix(kN, kN));
        cases.push_back(c);
    }
    {
        ZeroTypeCase c;
        c.cocycle_id = "A4_12";
        c.family = "A4_12";
        c.triple = Triple(elem(1, 2) - elem(2, 1) + elem(4, 3) - elem(3, 4),
                          pair_unit(2, 3) - pair_unit(1, 4), QMatrix(kN, kN));
        cases.push_back(c);
    }
    return cases;
}

// Cocycle basis for one listed case, as induced maps g -> g*.
std::vector<QMatrix> cocycle_basis(const std::string& id) {
    static const auto doc = nlohmann::ordered_json::parse(data::get("cocycles.json"));
    for (const auto& entry : doc.at("cases")) {
        if (entry.at("id").get<std::string>() != id) continue;
        std::vector<QMatrix> basis;
        for (const auto& gen : entry.at("generators")) {
            QMatrix b(kN, kN);
            for (auto it = gen.begin(); it != gen.end(); ++it) {
                const std::string& key = it.key();
                assert(key.size() == 2);
                const int i = key[0] - '0', j = key[1] - '0';
                b = b + io::rational_from_json(it.value()) * pair_unit(i, j);
            }
            basis.push_back(b);
        }
        return basis;
    }
    throw std::invalid_argument("cocycle_basis: no case " + id);
}

}  // namespace

ZeroTypeScanReport zero_type_pair_scan() {
    ZeroTypeScanReport rep;
    for (const ZeroTypeCase& c : zero_type_cases()) {
        const LieAlgebra g = Catalogue::instance().build(c.family, c.params).algebra;
        assert(is_gcs(g, c.triple) && type_by_rank(c.triple) == 0);
        ++rep.structures;

        const std::vector<QMatrix> basis = cocycle_basis(c.cocycle_id);
        const std::vector<Triple> bases = {c.triple, negate_bivector(c.triple)};

        std::vector<Triple> candidates;
        for (const Triple& s : bases) {
            candidates.push_back(s);
            QMatrix total(kN, kN);
            for (const QMatrix& b : basis) {
                for (int coeff : {1, -1, 2})
                    candidates.push_back(apply_b_transform(g, Rational(coeff) * b, s));
                total = total + b;
            }
            candidates.push_back(apply_b_transform(g, total, s));
        }

        for (const Triple& first : bases) {
            for (const Triple& second : candidates) {
                ++rep.pairs;
                KahlerPair p{first, second};
                if (!pair_commutes(p)) continue;
                ++rep.commuting;
                if (is_positive_pair(p)) {
                    ++rep.positive;
                    rep.positive_cases.push_back(c.cocycle_id);
                }
            }
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Left-invariant Riemannian data

bool InvariantMetric::symmetric() const { return g.is_symmetric(); }

bool InvariantMetric::positive_definite() const {
    return symmetric() && congruence_diagonalize(g).positive_definite();
}

std::vector<QMatrix> levi_civita(const LieAlgebra& g, const InvariantMetric& m) {
    if (!m.symmetric()) throw std::invalid_argument("levi_civita: metric is not symmetric");
    const std::size_t n = g.dim();
    QMatrix ginv(n, n);
    try {
        ginv = inverse(m.g);
    } catch (const std::domain_error&) {
        throw std::invalid_argument("levi_civita: metric is degenerate");
    }

    auto inner = [&](const QVec& a, const QVec& b) { return dot(a, m.g * b); };
    auto basis = [&](std::size_t k) {
        QVec v(n);
        v[k] = Rational(1);
        return v;
    };

    std::vector<QMatrix> nabla(n, QMatrix(n, n));
    const Rational half(1, 2);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            QVec rhs(n);
            for (std::size_t k = 0; k < n; ++k) {
                rhs[k] = inner(g.bracket(basis(i), basis(j)), basis(k)) -
                         inner(g.bracket(basis(j), basis(k)), basis(i)) +
                         inner(g.bracket(basis(k), basis(i)), basis(j));
            }
            const QVec col = half * (ginv * rhs);
            for (std::size_t k = 0; k < n; ++k) nabla[i](k, j) = col[k];
        }
    }
    return nabla;
}

QMatrix curvature_endo(const LieAlgebra& g, const std::vector<QMatrix>& nabla, int i, int j) {
    const std::size_t n = g.dim();
    QVec ei(n), ej(n);
    ei[i] = Rational(1);
    ej[j] = Rational(1);
    const QVec bracket = g.bracket(ei, ej);
    QMatrix nabla_bracket(n, n);
    for (std::size_t k = 0; k < n; ++k)
        nabla_bracket = nabla_bracket + bracket[k] * nabla[k];
    return nabla[i] * nabla[j] - nabla[j] * nabla[i] - nabla_bracket;
}

bool is_flat(const LieAlgebra& g, const InvariantMetric& m) {
    const auto nabla = levi_civita(g, m);
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = i + 1; j < g.dim(); ++j)
            if (!curvature_endo(g, nabla, static_cast<int>(i), static_cast<int>(j)).is_zero())
                return false;
    return true;
}

QMatrix ricci_operator(const LieAlgebra& g, const InvariantMetric& m) {
    const std::size_t n = g.dim();
    const auto nabla = levi_civita(g, m);
    std::vector<std::vector<QMatrix>> curv(n, std::vector<QMatrix>(n, QMatrix(n, n)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            curv[i][j] = curvature_endo(g, nabla, static_cast<int>(i), static_cast<int>(j));

    QMatrix ric(n, n);  // ric(e_i, e_j) = tr(z -> R(z, e_i) e_j)
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational sum;
            for (std::size_t z = 0; z < n; ++z) sum = sum + curv[z][i](z, j);
            ric(i, j) = sum;
        }
    return inverse(m.g) * ric;
}

// ---------------------------------------------------------------------------
// Bihermitian data

BihermitianData bihermitian_data(const std::string& name, const ParamMap& params) {
    const Rational rho = param_or(params, "rho", Rational(1));
    if (rho <= Rational(0))
        throw std::invalid_argument("bihermitian_data: rho must be positive");
    const Rational rho_inv = rho.inverse();
    const Rational two(2);

    auto diag = [&](Rational a, Rational b, Rational c, Rational d) {
        QMatrix m(kN, kN);
        m(0, 0) = a;
        m(1, 1) = b;
        m(2, 2) = c;
        m(3, 3) = d;
        return m;
    };

    BihermitianData out;
    if (name == "A3_6+A1") {
        out.algebra = Catalogue::instance().build("A3_6+A1", {}).algebra;
        out.metric = InvariantMetric(diag(two, two, two * rho, two * rho_inv));
        out.i_plus = elem(1, 2) - elem(2, 1) + rho_inv * elem(3, 4) - rho * elem(4, 3);
        out.expected_ricci = QMatrix(kN, kN);
    } else if (name == "A2+2A1") {
        out.algebra = Catalogue::instance().build("A2+2A1", {}).algebra;
        out.metric = InvariantMetric(diag(two * rho, two * rho_inv, two, two));
        out.i_plus = rho_inv * elem(1, 2) - rho * elem(2, 1) + elem(3, 4) - elem(4, 3);
        out.expected_ricci = -(two * rho).inverse() * (elem(1, 1) + elem(2, 2));
    } else if (name == "2A2") {
        const Rational r = param_or(params, "r", Rational(1));
        if (r <= Rational(0))
            throw std::invalid_argument("bihermitian_data: r must be positive");
        out.algebra = Catalogue::instance().build("2A2", {}).algebra;
        out.metric =
            InvariantMetric(diag(two * rho, two * rho_inv, two * r.inverse(), two * r.inverse()));
        out.i_plus = rho_inv * elem(1, 2) - rho * elem(2, 1) + elem(3, 4) - elem(4, 3);
        out.expected_ricci = -(two * rho).inverse() * (elem(1, 1) + elem(2, 2)) -
                             r / two * (elem(3, 3) + elem(4, 4));
    } else if (name == "A4_6") {
        auto it = params.find("alpha");
        if (it == params.end())
            throw std::invalid_argument("bihermitian_data: A4_6 needs alpha");
        const Rational alpha = it->second;
        out.algebra =
            Catalogue::instance().build("A4_6", {{"alpha", alpha}, {"beta", Rational(0)}})
                .algebra;
        out.metric = InvariantMetric(diag(two * rho, Rational(1), Rational(1), two * rho_inv));
        out.i_plus = rho_inv * elem(1, 4) - rho * elem(4, 1) + elem(2, 3) - elem(3, 2);
        out.expected_ricci = -(rho * alpha * alpha / two) * (elem(1, 1) + elem(4, 4));
    } else {
        throw std::invalid_argument("bihermitian_data: unknown case " + name);
    }
    out.i_minus = -out.i_plus;
    return out;
}

BihermitianReport bihermitian_check(const std::string& name, const ParamMap& params) {
    const BihermitianData data = bihermitian_data(name, params);
    const LieAlgebra& g = data.algebra;
    const QMatrix& gram = data.metric.g;

    BihermitianReport rep;
    rep.metric_positive = data.metric.positive_definite();

    const QMatrix zero(kN, kN);
    // A complex structure is exactly a generalized one with vanishing
    // bivector and 2-form, so the integrability machinery applies verbatim.
    rep.complex_structures = is_gcs(g, Triple(data.i_plus, zero, zero)) &&
                             is_gcs(g, Triple(data.i_minus, zero, zero));
    rep.hermitian = data.i_plus.transpose() * gram * data.i_plus == gram &&
                    data.i_minus.transpose() * gram * data.i_minus == gram;
    rep.opposite = data.i_minus == -data.i_plus;

    const QMatrix omega = data.i_plus.transpose() * gram;  // omega(u,v) = g(I+ u, v)
    rep.kahler_form_closed = omega.is_skew() && ce_d(g, CForm::two_form(omega)).is_zero();

    rep.ricci = ricci_operator(g, data.metric);
    rep.ricci_matches = rep.ricci == data.expected_ricci;
    rep.flat = is_flat(g, data.metric);
    return rep;
}

}  // namespace gcs4
