#include "gcs4/cohomology.hpp"

#include "gcs4/classification.hpp"
#include "gcs4/embedded_data.hpp"
#include "gcs4/gcs.hpp"
#include "gcs4/json_io.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

namespace gcs4 {

namespace {

constexpr std::size_t kMasks = CForm::kMasks;

// Expected level dimensions of the spinor grading in dimension 4.
constexpr std::array<std::size_t, 5> kLevelDims = {1, 4, 6, 4, 1};

CVec head4(const CVec& v) { return CVec(v.begin(), v.begin() + 4); }
CVec tail4(const CVec& v) { return CVec(v.begin() + 4, v.end()); }

// Columns = flattened forms.
CMatrix columns_of(const std::vector<CForm>& forms) {
    CMatrix m(kMasks, forms.size());
    for (std::size_t c = 0; c < forms.size(); ++c) {
        CVec f = forms[c].flatten();
        for (std::size_t r = 0; r < kMasks; ++r) m(r, c) = f[r];
    }
    return m;
}

CSubspace span_of(const std::vector<CForm>& forms) {
    CMatrix rows(forms.size(), kMasks);
    for (std::size_t i = 0; i < forms.size(); ++i) rows.set_row(i, forms[i].flatten());
    return CSubspace::row_span(rows);
}

[[noreturn]] void grading_failure(const std::string& what) {
    throw std::logic_error("build_grading: " + what);
}

}  // namespace

CSubspace GradedDecomposition::level_span(int k) const { return span_of(level(k)); }

std::array<std::size_t, 5> GradedDecomposition::dims() const {
    std::array<std::size_t, 5> d{};
    for (std::size_t i = 0; i < 5; ++i) d[i] = levels[i].size();
    return d;
}

GradedDecomposition build_grading(const LieAlgebra& g, const Triple& t) {
    return build_grading(g, t, annihilator_spinor(t));
}

GradedDecomposition build_grading(const LieAlgebra& g, const Triple& t,
                                  const CForm& rho) {
    if (!is_gcs(g, t))
        throw std::invalid_argument("build_grading: structure is not integrable");
    if (rho.is_zero())
        throw std::invalid_argument("build_grading: zero spinor");

    GradedDecomposition gd;
    gd.algebra = g;
    gd.t = t;
    gd.rho = rho;

    const CMatrix K = complexify(build_K(t));
    const CMatrix icm = GaussianRational::i() * CMatrix::identity(2 * CForm::kDim);

    // -i eigenspace (the conjugate null space) and +i eigenspace.
    const CMatrix lbar = kernel_basis(K + icm);
    const CMatrix lpos = kernel_basis(K - icm);
    if (lbar.rows() != 4 || lpos.rows() != 4)
        grading_failure("null spaces do not have dimension 4");
    for (std::size_t i = 0; i < 4; ++i) {
        CVec v = lpos.row(i);
        if (!clifford(head4(v), tail4(v), rho).is_zero())
            grading_failure("spinor is not annihilated by the null space");
        gd.lbar.push_back(lbar.row(i));
    }

    gd.levels[0] = {rho};
    for (std::size_t j = 1; j < 5; ++j) {
        std::vector<CForm> products;
        for (const CVec& v : gd.lbar)
            for (const CForm& w : gd.levels[j - 1]) {
                CForm p = clifford(head4(v), tail4(v), w);
                if (!p.is_zero()) products.push_back(p);
            }
        CSubspace sp = span_of(products);
        if (sp.dim() != kLevelDims[j]) {
            std::ostringstream os;
            os << "level " << (int(j) - 2) << " has dimension " << sp.dim()
               << ", expected " << kLevelDims[j];
            grading_failure(os.str());
        }
        for (std::size_t r = 0; r < sp.dim(); ++r)
            gd.levels[j].push_back(CForm::unflatten(sp.basis().row(r)));
    }

    // The five levels must decompose the form space...
    CMatrix all(kMasks, kMasks);
    std::size_t at = 0;
    for (const auto& lvl : gd.levels)
        for (const CForm& w : lvl) all.set_row(at++, w.flatten());
    if (rank(all) != kMasks) grading_failure("levels do not decompose the form space");

    // ...with conjugation exchanging opposite levels.
    for (int k = -2; k <= 2; ++k) {
        CSubspace opp = gd.level_span(-k);
        for (const CForm& w : gd.level(k))
            if (!opp.contains(w.conj().flatten()))
                grading_failure("conjugation does not reverse the grading");
    }
    return gd;
}

DifferentialSplit split_differential(const GradedDecomposition& gd) {
    DifferentialSplit ds;
    const auto dims = gd.dims();
    for (std::size_t l = 0; l < 5; ++l) {
        const std::size_t n = dims[l];
        const std::size_t up = l + 1 < 5 ? dims[l + 1] : 0;
        const std::size_t down = l >= 1 ? dims[l - 1] : 0;

        CMatrix targets(kMasks, up + down);
        if (up) targets.set_block(0, 0, columns_of(gd.levels[l + 1]));
        if (down) targets.set_block(0, up, columns_of(gd.levels[l - 1]));

        CMatrix del(up, n), dbar(down, n);
        for (std::size_t c = 0; c < n; ++c) {
            const CForm dw = ce_d(gd.algebra, gd.levels[l][c]);
            auto x = solve(targets, dw.flatten());
            if (!x)
                throw std::logic_error(
                    "split_differential: d does not map level " +
                    std::to_string(int(l) - 2) + " into the adjacent levels");
            for (std::size_t r = 0; r < up; ++r) del(r, c) = (*x)[r];
            for (std::size_t r = 0; r < down; ++r) dbar(r, c) = (*x)[up + r];
        }
        ds.del[l] = del;
        ds.dbar[l] = dbar;
    }

    for (std::size_t l = 0; l + 1 < 5; ++l)
        if (!(ds.del[l + 1] * ds.del[l]).is_zero())
            throw std::logic_error("split_differential: del^2 != 0");
    for (std::size_t l = 1; l < 5; ++l)
        if (!(ds.dbar[l - 1] * ds.dbar[l]).is_zero())
            throw std::logic_error("split_differential: dbar^2 != 0");
    for (std::size_t l = 0; l < 5; ++l) {
        const std::size_t n = dims[l];
        CMatrix mixed(n, n);
        if (l >= 1) mixed = mixed + ds.del[l - 1] * ds.dbar[l];
        if (l + 1 < 5) mixed = mixed + ds.dbar[l + 1] * ds.del[l];
        if (!mixed.is_zero())
            throw std::logic_error("split_differential: del dbar + dbar del != 0");
    }
    return ds;
}

CohomologyTable cohomology_table(const GradedDecomposition& gd,
                                 const DifferentialSplit& ds) {
    CohomologyTable out;
    const auto dims = gd.dims();
    for (std::size_t l = 0; l < 5; ++l) {
        const std::size_t n = dims[l];
        const CMatrix& del = ds.del[l];
        const CMatrix& dbar = ds.dbar[l];
        const CMatrix del_prev = l >= 1 ? ds.del[l - 1] : CMatrix(n, 0);
        const CMatrix dbar_next = l + 1 < 5 ? ds.dbar[l + 1] : CMatrix(n, 0);

        // Quotients are computed as rank differences; the containment of
        // numerator image inside each kernel is checked by composing maps.
        out.gh_del[l] = int(n - rank(del)) - int(rank(del_prev));

        const CMatrix deldbar = del_prev.cols() ? del_prev * dbar : CMatrix(n, n);
        if (!(del * deldbar).is_zero() || !(dbar * deldbar).is_zero())
            throw std::logic_error(
                "cohomology_table: image of del dbar escapes the kernels");
        CMatrix stacked(del.rows() + dbar.rows(), n);
        stacked.set_block(0, 0, del);
        stacked.set_block(del.rows(), 0, dbar);
        out.gh_bc[l] = int(n - rank(stacked)) - int(rank(deldbar));

        if (!(deldbar * del_prev).is_zero() || !(deldbar * dbar_next).is_zero())
            throw std::logic_error(
                "cohomology_table: images of del and dbar escape ker(del dbar)");
        CMatrix images(n, del_prev.cols() + dbar_next.cols());
        images.set_block(0, 0, del_prev);
        images.set_block(0, del_prev.cols(), dbar_next);
        out.gh_a[l] = int(n - rank(deldbar)) - int(rank(images));

        if (out.gh_del[l] < 0 || out.gh_bc[l] < 0 || out.gh_a[l] < 0)
            throw std::logic_error("cohomology_table: negative quotient dimension");
    }
    out.d_rho_zero = ds.del[0].is_zero();
    out.im_dbar_minus1_zero = ds.dbar[1].is_zero();
    return out;
}

CohomologyTable cohomology_table(const LieAlgebra& g, const Triple& t) {
    GradedDecomposition gd = build_grading(g, t);
    return cohomology_table(gd, split_differential(gd));
}

CohomologyTable cohomology_table(const LieAlgebra& g, const Triple& t,
                                 const CForm& rho) {
    GradedDecomposition gd = build_grading(g, t, rho);
    return cohomology_table(gd, split_differential(gd));
}

nlohmann::ordered_json CohomologyTable::to_json() const {
    nlohmann::ordered_json j;
    auto levels = [](const std::array<int, 5>& a) {
        nlohmann::ordered_json o;
        for (int k = -2; k <= 2; ++k) o[std::to_string(k)] = a[k + 2];
        return o;
    };
    j["gh_del"] = levels(gh_del);
    j["gh_bc"] = levels(gh_bc);
    j["gh_a"] = levels(gh_a);
    j["d_rho_zero"] = d_rho_zero;
    j["im_dbar_minus1_zero"] = im_dbar_minus1_zero;
    return j;
}

namespace {

std::array<int, 5> array_from_json(const nlohmann::ordered_json& j) {
    if (!j.is_array() || j.size() != 5)
        throw std::runtime_error("cohomology expectations: need 5 levels");
    std::array<int, 5> a{};
    for (std::size_t i = 0; i < 5; ++i) a[i] = j[i].get<int>();
    return a;
}

std::map<std::string, CohomologyTable> expected_tables() {
    const auto j =
        nlohmann::ordered_json::parse(data::get("fixtures/cohomology_expected.json"));
    std::map<std::string, CohomologyTable> out;
    for (const auto& e : j.at("expected")) {
        CohomologyTable t;
        t.gh_del = array_from_json(e.at("gh_del"));
        t.gh_bc = array_from_json(e.at("gh_bc"));
        t.gh_a = array_from_json(e.at("gh_a"));
        t.d_rho_zero = e.at("d_rho_zero").get<bool>();
        t.im_dbar_minus1_zero = e.at("im_dbar_minus1_zero").get<bool>();
        out[e.at("id").get<std::string>()] = t;
    }
    return out;
}

std::string describe_mismatch(const CohomologyTable& got, const CohomologyTable& want) {
    std::ostringstream os;
    auto cmp = [&os](const char* name, const std::array<int, 5>& g,
                     const std::array<int, 5>& w) {
        for (int k = -2; k <= 2; ++k)
            if (g[k + 2] != w[k + 2])
                os << name << "[k=" << k << "]: computed " << g[k + 2] << ", recorded "
                   << w[k + 2] << "; ";
    };
    cmp("gh_del", got.gh_del, want.gh_del);
    cmp("gh_bc", got.gh_bc, want.gh_bc);
    cmp("gh_a", got.gh_a, want.gh_a);
    if (got.d_rho_zero != want.d_rho_zero) os << "d_rho_zero differs; ";
    if (got.im_dbar_minus1_zero != want.im_dbar_minus1_zero)
        os << "im_dbar_minus1_zero differs; ";
    return os.str();
}

}  // namespace

CohomologyReport cohomology_full_report() {
    const auto expected = expected_tables();
    CohomologyReport report;
    for (const std::string& id : classified_structure_ids()) {
        const auto want = expected.find(id);
        if (want != expected.end()) ++report.structures_checked;
        for (const ParamMap& sample : classified_structure_samples(id)) {
            ClassifiedStructure row = classified_structure(id, sample);
            StructureBlockResult res;
            res.id = id;
            res.params = sample;
            res.table = cohomology_table(row.algebra, row.t, row.rho);
            if (want != expected.end()) {
                res.has_expected = true;
                res.matched = res.table == want->second;
                if (!res.matched)
                    res.mismatch = describe_mismatch(res.table, want->second);
            }
            report.all_matched = report.all_matched && res.matched;
            report.blocks.push_back(std::move(res));
        }
    }
    return report;
}

nlohmann::ordered_json CohomologyReport::to_json() const {
    nlohmann::ordered_json j;
    j["structures"] = structures_checked;
    j["all_matched"] = all_matched;
    j["blocks"] = nlohmann::ordered_json::array();
    for (const auto& b : blocks) {
        nlohmann::ordered_json e;
        e["id"] = b.id;
        auto params = nlohmann::ordered_json::object();
        for (const auto& [k, v] : b.params) params[k] = io::to_json(v);
        e["params"] = params;
        e["table"] = b.table.to_json();
        e["has_expected"] = b.has_expected;
        e["matched"] = b.matched;
        if (!b.mismatch.empty()) e["mismatch"] = b.mismatch;
        j["blocks"].push_back(e);
    }
    return j;
}

}  // namespace gcs4
