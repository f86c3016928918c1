#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "gcs4/classification.hpp"
#include "gcs4/cohomology.hpp"
#include "gcs4/exterior.hpp"
#include "gcs4/gcs.hpp"
#include "gcs4/linalg.hpp"
#include "gcs4/triple.hpp"

using namespace gcs4;

namespace {

const GaussianRational gi = GaussianRational::i();
const GaussianRational g1(1);

QMatrix elem(std::size_t i, std::size_t j) {
    QMatrix m(4, 4);
    m(i - 1, j - 1) = Rational(1);
    return m;
}

QMatrix pair_unit(std::size_t i, std::size_t j) {
    QMatrix m(4, 4);
    m(j - 1, i - 1) = Rational(1);
    m(i - 1, j - 1) = Rational(-1);
    return m;
}

// Basis covector forms with 1-indexed labels.
CForm f(int a) { return CForm::basis_form({std::size_t(a - 1)}); }
CForm f(int a, int b) {
    return CForm::basis_form({std::size_t(a - 1), std::size_t(b - 1)});
}
CForm f(int a, int b, int c) {
    return CForm::basis_form(
        {std::size_t(a - 1), std::size_t(b - 1), std::size_t(c - 1)});
}
const CForm f1234 = CForm::basis_form({0, 1, 2, 3});

// An element of g (+) g* written in (x, xi) coordinates.
CVec v8(std::initializer_list<GaussianRational> xs) {
    CVec v(8);
    std::size_t k = 0;
    for (const auto& x : xs) v[k++] = x;
    return v;
}

bool same_span(const std::vector<CVec>& a, const std::vector<CVec>& b) {
    auto sa = CSubspace::span(a[0].size(), a);
    auto sb = CSubspace::span(b[0].size(), b);
    return sa.contains(sb) && sb.contains(sa);
}

std::vector<CVec> flattened(const std::vector<CForm>& ws) {
    std::vector<CVec> out;
    out.reserve(ws.size());
    for (const auto& w : ws) out.push_back(w.flatten());
    return out;
}

CohomologyTable make_table(std::array<int, 5> del, std::array<int, 5> bc,
                           std::array<int, 5> a, bool rho_closed,
                           bool dbar_trivial) {
    CohomologyTable t;
    t.gh_del = del;
    t.gh_bc = bc;
    t.gh_a = a;
    t.d_rho_zero = rho_closed;
    t.im_dbar_minus1_zero = dbar_trivial;
    return t;
}

const std::vector<Rational> kLambdaSamples = {Rational(0), Rational(1),
                                              Rational(-2, 3)};

}  // namespace

TEST_CASE("conjugate null spaces match the recorded bases") {
    // Two parameter-free rows whose -i eigenspaces are known explicitly.
    {
        auto cs = classified_structure("A3_4+A1");
        auto gd = build_grading(cs.algebra, cs.t, cs.rho);
        std::vector<CVec> golden = {
            v8({g1, 0, 0, 0, 0, -gi, 0, 0}),  // f_1 - i f^2
            v8({0, 0, g1, gi, 0, 0, 0, 0}),   // f_3 + i f_4
            v8({0, -gi, 0, 0, g1, 0, 0, 0}),  // f^1 - i f_2
            v8({0, 0, 0, 0, 0, 0, -gi, g1}),  // f^4 - i f^3
        };
        CHECK(same_span(gd.lbar, golden));
    }
    {
        auto cs = classified_structure("A3_1+A1#1");
        auto gd = build_grading(cs.algebra, cs.t, cs.rho);
        std::vector<CVec> golden = {
            v8({g1, 0, 0, 0, 0, -gi, 0, 0}),  // f_1 - i f^2
            v8({0, 0, g1, -gi, 0, 0, 0, 0}),  // f_3 - i f_4
            v8({0, -gi, 0, 0, g1, 0, 0, 0}),  // f^1 - i f_2
            v8({0, 0, 0, 0, 0, 0, g1, -gi}),  // f^3 - i f^4
        };
        CHECK(same_span(gd.lbar, golden));
    }
    // The one-parameter family on the same algebra as A3_1+A1#1.
    for (const Rational& l : kLambdaSamples) {
        CAPTURE(l.str());
        GaussianRational gl(l);
        auto cs = classified_structure("A3_1+A1#2", {{"lambda", l}});
        auto gd = build_grading(cs.algebra, cs.t, cs.rho);
        std::vector<CVec> golden = {
            // (1 + i lambda) f_1 - i (lambda^2 + 1) f^4
            v8({g1 + gi * gl, 0, 0, 0, 0, 0, 0, -gi * (gl * gl + g1)}),
            v8({0, gi, g1, 0, 0, 0, 0, 0}),        // i f_2 + f_3
            v8({0, 0, 0, -gi, g1 - gi * gl, 0, 0, 0}),  // (1-i lambda) f^1 - i f_4
            v8({0, 0, 0, 0, 0, gi, g1, 0}),        // f^3 + i f^2
        };
        CHECK(same_span(gd.lbar, golden));
    }
}

TEST_CASE("recorded level bases and split differentials of the rank-2 family") {
    // The lambda-family A3_1+A1#2: explicit bases of the levels -1 and 0 are
    // on record together with the value of d on each basis element.
    for (const Rational& l : kLambdaSamples) {
        CAPTURE(l.str());
        GaussianRational gl(l);
        auto cs = classified_structure("A3_1+A1#2", {{"lambda", l}});
        auto gd = build_grading(cs.algebra, cs.t, cs.rho);
        auto ds = split_differential(gd);

        const GaussianRational c2(2), c4(4), i2(Rational(0), Rational(2)),
            i4(Rational(0), Rational(4));

        std::vector<CForm> um1 = {
            (-c2 * gl + i2) * f(2, 4) + (-i2 * gl - c2) * f(3, 4),
            i2 * CForm::basis_form({}) + (i2 * gl + c2) * f(1, 4),
            c2 * f(1, 2) + i2 * f(1, 3),
            -c2 * f(2, 3) + (-c2 * gl + i2) * f1234,
        };
        std::vector<CForm> u0 = {
            (i4 * gl + c4) * f(4),
            (i2 * gl + c2) * f(2) + (-c2 * gl + i2) * f(3) +
                (c2 * gl * gl + c2) * f(1, 3, 4) +
                (-i2 - i2 * gl * gl) * f(1, 2, 4),
            (i4 - c4 * gl) * f(2, 3, 4),
            -i4 * f(1),
            c2 * f(2) - i2 * f(3) + (i2 * gl + c2) * f(1, 3, 4) +
                (-c2 * gl + i2) * f(1, 2, 4),
            -c4 * f(1, 2, 3),
        };

        CHECK(same_span(flattened(um1), flattened(gd.level(-1))));
        CHECK(same_span(flattened(u0), flattened(gd.level(0))));

        // d rho = 0, and d on the recorded bases takes the recorded values.
        CHECK(ce_d(cs.algebra, cs.rho).is_zero());
        CHECK(ce_d(cs.algebra, um1[0]).is_zero());
        CHECK(ce_d(cs.algebra, um1[1]) == (-i2 * gl - c2) * f(2, 3, 4));
        CHECK(ce_d(cs.algebra, um1[2]).is_zero());
        CHECK(ce_d(cs.algebra, um1[3]).is_zero());
        for (int j : {0, 1, 2, 4, 5})
            CHECK(ce_d(cs.algebra, u0[std::size_t(j)]).is_zero());
        CHECK(ce_d(cs.algebra, u0[3]) == i4 * f(2, 3));

        // The images above land in the adjacent levels; the one from level 0
        // splits across both neighbours.
        CHECK(gd.level_span(0).contains(ce_d(cs.algebra, um1[1]).flatten()));
        CHECK(sum(gd.level_span(-1), gd.level_span(1))
                  .contains(ce_d(cs.algebra, u0[3]).flatten()));
        CHECK_FALSE(gd.level_span(-1).contains(ce_d(cs.algebra, u0[3]).flatten()));
        CHECK_FALSE(gd.level_span(1).contains(ce_d(cs.algebra, u0[3]).flatten()));

        // Since d rho = 0 the level raise of rho vanishes; dbar vanishes on
        // level -1 as well, so both boundary flags hold.
        auto tab = cohomology_table(gd, ds);
        CHECK(tab.d_rho_zero);
        CHECK(tab.im_dbar_minus1_zero);
        CHECK(tab.gh_del == std::array<int, 5>{1, 3, 4, 3, 1});
        CHECK(tab.gh_bc == std::array<int, 5>{1, 3, 5, 3, 1});
        CHECK(tab.gh_a == std::array<int, 5>{1, 3, 5, 3, 1});

        // Shapes of the split: del raises, dbar lowers, ends are empty.
        CHECK(ds.del_at(-2).rows() == 4);
        CHECK(ds.del_at(-2).cols() == 1);
        CHECK(ds.del_at(2).rows() == 0);
        CHECK(ds.dbar_at(-2).rows() == 0);
        CHECK(ds.dbar_at(2).rows() == 4);
        CHECK(ds.dbar_at(2).cols() == 1);
    }
}

TEST_CASE("abelian algebra carries both classical gradings") {
    LieAlgebra g(4);  // all brackets vanish

    // Diagonal complex structure, no bivector or 2-form: type 2.
    Triple classical(elem(2, 1) - elem(1, 2) + elem(4, 3) - elem(3, 4),
                     QMatrix(4, 4), QMatrix(4, 4));
    // Nondegenerate bivector with matching 2-form, no complex part: type 0.
    Triple symplectic(QMatrix(4, 4), pair_unit(1, 2) + pair_unit(3, 4),
                      pair_unit(1, 2) + pair_unit(3, 4));

    REQUIRE(is_gcs(g, classical));
    REQUIRE(is_gcs(g, symplectic));
    CHECK(type_by_rank(classical) == 2);
    CHECK(type_by_rank(symplectic) == 0);

    for (const Triple& t : {classical, symplectic}) {
        auto gd = build_grading(g, t);
        CHECK(gd.dims() == std::array<std::size_t, 5>{1, 4, 6, 4, 1});
        auto ds = split_differential(gd);
        for (int k = -2; k <= 2; ++k) {
            CHECK(ds.del_at(k).is_zero());
            CHECK(ds.dbar_at(k).is_zero());
        }
        // With d = 0 every cohomology is the full level.
        auto tab = cohomology_table(gd, ds);
        CHECK(tab.gh_del == std::array<int, 5>{1, 4, 6, 4, 1});
        CHECK(tab.gh_bc == std::array<int, 5>{1, 4, 6, 4, 1});
        CHECK(tab.gh_a == std::array<int, 5>{1, 4, 6, 4, 1});
        CHECK(tab.d_rho_zero);
        CHECK(tab.im_dbar_minus1_zero);
    }
}

TEST_CASE("dimension tables of selected rows") {
    auto table_of = [](const std::string& id, const ParamMap& p = {}) {
        auto cs = classified_structure(id, p);
        return cohomology_table(cs.algebra, cs.t, cs.rho);
    };

    CHECK(table_of("A3_4+A1") ==
          make_table({1, 2, 2, 2, 1}, {1, 2, 2, 2, 1}, {1, 2, 2, 2, 1}, true,
                     true));
    CHECK(table_of("A4_2(1)", {{"k", Rational(1)}}) ==
          make_table({0, 1, 1, 0, 0}, {0, 1, 1, 1, 0}, {0, 0, 2, 0, 0}, false,
                     false));
    CHECK(table_of("A4_12", {{"k", Rational(2)}}) ==
          make_table({0, 1, 2, 1, 0}, {0, 1, 2, 1, 0}, {0, 1, 2, 1, 0}, false,
                     false));
    CHECK(table_of("2A2#2") ==
          make_table({0, 1, 2, 1, 0}, {0, 1, 3, 1, 0}, {0, 1, 3, 1, 0}, false,
                     false));
    CHECK(table_of("A4_11", {{"alpha", Rational(1)}, {"k", Rational(1)},
                             {"sign", Rational(1)}}) ==
          make_table({0, 1, 1, 0, 0}, {0, 1, 1, 1, 0}, {0, 0, 2, 0, 0}, false,
                     false));
    // Rows sharing one algebra pair: identical tables for both bracket signs.
    for (const std::string& id : {std::string("A3_8+A1"), std::string("A3_9+A1")})
        CHECK(table_of(id, {{"lambda", Rational(-2, 3)}}) ==
              make_table({0, 1, 2, 1, 0}, {0, 1, 3, 1, 0}, {0, 1, 3, 1, 0},
                         false, false));
    // A row with no recorded counterpart; values fixed by computation.
    CHECK(table_of("A4_6(alpha,0)#2",
                   {{"alpha", Rational(2)}, {"sign", Rational(1)}}) ==
          make_table({0, 2, 2, 0, 0}, {0, 2, 2, 2, 0}, {0, 0, 4, 0, 0}, false,
                     false));
}

TEST_CASE("full report: every row matches its recorded table") {
    auto report = cohomology_full_report();
    CHECK(report.all_matched);
    CHECK(report.structures_checked == 32);
    CHECK(report.blocks.size() >= classified_structure_ids().size());
    for (const auto& b : report.blocks) {
        CAPTURE(b.id);
        CHECK(b.matched);
        CHECK(b.mismatch.empty());
        // Exactly one row has no recorded expectation.
        CHECK(b.has_expected == (b.id != "A4_6(alpha,0)#2"));
    }
}

TEST_CASE("cohomology identities across the whole classification") {
    for (const auto& id : classified_structure_ids()) {
        std::vector<CohomologyTable> tables;
        for (const auto& p : classified_structure_samples(id)) {
            CAPTURE(id);
            auto cs = classified_structure(id, p);
            auto gd = build_grading(cs.algebra, cs.t, cs.rho);
            auto ds = split_differential(gd);
            auto tab = cohomology_table(gd, ds);
            tables.push_back(tab);

            CHECK(gd.dims() == std::array<std::size_t, 5>{1, 4, 6, 4, 1});

            // Alternating sum of the raising cohomology vanishes.
            int euler = 0, sign = 1;
            for (int l = 0; l < 5; ++l, sign = -sign)
                euler += sign * tab.gh_del[std::size_t(l)];
            CHECK(euler == 0);

            // The two quotients built from both operators are symmetric
            // under level reversal.
            for (int l = 0; l < 5; ++l) {
                CHECK(tab.gh_bc[std::size_t(l)] == tab.gh_bc[std::size_t(4 - l)]);
                CHECK(tab.gh_a[std::size_t(l)] == tab.gh_a[std::size_t(4 - l)]);
            }

            // The lowering cohomology is the raising one read backwards.
            for (int l = 0; l < 5; ++l) {
                int n = int(gd.levels[std::size_t(l)].size());
                int ker = n - int(rank(ds.dbar[std::size_t(l)]));
                int im = l + 1 < 5 ? int(rank(ds.dbar[std::size_t(l + 1)])) : 0;
                CHECK(ker - im == tab.gh_del[std::size_t(4 - l)]);
            }

            // Boundary levels are pinned by the two flags.
            CHECK((tab.gh_del[0] == 1) == tab.d_rho_zero);
            CHECK((tab.gh_del[4] == 1) == tab.im_dbar_minus1_zero);
            CHECK(tab.gh_bc[0] == (tab.d_rho_zero ? 1 : 0));
            CHECK(tab.gh_bc[4] == (tab.d_rho_zero ? 1 : 0));
            CHECK(tab.gh_a[0] == (tab.im_dbar_minus1_zero ? 1 : 0));
            CHECK(tab.gh_a[4] == (tab.im_dbar_minus1_zero ? 1 : 0));

            // Levels conjugate into their mirrors.
            for (int k = -2; k <= 2; ++k) {
                auto mirror = gd.level_span(-k);
                for (const auto& w : gd.level(k))
                    CHECK(mirror.contains(w.conj().flatten()));
            }
        }
        // Dimension tables do not depend on the parameter sample.
        for (std::size_t s = 1; s < tables.size(); ++s)
            CHECK(tables[s] == tables[0]);
    }
}

TEST_CASE("serialization shapes") {
    auto cs = classified_structure("A3_4+A1");
    auto tab = cohomology_table(cs.algebra, cs.t, cs.rho);
    auto j = tab.to_json();
    for (const char* key : {"gh_del", "gh_bc", "gh_a"}) {
        REQUIRE(j.contains(key));
        for (const char* k : {"-2", "-1", "0", "1", "2"})
            CHECK(j[key].contains(k));
    }
    CHECK(j["gh_del"]["-2"] == 1);
    CHECK(j["d_rho_zero"] == true);
    CHECK(j["im_dbar_minus1_zero"] == true);

    auto report = cohomology_full_report();
    auto rj = report.to_json();
    REQUIRE(rj.contains("blocks"));
    CHECK(rj["blocks"].is_array());
    CHECK(rj["blocks"].size() == report.blocks.size());
    CHECK(rj["structures"] == 32);
    CHECK(rj["all_matched"] == true);
    const auto& first = rj["blocks"][0];
    for (const char* key : {"id", "params", "table", "matched"})
        CHECK(first.contains(key));
}

TEST_CASE("rejects unknown rows, bad parameters, and non-integrable input") {
    CHECK_THROWS_AS(classified_structure("A9_9"), std::invalid_argument);
    CHECK_THROWS_AS(classified_structure("A3_1+A1#2", {}),
                    std::invalid_argument);
    // Parameter outside the declared domain of the row.
    CHECK_THROWS_AS(
        classified_structure("A4_5(alpha,alpha)", {{"alpha", Rational(-1, 2)}}),
        std::invalid_argument);

    LieAlgebra abelian(4);
    // J alone squares to -Id only on a 2-dim block: not a valid structure.
    Triple broken(elem(2, 1) - elem(1, 2), QMatrix(4, 4), QMatrix(4, 4));
    CHECK_THROWS_AS(build_grading(abelian, broken), std::invalid_argument);

    // A spinor that does not span the annihilator line of the structure.
    auto cs = classified_structure("A3_4+A1");
    CHECK_THROWS_AS(build_grading(cs.algebra, cs.t, f(1)),
                    std::logic_error);
    CHECK_THROWS_AS(build_grading(cs.algebra, cs.t, CForm()),
                    std::invalid_argument);
}
