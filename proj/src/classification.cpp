#include "gcs4/classification.hpp"

#include "gcs4/catalogue.hpp"
#include "gcs4/gcs.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <utility>

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

// Covector basis forms f^a and f^{abc} with 1-indexed labels.
CForm cov(int a) { return CForm::basis_form({std::size_t(a - 1)}); }
CForm cov(int a, int b, int c) {
    return CForm::basis_form(
        {std::size_t(a - 1), std::size_t(b - 1), std::size_t(c - 1)});
}

const GaussianRational kI = GaussianRational::i();

Rational need(const ParamMap& p, const std::string& key, const std::string& id) {
    auto it = p.find(key);
    if (it == p.end())
        throw std::invalid_argument("classified_structure: row '" + id +
                                    "' needs parameter '" + key + "'");
    return it->second;
}

Rational need_sign(const ParamMap& p, const std::string& key, const std::string& id) {
    Rational s = need(p, key, id);
    if (s != Rational(1) && s != Rational(-1))
        throw std::invalid_argument("classified_structure: row '" + id + "' needs " +
                                    key + " in {1, -1}");
    return s;
}

Rational need_nonzero(const ParamMap& p, const std::string& key, const std::string& id) {
    Rational v = need(p, key, id);
    if (v == Rational(0))
        throw std::invalid_argument("classified_structure: row '" + id + "' needs " +
                                    key + " != 0");
    return v;
}

ParamMap pm(std::initializer_list<std::pair<const std::string, Rational>> il) {
    return ParamMap(il);
}

struct RowDef {
    std::string family;
    bool unimodular = false;
    std::vector<ParamMap> samples;
    // Fills family_params, t and rho from the structure parameters.
    std::function<void(const ParamMap&, ClassifiedStructure&)> fill;
};

// The J = E_14 - E_41, R = -f_23 structure shared by several families.
void fill_e14_structure(ClassifiedStructure& row) {
    row.t = Triple(elem(1, 4) - elem(4, 1), -pair_unit(2, 3), -pair_unit(2, 3));
    row.rho = cov(1) + kI * cov(4) + cov(2, 3, 4) - kI * cov(1, 2, 3);
}

// The J = -E_13 + E_31, R = -f_24 structure shared by two families.
void fill_e31_structure(ClassifiedStructure& row) {
    row.t = Triple(elem(3, 1) - elem(1, 3), -pair_unit(2, 4), -pair_unit(2, 4));
    row.rho = cov(1) - kI * cov(3) + cov(2, 3, 4) - kI * cov(1, 2, 4);
}

// The sign-indexed J = s(E_32 - E_23), R = -f_14 structure.
void fill_e32_structure(const Rational& s, ClassifiedStructure& row) {
    row.t = Triple(Rational(s) * (elem(3, 2) - elem(2, 3)), -pair_unit(1, 4),
                   -pair_unit(1, 4));
    row.rho = cov(2) - GaussianRational(s) * kI * cov(3) +
              GaussianRational(s) * cov(1, 3, 4) + kI * cov(1, 2, 4);
}

const std::vector<std::string>& row_order() {
    static const std::vector<std::string> order = {
        // families with no unimodular representative
        "A2+2A1#1", "A2+2A1#2", "2A2#1", "2A2#2", "A3_3+A1", "A3_7+A1",
        "A4_2(-1)", "A4_2(1)", "A4_3", "A4_5(-alpha,alpha)", "A4_5(-1,1)#1",
        "A4_5(-1,beta)", "A4_5(alpha,alpha)", "A4_5(alpha,1)", "A4_5(-1,1)#2",
        "A4_6(alpha,beta)", "A4_6(alpha,0)#1", "A4_6(alpha,0)#2", "A4_9(-1/2)",
        "A4_9(1)", "A4_11", "A4_12",
        // unimodular families
        "A3_1+A1#1", "A3_1+A1#2", "A3_4+A1", "A3_6+A1#1", "A3_6+A1#2",
        "A3_8+A1", "A3_9+A1", "A4_1", "A4_5(-1/2,-1/2)", "A4_6(-2beta,beta)",
        "A4_10"};
    return order;
}

const std::map<std::string, RowDef>& row_registry() {
    static const std::map<std::string, RowDef> reg = [] {
        std::map<std::string, RowDef> m;
        const Rational half(1, 2), third(1, 3), two(2), mtwothirds(-2, 3);
        const std::vector<ParamMap> lambda_samples = {
            pm({{"lambda", Rational(0)}}),
            pm({{"lambda", Rational(1)}}),
            pm({{"lambda", mtwothirds}})};
        const std::vector<ParamMap> k_samples = {pm({{"k", Rational(1)}}),
                                                 pm({{"k", two}})};

        m["A2+2A1#1"] = {"A2+2A1",
                         false,
                         {pm({})},
                         [](const ParamMap&, ClassifiedStructure& row) {
                             row.t = Triple(elem(1, 2) - elem(2, 1),
                                            -pair_unit(3, 4), -pair_unit(3, 4));
                             row.rho = cov(1) + kI * cov(2) + cov(2, 3, 4) -
                                       kI * cov(1, 3, 4);
                         }};
        m["A2+2A1#2"] = {"A2+2A1",
                         false,
                         {pm({})},
                         [](const ParamMap&, ClassifiedStructure& row) {
                             row.t = Triple(elem(3, 4) - elem(4, 3),
                                            -pair_unit(1, 2), -pair_unit(1, 2));
                             row.rho = -cov(3) - kI * cov(4) - cov(1, 2, 4) +
                                       kI * cov(1, 2, 3);
                         }};
        m["2A2#1"] = {"2A2", false, k_samples,
                      [](const ParamMap& p, ClassifiedStructure& row) {
                          Rational k = need_nonzero(p, "k", "2A2#1");
                          row.t = Triple(elem(3, 4) - elem(4, 3) + elem(2, 4),
                                         -k * pair_unit(1, 2),
                                         k.inverse() * (pair_unit(1, 3) - pair_unit(1, 2)));
                          GaussianRational gk{k};
                          row.rho = kI * gk * cov(3) - gk * cov(4) + kI * cov(1, 2, 4) +
                                    cov(1, 2, 3) - kI * cov(1, 3, 4);
                      }};
        m["2A2#2"] = {"2A2",
                      false,
                      {pm({})},
                      [](const ParamMap&, ClassifiedStructure& row) {
                          row.t = Triple(elem(3, 4) - elem(4, 3), -pair_unit(1, 2),
                                         -pair_unit(1, 2));
                          row.rho = kI * cov(3) - cov(4) + kI * cov(1, 2, 4) +
                                    cov(1, 2, 3);
                      }};
        m["A3_3+A1"] = {"A3_3+A1",
                        false,
                        {pm({})},
                        [](const ParamMap&, ClassifiedStructure& row) {
                            row.t = Triple(elem(1, 2) - elem(2, 1),
                                           -pair_unit(3, 4), -pair_unit(3, 4));
                            row.rho = kI * cov(1) - cov(2) + kI * cov(2, 3, 4) +
                                      cov(1, 3, 4);
                        }};
        m["A3_7+A1"] = {"A3_7+A1",
                        false,
                        {pm({{"alpha", half}, {"sign", Rational(1)}}),
                         pm({{"alpha", two}, {"sign", Rational(-1)}})},
                        [](const ParamMap& p, ClassifiedStructure& row) {
                            Rational s = need_sign(p, "sign", "A3_7+A1");
                            row.family_params = pm({{"alpha", need(p, "alpha", "A3_7+A1")}});
                            row.t = Triple(Rational(s) * (elem(1, 2) - elem(2, 1)),
                                           -pair_unit(3, 4), -pair_unit(3, 4));
                            GaussianRational gs{s};
                            row.rho = kI * cov(1) - gs * cov(2) +
                                      gs * kI * cov(2, 3, 4) + cov(1, 3, 4);
                        }};
        m["A4_2(-1)"] = {"A4_2", false, lambda_samples,
                         [](const ParamMap& p, ClassifiedStructure& row) {
                             Rational l = need(p, "lambda", "A4_2(-1)");
                             row.family_params = pm({{"alpha", Rational(-1)}});
                             row.t = Triple(l * (elem(1, 1) + elem(2, 2)) +
                                                elem(3, 4) - elem(4, 3),
                                            -pair_unit(1, 2),
                                            -(l * l + 1) * pair_unit(1, 2));
                             row.rho = -kI * cov(3) + cov(4) +
                                       GaussianRational(l, Rational(-1)) * cov(1, 2, 4) -
                                       GaussianRational(Rational(1), l) * cov(1, 2, 3);
                         }};
        m["A4_2(1)"] = {"A4_2", false, k_samples,
                        [](const ParamMap& p, ClassifiedStructure& row) {
                            Rational k = need_nonzero(p, "k", "A4_2(1)");
                            row.family_params = pm({{"alpha", Rational(1)}});
                            row.t = Triple(elem(3, 1) - elem(1, 3),
                                           -k * pair_unit(2, 4),
                                           -k.inverse() * pair_unit(2, 4));
                            GaussianRational gk{k};
                            row.rho = kI * gk * cov(1) + gk * cov(3) +
                                      kI * cov(2, 3, 4) + cov(1, 2, 4);
                        }};
        m["A4_3"] = {"A4_3",
                     false,
                     {pm({})},
                     [](const ParamMap&, ClassifiedStructure& row) {
                         fill_e14_structure(row);
                     }};
        m["A4_5(-alpha,alpha)"] = {
            "A4_5", false,
            {pm({{"alpha", half}}), pm({{"alpha", third}})},
            [](const ParamMap& p, ClassifiedStructure& row) {
                Rational a = need(p, "alpha", "A4_5(-alpha,alpha)");
                if (!(Rational(0) < a && a < Rational(1)))
                    throw std::invalid_argument(
                        "classified_structure: A4_5(-alpha,alpha) needs 0 < alpha < 1");
                row.family_params = pm({{"alpha", -a}, {"beta", a}});
                fill_e14_structure(row);
            }};
        m["A4_5(-1,1)#1"] = {"A4_5",
                             false,
                             {pm({})},
                             [](const ParamMap&, ClassifiedStructure& row) {
                                 row.family_params =
                                     pm({{"alpha", Rational(-1)}, {"beta", Rational(1)}});
                                 fill_e14_structure(row);
                             }};
        m["A4_5(-1,beta)"] = {
            "A4_5", false,
            {pm({{"beta", half}}), pm({{"beta", -half}})},
            [](const ParamMap& p, ClassifiedStructure& row) {
                Rational b = need_nonzero(p, "beta", "A4_5(-1,beta)");
                row.family_params = pm({{"alpha", Rational(-1)}, {"beta", b}});
                row.t = Triple(elem(3, 4) - elem(4, 3), -pair_unit(1, 2),
                               -pair_unit(1, 2));
                row.rho = cov(3) + kI * cov(4) + cov(1, 2, 4) - kI * cov(1, 2, 3);
            }};
        m["A4_5(alpha,alpha)"] = {
            "A4_5", false,
            {pm({{"alpha", half}}), pm({{"alpha", Rational(1)}})},
            [](const ParamMap& p, ClassifiedStructure& row) {
                Rational a = need_nonzero(p, "alpha", "A4_5(alpha,alpha)");
                if (a == Rational(-1, 2))
                    throw std::invalid_argument(
                        "classified_structure: A4_5(alpha,alpha) needs alpha != -1/2");
                row.family_params = pm({{"alpha", a}, {"beta", a}});
                row.t = Triple(elem(2, 3) - elem(3, 2), -pair_unit(1, 4),
                               -pair_unit(1, 4));
                row.rho = cov(2) + kI * cov(3) - cov(1, 3, 4) + kI * cov(1, 2, 4);
            }};
        m["A4_5(alpha,1)"] = {
            "A4_5", false,
            {pm({{"alpha", half}}), pm({{"alpha", -half}})},
            [](const ParamMap& p, ClassifiedStructure& row) {
                Rational a = need_nonzero(p, "alpha", "A4_5(alpha,1)");
                row.family_params = pm({{"alpha", a}, {"beta", Rational(1)}});
                fill_e31_structure(row);
            }};
        m["A4_5(-1,1)#2"] = {"A4_5",
                             false,
                             {pm({})},
                             [](const ParamMap&, ClassifiedStructure& row) {
                                 row.family_params =
                                     pm({{"alpha", Rational(-1)}, {"beta", Rational(1)}});
                                 fill_e31_structure(row);
                             }};
        m["A4_6(alpha,beta)"] = {
            "A4_6", false,
            {pm({{"alpha", Rational(1)}, {"beta", Rational(1)}, {"sign", Rational(1)}}),
             pm({{"alpha", two}, {"beta", half}, {"sign", Rational(-1)}})},
            [](const ParamMap& p, ClassifiedStructure& row) {
                Rational s = need_sign(p, "sign", "A4_6(alpha,beta)");
                row.family_params = pm({{"alpha", need(p, "alpha", "A4_6(alpha,beta)")},
                                        {"beta", need(p, "beta", "A4_6(alpha,beta)")}});
                fill_e32_structure(s, row);
            }};
        m["A4_6(alpha,0)#1"] = {
            "A4_6", false,
            {pm({{"alpha", two}}), pm({{"alpha", half}})},
            [](const ParamMap& p, ClassifiedStructure& row) {
                row.family_params = pm({{"alpha", need(p, "alpha", "A4_6(alpha,0)#1")},
                                        {"beta", Rational(0)}});
                fill_e14_structure(row);
            }};
        m["A4_6(alpha,0)#2"] = {
            "A4_6", false,
            {pm({{"alpha", two}, {"sign", Rational(1)}}),
             pm({{"alpha", half}, {"sign", Rational(-1)}})},
            [](const ParamMap& p, ClassifiedStructure& row) {
                Rational s = need_sign(p, "sign", "A4_6(alpha,0)#2");
                row.family_params = pm({{"alpha", need(p, "alpha", "A4_6(alpha,0)#2")},
                                        {"beta", Rational(0)}});
                fill_e32_structure(s, row);
            }};
        m["A4_9(-1/2)"] = {
            "A4_9", false,
            {pm({{"sign", Rational(1)}}), pm({{"sign", Rational(-1)}})},
            [](const ParamMap& p, ClassifiedStructure& row) {
                Rational s = need_sign(p, "sign", "A4_9(-1/2)");
                row.family_params = pm({{"beta", Rational(-1, 2)}});
                row.t = Triple(Rational(s) * (elem(4, 2) - elem(2, 4)),
                               -pair_unit(1, 3), -pair_unit(1, 3));
                GaussianRational gs{s};
                row.rho = cov(2) - gs * kI * cov(4) - gs * cov(1, 3, 4) +
                          kI * cov(1, 2, 3);
            }};
        m["A4_9(1)"] = {"A4_9",
                        false,
                        {pm({})},
                        [](const ParamMap&, ClassifiedStructure& row) {
                            row.family_params = pm({{"beta", Rational(1)}});
                            row.t = Triple(elem(2, 3) - elem(3, 2), -pair_unit(1, 4),
                                           -pair_unit(1, 4));
                            row.rho = -cov(2) - kI * cov(3) + cov(1, 3, 4) -
                                      kI * cov(1, 2, 4);
                        }};
        m["A4_11"] = {
            "A4_11", false,
            {pm({{"alpha", Rational(1)}, {"k", Rational(1)}, {"sign", Rational(1)}}),
             pm({{"alpha", two}, {"k", two}, {"sign", Rational(-1)}})},
            [](const ParamMap& p, ClassifiedStructure& row) {
                Rational k = need_nonzero(p, "k", "A4_11");
                Rational s = need_sign(p, "sign", "A4_11");
                row.family_params = pm({{"alpha", need(p, "alpha", "A4_11")}});
                row.t = Triple(Rational(s) * (elem(3, 2) - elem(2, 3)),
                               -k * pair_unit(1, 4), -k.inverse() * pair_unit(1, 4));
                GaussianRational gk{k}, gs{s};
                row.rho = gs * gk * cov(2) - kI * gk * cov(3) + cov(1, 3, 4) +
                          gs * kI * cov(1, 2, 4);
            }};
        m["A4_12"] = {
            "A4_12", false, k_samples,
            [](const ParamMap& p, ClassifiedStructure& row) {
                Rational k = need_nonzero(p, "k", "A4_12");
                row.t = Triple(elem(2, 1) - elem(1, 2), -k * pair_unit(3, 4),
                               -k.inverse() * pair_unit(3, 4));
                GaussianRational gk{k};
                row.rho = -gk * cov(1) + kI * gk * cov(2) + cov(2, 3, 4) +
                          kI * cov(1, 3, 4);
            }};

        m["A3_1+A1#1"] = {"A3_1+A1",
                          true,
                          {pm({})},
                          [](const ParamMap&, ClassifiedStructure& row) {
                              row.t = Triple(elem(3, 4) - elem(4, 3),
                                             -pair_unit(1, 2), -pair_unit(1, 2));
                              row.rho = cov(3) + kI * cov(4) + cov(1, 2, 4) -
                                        kI * cov(1, 2, 3);
                          }};
        m["A3_1+A1#2"] = {
            "A3_1+A1", true, lambda_samples,
            [](const ParamMap& p, ClassifiedStructure& row) {
                Rational l = need(p, "lambda", "A3_1+A1#2");
                row.t = Triple(l * (elem(1, 1) + elem(4, 4)) + elem(2, 3) - elem(3, 2),
                               -pair_unit(1, 4), -(l * l + 1) * pair_unit(1, 4));
                row.rho = cov(2) + kI * cov(3) -
                          GaussianRational(Rational(1), l) * cov(1, 3, 4) +
                          GaussianRational(-l, Rational(1)) * cov(1, 2, 4);
            }};
        m["A3_4+A1"] = {"A3_4+A1",
                        true,
                        {pm({})},
                        [](const ParamMap&, ClassifiedStructure& row) {
                            row.t = Triple(elem(4, 3) - elem(3, 4), -pair_unit(1, 2),
                                           -pair_unit(1, 2));
                            row.rho = -cov(3) + kI * cov(4) + cov(1, 2, 4) +
                                      kI * cov(1, 2, 3);
                        }};
        m["A3_6+A1#1"] = {"A3_6+A1",
                          true,
                          {pm({})},
                          [](const ParamMap&, ClassifiedStructure& row) {
                              row.t = Triple(elem(2, 1) - elem(1, 2),
                                             -pair_unit(3, 4), -pair_unit(3, 4));
                              row.rho = -cov(1) + kI * cov(2) + cov(2, 3, 4) +
                                        kI * cov(1, 3, 4);
                          }};
        m["A3_6+A1#2"] = {"A3_6+A1",
                          true,
                          {pm({})},
                          [](const ParamMap&, ClassifiedStructure& row) {
                              row.t = Triple(elem(4, 3) - elem(3, 4),
                                             -pair_unit(1, 2), -pair_unit(1, 2));
                              row.rho = -cov(3) + kI * cov(4) + cov(1, 2, 4) +
                                        kI * cov(1, 2, 3);
                          }};
        auto fill_a38 = [](const std::string& id) {
            return [id](const ParamMap& p, ClassifiedStructure& row) {
                Rational l = need(p, "lambda", id);
                row.t = Triple(elem(2, 1) - elem(1, 2) + l * (elem(3, 3) + elem(4, 4)),
                               -pair_unit(3, 4), -(l * l + 1) * pair_unit(3, 4));
                row.rho = cov(1) - kI * cov(2) -
                          GaussianRational(Rational(1), l) * cov(2, 3, 4) +
                          GaussianRational(l, Rational(-1)) * cov(1, 3, 4);
            };
        };
        m["A3_8+A1"] = {"A3_8+A1", true, lambda_samples, fill_a38("A3_8+A1")};
        m["A3_9+A1"] = {"A3_9+A1", true, lambda_samples, fill_a38("A3_9+A1")};
        m["A4_1"] = {
            "A4_1", true, lambda_samples,
            [](const ParamMap& p, ClassifiedStructure& row) {
                Rational l = need(p, "lambda", "A4_1");
                row.t = Triple(elem(4, 3) - elem(3, 4) + l * (elem(1, 1) + elem(2, 2)),
                               -pair_unit(1, 2), -(l * l + 1) * pair_unit(1, 2));
                row.rho = -cov(3) + kI * cov(4) +
                          GaussianRational(Rational(1), l) * cov(1, 2, 4) +
                          GaussianRational(-l, Rational(1)) * cov(1, 2, 3);
            }};
        m["A4_5(-1/2,-1/2)"] = {
            "A4_5", true,
            {pm({})},
            [](const ParamMap&, ClassifiedStructure& row) {
                row.family_params =
                    pm({{"alpha", Rational(-1, 2)}, {"beta", Rational(-1, 2)}});
                row.t = Triple(elem(2, 3) - elem(3, 2), -pair_unit(1, 4),
                               -pair_unit(1, 4));
                row.rho = cov(2) + kI * cov(3) - cov(1, 3, 4) + kI * cov(1, 2, 4);
            }};
        m["A4_6(-2beta,beta)"] = {
            "A4_6", true,
            {pm({{"beta", Rational(1)}, {"eps", Rational(1)}}),
             pm({{"beta", two}, {"eps", Rational(-1)}})},
            [](const ParamMap& p, ClassifiedStructure& row) {
                Rational b = need(p, "beta", "A4_6(-2beta,beta)");
                Rational e = need_sign(p, "eps", "A4_6(-2beta,beta)");
                row.family_params = pm({{"alpha", Rational(-2) * b}, {"beta", b}});
                row.t = Triple(Rational(e) * (elem(2, 3) - elem(3, 2)),
                               -e * pair_unit(1, 4), -e * pair_unit(1, 4));
                GaussianRational ge{e};
                row.rho = cov(2) + ge * kI * cov(3) - cov(1, 3, 4) +
                          ge * kI * cov(1, 2, 4);
            }};
        m["A4_10"] = {
            "A4_10", true,
            {pm({{"lambda", Rational(0)}, {"eps", Rational(1)}}),
             pm({{"lambda", Rational(1)}, {"eps", Rational(-1)}})},
            [](const ParamMap& p, ClassifiedStructure& row) {
                Rational l = need(p, "lambda", "A4_10");
                Rational e = need_sign(p, "eps", "A4_10");
                row.t = Triple(elem(2, 3) - elem(3, 2) + l * (elem(1, 1) + elem(4, 4)),
                               -e * pair_unit(1, 4), -e * (l * l + 1) * pair_unit(1, 4));
                GaussianRational ge{e};
                row.rho = cov(2) + kI * cov(3) -
                          ge * GaussianRational(Rational(1), l) * cov(1, 3, 4) +
                          ge * GaussianRational(-l, Rational(1)) * cov(1, 2, 4);
            }};
        return m;
    }();
    return reg;
}

}  // namespace

const std::vector<std::string>& classified_structure_ids() { return row_order(); }

std::vector<ParamMap> classified_structure_samples(const std::string& id) {
    auto it = row_registry().find(id);
    if (it == row_registry().end())
        throw std::invalid_argument("classified_structure_samples: unknown id '" + id +
                                    "'");
    return it->second.samples;
}

ClassifiedStructure classified_structure(const std::string& id, const ParamMap& params) {
    auto it = row_registry().find(id);
    if (it == row_registry().end())
        throw std::invalid_argument("classified_structure: unknown id '" + id + "'");
    const RowDef& def = it->second;

    ClassifiedStructure row;
    row.id = id;
    row.family = def.family;
    row.params = params;
    row.unimodular = def.unimodular;
    def.fill(params, row);

    Catalogue::Resolved res;
    try {
        res = Catalogue::instance().build(def.family, row.family_params);
    } catch (const CatalogueError& e) {
        throw std::invalid_argument(std::string("classified_structure: ") + e.what());
    }
    row.algebra = res.algebra;
    if (row.unimodular != row.algebra.is_unimodular())
        throw std::logic_error("classified_structure: unimodularity mismatch for '" +
                               id + "'");

    if (!is_gcs(row.algebra, row.t))
        throw std::logic_error("classified_structure: row '" + id +
                               "' fails the integrability equations");
    if (type_by_rank(row.t) != 1)
        throw std::logic_error("classified_structure: row '" + id + "' is not type 1");
    if (!projectively_equal(row.rho, annihilator_spinor(row.t)))
        throw std::logic_error("classified_structure: row '" + id +
                               "' spinor does not span the annihilator line");
    return row;
}

}  // namespace gcs4
