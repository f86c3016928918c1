#include "gcs4/type1_model.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace gcs4 {

LieAlgebra model_algebra(const Type1ModelParams& P) {
    LieAlgebra g(4);
    g.set_bracket(0, 1, {P.a1, P.a2, Rational(0), Rational(0)});
    g.set_bracket(2, 3, {P.b1, P.b2, P.b3, P.b4});
    g.set_bracket(0, 2, {-P.p1, -P.r1, P.x1, -P.y1});
    g.set_bracket(0, 3, {-P.p2, -P.r2, P.y1, P.x1});
    g.set_bracket(1, 2, {-P.q1, P.p1, P.x2, -P.y2});
    g.set_bracket(1, 3, {-P.q2, P.p2, P.y2, P.x2});
    return g;
}

Triple model_triple(const Type1ModelParams& P) {
    if (P.a == Rational(0)) throw std::invalid_argument("bivector scale a must be nonzero");
    Triple t;
    t.J(0, 0) = P.lambda;
    t.J(1, 1) = P.lambda;
    t.J(2, 3) = Rational(1);
    t.J(3, 2) = Rational(-1);
    // R = a e1^e2 as the map alpha |-> pi^#(alpha): e^1 |-> a e2, e^2 |-> -a e1.
    t.R(1, 0) = P.a;
    t.R(0, 1) = -P.a;
    // sigma = ((1+lambda^2)/a) e^1^e^2 as u |-> i_u omega: e1 |-> c e^2, e2 |-> -c e^1.
    const Rational c = (Rational(1) + P.lambda * P.lambda) / P.a;
    t.sigma(1, 0) = c;
    t.sigma(0, 1) = -c;
    return t;
}

std::vector<std::pair<std::string, Rational>> structure_equations(const Type1ModelParams& P) {
    const Rational &a1 = P.a1, &a2 = P.a2, &b1 = P.b1, &b2 = P.b2, &b3 = P.b3, &b4 = P.b4;
    const Rational &x1 = P.x1, &x2 = P.x2, &y1 = P.y1, &y2 = P.y2;
    const Rational &p1 = P.p1, &p2 = P.p2, &q1 = P.q1, &q2 = P.q2, &r1 = P.r1, &r2 = P.r2;
    const Rational two(2);
    return {
        {"S01", a1 * x1 + a2 * x2},
        {"S02", a1 * y1 + a2 * y2},
        {"S03", a1 * p1 + a2 * q1 - p1 * x2 + p2 * y2 + q1 * x1 - q2 * y1},
        {"S04", a1 * r1 - a2 * p1 - p1 * x1 + p2 * y1 - r1 * x2 + r2 * y2},
        {"S05", a1 * p2 + a2 * q2 - p1 * y2 - p2 * x2 + q1 * y1 + q2 * x1},
        {"S06", a1 * r2 - a2 * p2 - p1 * y1 - p2 * x1 - r1 * y2 - r2 * x2},
        {"S07", a1 * b2 - two * b1 * x1 - b3 * p1 - b4 * p2 + q1 * r2 - q2 * r1},
        {"S08", a2 * b2 - two * b2 * x1 - b3 * r1 - b4 * r2 - two * p1 * r2 + two * p2 * r1},
        {"S09", -b3 * x1 + b4 * y1 + p1 * y1 - p2 * x1 + r1 * y2 - r2 * x2},
        {"S10", -b3 * y1 - b4 * x1 + p1 * x1 + p2 * y1 + r1 * x2 + r2 * y2},
        {"S11", -a1 * b1 - two * b1 * x2 - b3 * q1 - b4 * q2 + two * p1 * q2 - two * p2 * q1},
        {"S12", -a2 * b1 - two * b2 * x2 + b3 * p1 + b4 * p2 - q1 * r2 + q2 * r1},
        {"S13", -b3 * x2 + b4 * y2 - p1 * y2 + p2 * x2 + q1 * y1 - q2 * x1},
        {"S14", -b3 * y2 - b4 * x2 - p1 * x2 - p2 * y2 + q1 * x1 + q2 * y1},
    };
}

bool structure_equations_check(const Type1ModelParams& P) {
    for (const auto& [name, value] : structure_equations(P)) {
        (void)name;
        if (value != Rational(0)) return false;
    }
    return true;
}

bool unimodular_param_criterion(const Type1ModelParams& P) {
    const Rational two(2), zero(0);
    return P.a2 + two * P.x1 == zero && P.a1 - two * P.x2 == zero && P.b3 == zero &&
           P.b4 == zero;
}

QMatrix killing_restriction_formula(const Type1ModelParams& P) {
    const Rational two(2);
    QMatrix Q(2, 2);
    Q(0, 0) = P.a2 * P.a2 + two * P.x1 * P.x1 - two * P.y1 * P.y1;
    Q(0, 1) = -P.a1 * P.a2 + two * P.x1 * P.x2 - two * P.y1 * P.y2;
    Q(1, 0) = Q(0, 1);
    Q(1, 1) = P.a1 * P.a1 + two * P.x2 * P.x2 - two * P.y2 * P.y2;
    return Q;
}

namespace {

const std::map<std::string, std::vector<std::string>>& family_table() {
    static const std::map<std::string, std::vector<std::string>> table = {
        {"U1", {"y", "q1", "q2"}},
        {"U2", {"y", "q1", "q2", "b1", "b2"}},
        {"U3", {"b1", "b2", "p", "q", "r"}},
        {"B1", {"q1", "q2"}},
        {"B2", {"q1", "q2"}},
        {"B3", {"x", "y", "q1", "q2"}},
        {"B4", {"y", "q1", "q2"}},
        {"A1", {"y1", "y2"}},
        {"A2", {"x", "c", "a", "b"}},
        {"A3", {"b1", "b2", "b3", "p", "q", "r"}},
        {"A4", {"q1", "q2", "b1", "b2"}},
        {"A5", {"p"}},
    };
    return table;
}

}  // namespace

const std::vector<std::string>& family_param_names(const std::string& family) {
    const auto& table = family_table();
    auto it = table.find(family);
    if (it == table.end()) throw std::invalid_argument("unknown normal-form family '" + family + "'");
    return it->second;
}

Type1ModelParams family_params(const std::string& family, const ParamMap& values) {
    const auto& names = family_param_names(family);
    ParamMap v = values;
    Rational lambda(0);
    if (auto it = v.find("lambda"); it != v.end()) {
        lambda = it->second;
        v.erase(it);
    }
    for (const auto& n : names)
        if (!v.count(n))
            throw std::invalid_argument("family '" + family + "' needs parameter '" + n + "'");
    for (const auto& [key, value] : v) {
        (void)value;
        if (std::find(names.begin(), names.end(), key) == names.end())
            throw std::invalid_argument("family '" + family + "' has no parameter '" + key + "'");
    }

    Type1ModelParams P;
    P.lambda = lambda;
    P.a = Rational(1);
    const Rational zero(0), one(1), half(1, 2);

    if (family == "U1") {
        P.a1 = one;
        P.x2 = half;
        P.y2 = v.at("y");
        P.q1 = v.at("q1");
        P.q2 = v.at("q2");
    } else if (family == "U2") {
        P.y2 = v.at("y");
        P.q1 = v.at("q1");
        P.q2 = v.at("q2");
        P.b1 = v.at("b1");
        P.b2 = v.at("b2");
    } else if (family == "U3") {
        P.b1 = v.at("b1");
        P.b2 = v.at("b2");
        P.p2 = v.at("p");
        P.r2 = v.at("r");
        P.q2 = v.at("q");
    } else if (family == "B1") {
        P.a1 = one;
        P.x2 = one;
        P.p2 = one;
        P.b3 = one;
        P.b1 = v.at("q1");
        P.q1 = -v.at("q1");
        P.q2 = -v.at("q2");
    } else if (family == "B2") {
        P.a1 = one;
        P.b1 = v.at("q1");
        P.b3 = one;
        P.q1 = -v.at("q1");
        P.q2 = -v.at("q2");
    } else if (family == "B3") {
        if (v.at("x") == half)
            throw std::invalid_argument("family 'B3' requires x != 1/2");
        P.a1 = one;
        P.x2 = v.at("x");
        P.y2 = v.at("y");
        P.q1 = v.at("q1");
        P.q2 = v.at("q2");
    } else if (family == "B4") {
        P.a1 = one;
        P.x2 = -half;
        P.y2 = v.at("y");
        P.q1 = v.at("q1");
        P.q2 = v.at("q2");
        P.b1 = one;
    } else if (family == "A1") {
        P.x1 = one;
        P.y1 = v.at("y1");
        P.y2 = v.at("y2");
    } else if (family == "A2") {
        if (v.at("x") == zero) throw std::invalid_argument("family 'A2' requires x != 0");
        if (v.at("a") == zero && v.at("b") == zero)
            throw std::invalid_argument("family 'A2' requires (a, b) != (0, 0)");
        P.x1 = v.at("x");
        P.y1 = v.at("c") * v.at("x");
        P.r1 = v.at("a");
        P.r2 = v.at("b");
    } else if (family == "A3") {
        if (v.at("b3") == zero) throw std::invalid_argument("family 'A3' requires b3 != 0");
        P.b1 = v.at("b1");
        P.b2 = v.at("b2");
        P.b3 = v.at("b3");
        P.p2 = -v.at("p");
        P.r2 = -v.at("r");
        P.q2 = -v.at("q");
    } else if (family == "A4") {
        if (v.at("q1") == zero) throw std::invalid_argument("family 'A4' requires q1 != 0");
        P.b3 = Rational(-2);
        P.p2 = one;
        P.q1 = v.at("q1");
        P.q2 = v.at("q2");
        P.b1 = v.at("b1");
        P.b2 = v.at("b2");
    } else if (family == "A5") {
        const Rational p = v.at("p");
        if (p == zero) throw std::invalid_argument("family 'A5' requires p != 0");
        P.b1 = -p * p;
        P.b2 = p * p;
        P.b3 = Rational(2) * p;
        P.x1 = one;
        P.y1 = one;
        P.p1 = p;
        P.x2 = one;
        P.y2 = -one;
        P.r2 = -p;
        P.q2 = -p;
    }
    return P;
}

}  // namespace gcs4
