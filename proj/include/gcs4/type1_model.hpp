#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gcs4/expr.hpp"
#include "gcs4/lie_algebra.hpp"
#include "gcs4/triple.hpp"

namespace gcs4 {

// Parameters of the general type-1 model: every 4-dimensional Lie algebra
// carrying a type-1 generalized complex structure can be presented, in a
// basis adapted to the structure, with the bracket
//
//   [e1,e2] = a1 e1 + a2 e2
//   [e3,e4] = b1 e1 + b2 e2 + b3 e3 + b4 e4
//   [e1,e3] = x1 e3 - y1 e4 - p1 e1 - r1 e2
//   [e1,e4] = y1 e3 + x1 e4 - p2 e1 - r2 e2
//   [e2,e3] = x2 e3 - y2 e4 - q1 e1 + p1 e2
//   [e2,e4] = y2 e3 + x2 e4 - q2 e1 + p2 e2
//
// and the structure given by J = lambda on span{e1,e2} plus a rotation in
// span{e3,e4}, R the bivector a e1^e2, and sigma the 2-form
// ((1+lambda^2)/a) e^1^e^2.
struct Type1ModelParams {
    Rational lambda{0};
    Rational a{1};  // bivector scale, nonzero
    Rational a1{0}, a2{0}, b1{0}, b2{0}, b3{0}, b4{0};
    Rational x1{0}, x2{0}, y1{0}, y2{0};
    Rational p1{0}, p2{0}, q1{0}, q2{0}, r1{0}, r2{0};
};

// The bracket table above (no Jacobi check — callers decide what to assert).
LieAlgebra model_algebra(const Type1ModelParams& P);

// The adapted-basis structure matrices (J, R, sigma) for (lambda, a).
Triple model_triple(const Type1ModelParams& P);

// The quadratic system in the bracket coefficients that is equivalent to the
// Jacobi identity for the table above, as named residuals (all zero iff the
// table defines a Lie algebra).
std::vector<std::pair<std::string, Rational>> structure_equations(const Type1ModelParams& P);
bool structure_equations_check(const Type1ModelParams& P);

// Unimodularity of the model in terms of its parameters:
// a2 + 2 x1 = a1 - 2 x2 = b3 = b4 = 0.
bool unimodular_param_criterion(const Type1ModelParams& P);

// Closed form of the Killing form restricted to span{e1,e2}, as a symmetric
// 2x2 matrix in the parameters.
QMatrix killing_restriction_formula(const Type1ModelParams& P);

// Named specializations of the model: the normal-form families of the type-1
// classification. Families "U1","U2","U3" are the unimodular normal forms,
// "B1".."B4" the non-unimodular ones with [g,g] meeting the image of R, and
// "A1".."A5" the remaining non-unimodular ones. `values` supplies each
// family's parameters by name (plus optional "lambda", default 0); the
// bivector scale is fixed to a = 1. Throws std::invalid_argument for unknown
// families, bad parameter names, or values outside the family's domain.
Type1ModelParams family_params(const std::string& family, const ParamMap& values);

// The parameter names family_params expects for a family (without "lambda").
const std::vector<std::string>& family_param_names(const std::string& family);

}  // namespace gcs4
