#pragma once

#include <map>
#include <string>

#include "gcs4/rational.hpp"

namespace gcs4 {

// Tiny expression language over exact rationals, used by the structure
// catalogue to describe parameterized bracket coefficients and parameter
// domains.
//
// Arithmetic:   + - * /, unary -, parentheses, abs(x), rational literals
//               ("2", "-1/2", "0.5" is NOT accepted), parameter names.
// Predicates:   comparisons == != < <= > >=, boolean && || !, and the
//               literals true / false.
//
// Both evaluators throw std::invalid_argument on syntax errors, unknown
// names, or division by zero.
using ParamMap = std::map<std::string, Rational>;

Rational eval_scalar(const std::string& expr, const ParamMap& params);
bool eval_predicate(const std::string& expr, const ParamMap& params);

}  // namespace gcs4
