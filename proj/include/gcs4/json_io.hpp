#ifndef GCS4_JSON_IO_HPP
#define GCS4_JSON_IO_HPP

#include "gcs4/linalg.hpp"
#include "gcs4/matrix.hpp"

#include <json.hpp>

namespace gcs4::io {

using json = nlohmann::ordered_json;

/// Scalar encodings: rationals are strings "p", "p/q" or "-p/q" (sign on the
/// numerator); Gaussian rationals are objects {"re": "...", "im": "..."}.
/// Matrices are arrays of row arrays.
json to_json(const Rational& r);
json to_json(const GaussianRational& z);
json to_json(const QMatrix& m);
json to_json(const CMatrix& m);
json to_json(const QVec& v);
json to_json(const CVec& v);

Rational rational_from_json(const json& j);
GaussianRational gaussian_from_json(const json& j);  // accepts a bare string for real values
QMatrix qmatrix_from_json(const json& j);
CMatrix cmatrix_from_json(const json& j);
QVec qvec_from_json(const json& j);
CVec cvec_from_json(const json& j);

}  // namespace gcs4::io

#endif
