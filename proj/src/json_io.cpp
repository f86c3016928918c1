#include "gcs4/json_io.hpp"

namespace gcs4::io {

json to_json(const Rational& r) { return r.str(); }

json to_json(const GaussianRational& z) {
  return json{{"re", z.re().str()}, {"im", z.im().str()}};
}

json to_json(const QMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const CMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const QVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

json to_json(const CVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw std::invalid_argument("rational_from_json: expected string, got " + j.dump());
  return Rational::from_string(j.get<std::string>());
}

GaussianRational gaussian_from_json(const json& j) {
  if (j.is_string() || j.is_number_integer()) return GaussianRational(rational_from_json(j));
  if (!j.is_object()) throw std::invalid_argument("gaussian_from_json: expected object, got " + j.dump());
  Rational re = j.contains("re") ? rational_from_json(j.at("re")) : Rational(0);
  Rational im = j.contains("im") ? rational_from_json(j.at("im")) : Rational(0);
  return GaussianRational(re, im);
}

namespace {

template <typename T, typename FromJson>
Matrix<T> matrix_from_json(const json& j, FromJson from) {
  if (!j.is_array()) throw std::invalid_argument("matrix_from_json: expected array of rows");
  std::size_t rows = j.size();
  std::size_t cols = rows ? j.at(0).size() : 0;
  Matrix<T> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const json& row = j.at(i);
    if (row.size() != cols) throw std::invalid_argument("matrix_from_json: ragged rows");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = from(row.at(k));
  }
  return m;
}

}  // namespace

QMatrix qmatrix_from_json(const json& j) { return matrix_from_json<Rational>(j, rational_from_json); }
CMatrix cmatrix_from_json(const json& j) { return matrix_from_json<GaussianRational>(j, gaussian_from_json); }

QVec qvec_from_json(const json& j) {
  QVec v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

CVec cvec_from_json(const json& j) {
  CVec v;
  for (const auto& x : j) v.push_back(gaussian_from_json(x));
  return v;
}

}  // namespace gcs4::io
