#ifndef GCS4_CLASSIFICATION_HPP
#define GCS4_CLASSIFICATION_HPP

#include <string>
#include <vector>

#include "gcs4/expr.hpp"
#include "gcs4/exterior.hpp"
#include "gcs4/lie_algebra.hpp"
#include "gcs4/triple.hpp"

namespace gcs4 {

/// One entry of the classification of invariant type-1 structures: the
/// catalogue family it lives on, the structure triple, and the pure spinor
/// spanning its annihilator line.  Several entries can share a family
/// (inequivalent structures on the same algebra are numbered "#1", "#2").
struct ClassifiedStructure {
    std::string id;          // classification key, e.g. "A3_6+A1#2"
    std::string family;      // catalogue family name
    ParamMap family_params;  // values passed to the catalogue
    ParamMap params;         // structure parameters (lambda, k, alpha, ...)
    LieAlgebra algebra;
    Triple t;
    CForm rho;               // spans the annihilator line of t
    bool unimodular = false;
};

/// All classification keys: the non-unimodular families first, then the
/// unimodular ones.  Order is stable.
const std::vector<std::string>& classified_structure_ids();

/// Default parameter assignments at which a row is exercised by the
/// verification suites.  Rows without parameters yield a single empty map.
std::vector<ParamMap> classified_structure_samples(const std::string& id);

/// Instantiate a classification row at given parameter values.
///
/// Validates the result: the triple must satisfy the integrability equations,
/// have type 1, and `rho` must span its canonical annihilator line.  Throws
/// std::invalid_argument for unknown keys or parameter values outside the
/// row's domain, std::logic_error when validation fails (which would indicate
/// corrupted row data).
ClassifiedStructure classified_structure(const std::string& id,
                                         const ParamMap& params = {});

}  // namespace gcs4

#endif
