#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "gcs4/expr.hpp"
#include "gcs4/lie_algebra.hpp"

namespace gcs4 {

// One row of the four-dimensional Lie algebra catalogue: a named family
// together with its parameter domain, structure constants (as expressions in
// the parameters), and the structure-admissibility flags recorded for it.
struct CatalogueEntry {
    struct BracketSpec {
        std::size_t u = 0, v = 0;          // 0-based basis indices, u < v
        std::map<std::size_t, std::string> value;  // coefficient exprs by basis index
    };

    std::string name;    // family key, e.g. "A4_5"
    std::string alias;   // the same family in the alternate naming scheme
    std::vector<std::string> params;  // parameter names, in declaration order
    std::string domain;  // predicate over params selecting this row
    std::vector<BracketSpec> brackets;
    bool unimodular = false;
    // Predicates (over params) for which structure types the family admits.
    std::string admits_type2, admits_type1, admits_type0;
    std::string source;  // provenance locator used by the fixture corpus
};

class CatalogueError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// The catalogue of 4-dimensional Lie algebras, split by unimodularity.
// Families with parameters may occupy several rows with disjoint domains
// (special parameter values can change unimodularity or admissibility).
class Catalogue {
  public:
    static const Catalogue& instance();

    const std::vector<CatalogueEntry>& entries() const { return entries_; }

    // All rows registered under a family name, in file order.
    std::vector<const CatalogueEntry*> entries_for(const std::string& name) const;

    struct Resolved {
        const CatalogueEntry* entry = nullptr;
        LieAlgebra algebra;
        ParamMap params;
    };

    // Resolve a family name + parameter values to the unique matching row and
    // instantiate its Lie algebra. Throws CatalogueError when the name is
    // unknown, parameters are missing/superfluous, or no row's domain accepts
    // the values.
    Resolved build(const std::string& name, const ParamMap& params = {}) const;

  private:
    Catalogue();
    std::vector<CatalogueEntry> entries_;
};

}  // namespace gcs4
