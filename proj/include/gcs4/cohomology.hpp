#ifndef GCS4_COHOMOLOGY_HPP
#define GCS4_COHOMOLOGY_HPP

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "gcs4/expr.hpp"
#include "gcs4/exterior.hpp"
#include "gcs4/lie_algebra.hpp"
#include "gcs4/linalg.hpp"
#include "gcs4/triple.hpp"

namespace gcs4 {

/// The spinor grading of complexified invariant forms induced by an
/// integrable structure.  U_{-2} is the annihilator line of the structure and
/// U_{-2+j} is spanned by j-fold Clifford products of the conjugate null
/// space acting on it.  Levels are indexed by k = -2..2, stored at k + 2;
/// for an integrable structure their dimensions are (1, 4, 6, 4, 1) and they
/// decompose the full 16-dimensional form space.
struct GradedDecomposition {
    static constexpr int kLowest = -2;
    static constexpr int kHighest = 2;

    LieAlgebra algebra;
    Triple t;
    CForm rho;              // spans the level k = -2
    std::vector<CVec> lbar; // basis of the conjugate null space, (x, xi) coords
    std::array<std::vector<CForm>, 5> levels;

    const std::vector<CForm>& level(int k) const { return levels.at(k + 2); }
    std::size_t level_dim(int k) const { return level(k).size(); }
    /// Row span of the flattened level basis inside the 16-dim form space.
    CSubspace level_span(int k) const;
    std::array<std::size_t, 5> dims() const;
};

/// Build the grading for an integrable triple.  The spinor defaults to the
/// canonical annihilator line; a spanning spinor can also be supplied
/// directly (it is checked against the structure).  Throws std::logic_error
/// with a description of the failed stage if the expected grading does not
/// materialize (wrong null-space dimension, level dimensions, non-exhaustion,
/// or conjugation asymmetry).
GradedDecomposition build_grading(const LieAlgebra& g, const Triple& t);
GradedDecomposition build_grading(const LieAlgebra& g, const Triple& t,
                                  const CForm& rho);

/// The splitting d = del + dbar of the invariant differential through a
/// grading: del raises the level by one and dbar lowers it by one.  Matrices
/// are written in the level bases: del[k+2] maps coordinates in U_k to
/// coordinates in U_{k+1} (empty for k = 2), dbar[k+2] maps U_k to U_{k-1}
/// (empty for k = -2).  Construction fails with std::logic_error if d does
/// not split through adjacent levels or the squares
/// del^2, dbar^2, del dbar + dbar del do not vanish.
struct DifferentialSplit {
    std::array<CMatrix, 5> del;
    std::array<CMatrix, 5> dbar;

    DifferentialSplit()
        : del{CMatrix(0, 0), CMatrix(0, 0), CMatrix(0, 0), CMatrix(0, 0),
              CMatrix(0, 0)},
          dbar{CMatrix(0, 0), CMatrix(0, 0), CMatrix(0, 0), CMatrix(0, 0),
               CMatrix(0, 0)} {}

    const CMatrix& del_at(int k) const { return del.at(k + 2); }
    const CMatrix& dbar_at(int k) const { return dbar.at(k + 2); }
};

DifferentialSplit split_differential(const GradedDecomposition& gd);

/// Dimensions of the graded cohomologies of (U_*, del, dbar) by level
/// k = -2..2 (stored at k + 2): the del-cohomology, the kernel of both
/// operators modulo the image of del dbar, and the kernel of del dbar modulo
/// the sum of both images.  The two flags record whether the spanning spinor
/// is closed and whether dbar vanishes on the level k = -1.
struct CohomologyTable {
    std::array<int, 5> gh_del{};
    std::array<int, 5> gh_bc{};
    std::array<int, 5> gh_a{};
    bool d_rho_zero = false;
    bool im_dbar_minus1_zero = false;

    nlohmann::ordered_json to_json() const;
    friend bool operator==(const CohomologyTable& a, const CohomologyTable& b) {
        return a.gh_del == b.gh_del && a.gh_bc == b.gh_bc && a.gh_a == b.gh_a &&
               a.d_rho_zero == b.d_rho_zero &&
               a.im_dbar_minus1_zero == b.im_dbar_minus1_zero;
    }
};

CohomologyTable cohomology_table(const GradedDecomposition& gd,
                                 const DifferentialSplit& ds);
CohomologyTable cohomology_table(const LieAlgebra& g, const Triple& t);
CohomologyTable cohomology_table(const LieAlgebra& g, const Triple& t,
                                 const CForm& rho);

/// One verified classification row: the computed table at one parameter
/// sample, compared against the recorded expectation when one exists.
struct StructureBlockResult {
    std::string id;
    ParamMap params;
    CohomologyTable table;
    bool has_expected = false;
    bool matched = true;   // true when no expectation is recorded
    std::string mismatch;  // empty unless matched == false
};

struct CohomologyReport {
    std::vector<StructureBlockResult> blocks;  // one per (row, sample)
    std::size_t structures_checked = 0;        // rows with recorded expectations
    bool all_matched = true;

    nlohmann::ordered_json to_json() const;
};

/// Compute the cohomology table for every classification row at all of its
/// default parameter samples and compare with the recorded dimension tables.
CohomologyReport cohomology_full_report();

}  // namespace gcs4

#endif
