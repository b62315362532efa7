#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hls/algebra.hpp"
#include "hls/checks.hpp"
#include "hls/spaces.hpp"

namespace hls {

/// One row of the verification table: an instance-qualified check name
/// (e.g. "bracket_closure[deg=0,el=1]") and its outcome.
struct VerifyRow {
  std::string name;
  CheckReport report;
};

struct VerifyReport {
  std::string algebra;
  SymmetryConvention convention = SymmetryConvention::Skew;
  std::vector<VerifyRow> rows;

  std::size_t passed_count() const;
  std::size_t failed_count() const;
  std::size_t skipped_count() const;
  /// True iff no row failed (skips do not count against success).
  bool all_passed() const { return failed_count() == 0; }
};

/// Runs every identity and theorem check that applies to h, in a fixed
/// order:
///   1. biderivation membership of [x, d y] for each commuting basis map d,
///   2. biderivation membership of alpha^{-1} delta([x,y]) for each centroid
///      basis element delta, both degrees,
///   3. bracket closure, kernel pairs and adjoint defect for each
///      biderivation basis element, both degrees,
///   4. centroid decomposition of each biderivation basis element (perfect,
///      centerless algebras; skipped otherwise),
///   5. the special-biderivation space analysis (centerless algebras;
///      skipped otherwise),
///   6. the double-bracket identity for each commuting basis map,
///   7. commuting maps against the even centroid (skip-aware).
/// Rows 1 and 2 always use the skew convention (the constructions produce
/// skew maps); rows 3 to 5 use the requested convention. Requires
/// invertible alpha.
VerifyReport run_verification(const HomLieSuperalgebra& h,
                              SymmetryConvention conv = SymmetryConvention::Skew);

/// Plain-text table, one row per check; byte-identical for identical inputs.
std::string render_text(const VerifyReport& r);

}  // namespace hls
