#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "hls/matrix.hpp"

namespace hlstest {

struct FfResult {
  std::size_t rank = 0;
  std::vector<std::vector<mpq_class>> nullspace;
};

/// Fraction-free (Bareiss) elimination over integers after clearing each
/// row's denominators, with the nullspace recovered by rational
/// back-substitution from the echelon form. A deliberately separate code
/// path from the library's Gauss-Jordan reduction: different pivoting,
/// different arithmetic representation, no shared elimination code.
FfResult fraction_free_solve(const hls::Matrix& m);

std::vector<hls::Vec> to_vecs(const std::vector<std::vector<mpq_class>>& vs);

}  // namespace hlstest
