#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hls/matrix.hpp"

namespace hls {

/// A failing tuple together with the nonzero vector that witnesses the
/// failure (a residual, or the remainder of a subspace-membership reduction).
struct Witness {
  std::vector<std::size_t> indices;
  Vec residual;
};

enum class CheckStatus { Passed, Failed, Skipped };

/// Outcome of one mechanical check. `witnesses` is empty iff the check did
/// not fail; a Skipped check names its unmet hypotheses in `note`.
struct CheckReport {
  std::string check;
  CheckStatus status = CheckStatus::Passed;
  std::vector<Witness> witnesses;
  std::string note;

  bool passed() const { return status != CheckStatus::Failed; }
  bool skipped() const { return status == CheckStatus::Skipped; }
};

}  // namespace hls
