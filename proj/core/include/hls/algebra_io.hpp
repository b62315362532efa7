#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hls/algebra.hpp"

namespace hls {

/// Parsed but uninterpreted algebra description.
///
/// JSON shape:
///   {
///     "name": str,
///     "even": [labels...], "odd": [labels...],
///     "alpha": [[rational-str x n] x n],   // column-major, optional (id)
///     "brackets": [{"left": l, "right": r, "value": {label: rational-str}}]
///   }
/// Each unordered bracket pair appears at most once; the mirrored value is
/// derived from skew-supersymmetry. Unlisted pairs are zero.
struct AlgebraDescription {
  std::string name;
  std::vector<std::string> even;
  std::vector<std::string> odd;
  std::optional<std::vector<std::vector<std::string>>> alpha;  // [col][row]
  struct Bracket {
    std::string left, right;
    std::vector<std::pair<std::string, std::string>> value;  // label -> rational
  };
  std::vector<Bracket> brackets;
};

/// Structural parse only: JSON well-formedness and field shapes. Throws
/// InputError. Labels, duplicate pairs and rational literals are not
/// interpreted here.
AlgebraDescription parse_description(const std::string& json_text);

/// Builds the algebra without the axiom gate, so that validate() can report
/// grading/skew/Jacobi failures instead of throwing. Resolves labels and
/// rational literals; throws InputError on unknown or duplicate labels,
/// duplicate unordered pairs, bad literals or a misshapen alpha grid.
HomLieSuperalgebra assemble_unchecked(const AlgebraDescription& desc);

/// Parse + assemble + validate. Throws GradingError or ValidationError naming
/// the first failing tuple when the description breaks an axiom.
HomLieSuperalgebra load_algebra(const std::string& json_text);

/// Canonical JSON rendering: brackets listed once per unordered pair in basis
/// order, alpha omitted when it is the identity. Byte-stable across runs.
std::string emit_description(const HomLieSuperalgebra& h);

}  // namespace hls
