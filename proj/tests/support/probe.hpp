#pragma once

#include <cstddef>

#include "hls/algebra.hpp"
#include "hls/spaces.hpp"

namespace hlstest {

/// Full constraint systems assembled by brute force: every defining equation
/// is evaluated coordinate-by-coordinate against unit probe maps (one
/// admissible tensor entry set to 1). The unknown ordering is the shared
/// admissible-entry layout; the residual formulas are transcribed here
/// independently of the solver's row assembly and of the library's
/// functional evaluators. Rows include identically-zero equations.
hls::Matrix probe_biderivation_rows(const hls::HomLieSuperalgebra& h, hls::Parity s,
                                    hls::SymmetryConvention conv);
hls::Matrix probe_centroid_rows(const hls::HomLieSuperalgebra& h, hls::Parity s);
hls::Matrix probe_commuting_rows(const hls::HomLieSuperalgebra& h);

/// Coordinates of a solver-produced map in the admissible-entry layout.
/// Throws if the map has a nonzero non-admissible entry.
hls::Vec flatten_bilinear(const hls::HomLieSuperalgebra& h, hls::Parity s,
                          const hls::GradedBilinearMap& m);
hls::Vec flatten_linear(const hls::HomLieSuperalgebra& h, hls::Parity s,
                        const hls::GradedLinearMap& m);

}  // namespace hlstest
