#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "hls/algebra.hpp"
#include "hls/checks_types.hpp"

namespace hls {

/// Symmetry imposed on bilinear maps in the second defining family.
///   Skew:    phi(x,y) = -(-1)^(|x||y|) phi(y,x)   (default)
///   Printed: phi(x,y) = +(-1)^(|x||y|) phi(y,x)
enum class SymmetryConvention { Skew, Printed };

std::string convention_name(SymmetryConvention c);

/// Unknown layout for a degree-s bilinear map: the parity-admissible tensor
/// entries (i, j, k) with parity(k) = parity(i) + parity(j) + s, in
/// lexicographic order. This is the coordinate convention every solver and
/// oracle shares.
std::vector<std::array<std::size_t, 3>> admissible_bilinear_entries(
    const GradedBasis& basis, Parity s);

/// Unknown layout for a degree-s linear map: entries (k, j) with
/// parity(k) = parity(j) + s, in lexicographic order.
std::vector<std::array<std::size_t, 2>> admissible_linear_entries(
    const GradedBasis& basis, Parity s);

struct BiderivationSpace {
  Parity degree;
  SymmetryConvention convention;
  std::vector<GradedBilinearMap> basis;
  std::size_t constraint_rank = 0;
  std::size_t unknowns = 0;
  std::size_t dim() const { return basis.size(); }
};

struct CentroidSpace {
  Parity degree;
  std::vector<GradedLinearMap> basis;
  std::size_t constraint_rank = 0;
  std::size_t unknowns = 0;
  std::size_t dim() const { return basis.size(); }
};

struct CommutingMapSpace {
  std::vector<GradedLinearMap> basis;
  std::size_t constraint_rank = 0;
  std::size_t unknowns = 0;
  std::size_t dim() const { return basis.size(); }
};

/// Degree-s bilinear maps phi with, on all basis tuples:
///   phi(alpha x, alpha y) = alpha(phi(x, y)),
///   the chosen symmetry convention, and
///   phi([x,y], alpha z) = (-1)^(s|x|) [alpha x, phi(y,z)]
///                       + (-1)^(|y||z|) [phi(x,z), alpha y].
/// Requires invertible alpha.
BiderivationSpace biderivation_space(const HomLieSuperalgebra& h, Parity s,
                                     SymmetryConvention conv = SymmetryConvention::Skew);

/// Degree-s linear maps delta with delta([x,y]) = (-1)^(s|x|) [alpha x, delta y]
/// and alpha delta = delta alpha.
CentroidSpace centroid_space(const HomLieSuperalgebra& h, Parity s);

/// Even linear maps d with [d x, y] = [x, d y] and alpha d = d alpha.
CommutingMapSpace commuting_map_space(const HomLieSuperalgebra& h);

/// Residuals of the three biderivation families, evaluated functionally
/// (independent of the solver's row assembly). Empty witnesses iff member.
CheckReport biderivation_residuals(const HomLieSuperalgebra& h,
                                   const GradedBilinearMap& phi,
                                   SymmetryConvention conv);

CheckReport centroid_residuals(const HomLieSuperalgebra& h, const GradedLinearMap& delta);

CheckReport commuting_residuals(const HomLieSuperalgebra& h, const GradedLinearMap& d);

}  // namespace hls
