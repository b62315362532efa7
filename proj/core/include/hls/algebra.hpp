#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hls/graded_map.hpp"
#include "hls/grading.hpp"
#include "hls/linalg.hpp"

namespace hls {

/// Finite-dimensional Hom-Lie superalgebra over Q, given by a graded basis,
/// the bracket's structure constants and a twist map alpha of even degree.
///
/// Sign conventions, fixed once here and used everywhere:
///   skew-supersymmetry   [x,y] = -(-1)^(|x||y|) [y,x]
///   twisted Jacobi       (-1)^(|x||z|)[alpha(x),[y,z]]
///                      + (-1)^(|y||x|)[alpha(y),[z,x]]
///                      + (-1)^(|z||y|)[alpha(z),[x,y]] = 0
class HomLieSuperalgebra {
 public:
  /// Builds and validates; throws GradingError/ValidationError naming the
  /// first failing tuple when an axiom does not hold.
  static HomLieSuperalgebra create(std::string name, GradedBasis basis,
                                   GradedBilinearMap bracket, GradedLinearMap alpha);
  /// Builds without the axiom gate. Used by the validate pipeline, which
  /// reports failures instead of throwing.
  static HomLieSuperalgebra unchecked(std::string name, GradedBasis basis,
                                      GradedBilinearMap bracket, GradedLinearMap alpha);

  const std::string& name() const { return name_; }
  const GradedBasis& basis() const { return basis_; }
  const GradedBilinearMap& bracket() const { return bracket_; }
  const GradedLinearMap& alpha() const { return alpha_; }
  std::size_t dim() const { return basis_.dim(); }
  Parity parity(std::size_t i) const { return basis_.parity(i); }

  /// [x, y] for arbitrary coordinate vectors.
  Vec bracket_of(const Vec& x, const Vec& y) const { return bracket_.eval(x, y); }
  /// [e_i, e_j].
  Vec bracket_basis(std::size_t i, std::size_t j) const {
    return bracket_.eval_basis(i, j);
  }
  Vec alpha_of(const Vec& v) const { return alpha_.apply(v); }
  Vec alpha_basis(std::size_t j) const { return alpha_.apply_basis(j); }

  /// Cached inverse of alpha; nullopt when singular.
  const std::optional<Matrix>& alpha_inverse() const { return alpha_inv_; }

  HomLieSuperalgebra with_name(std::string name) const;

 private:
  HomLieSuperalgebra(std::string name, GradedBasis basis, GradedBilinearMap bracket,
                     GradedLinearMap alpha);
  std::string name_;
  GradedBasis basis_;
  GradedBilinearMap bracket_;
  GradedLinearMap alpha_;
  std::optional<Matrix> alpha_inv_;
};

struct ValidationIssue {
  std::vector<std::size_t> indices;
  Vec residual;
};

struct ValidationReport {
  bool grading_ok = true;
  bool skew_ok = true;
  bool jacobi_ok = true;
  bool multiplicative = true;
  bool alpha_invertible = true;
  std::vector<ValidationIssue> grading_witnesses;
  std::vector<ValidationIssue> skew_witnesses;
  std::vector<ValidationIssue> jacobi_witnesses;
  std::vector<ValidationIssue> multiplicativity_witnesses;

  /// The axioms an algebra must satisfy. Multiplicativity and invertibility
  /// of alpha are recorded but optional.
  bool axioms_ok() const { return grading_ok && skew_ok && jacobi_ok; }
};

/// Re-derives every axiom from the stored structure constants: grading of
/// bracket and alpha, skew-supersymmetry on all pairs, the twisted Jacobi
/// identity on all triples, multiplicativity alpha([x,y]) = [alpha x, alpha y]
/// and invertibility of alpha.
ValidationReport validate(const HomLieSuperalgebra& h);

/// Span of all bracket values [e_i, e_j].
Subspace derived_subalgebra(const HomLieSuperalgebra& h);

/// {v : [x, v] = 0 for all x in X}.
Subspace centralizer(const HomLieSuperalgebra& h, const Subspace& x);

Subspace center(const HomLieSuperalgebra& h);

bool is_perfect(const HomLieSuperalgebra& h);
bool is_centerless(const HomLieSuperalgebra& h);

struct CenterQuotient {
  HomLieSuperalgebra algebra;
  /// Rectangular projection (quotient dim x ambient dim): coordinates in the
  /// complement basis after eliminating the center components.
  Matrix projection;
  /// Ambient indices of the complement basis (non-pivot columns of Z(H)).
  std::vector<std::size_t> complement;
  Subspace center;
};

/// Quotient by the center along the complement of the RREF pivot columns of
/// Z(H). Requires alpha(Z) inside Z and a nonzero quotient.
CenterQuotient quotient_by_center(const HomLieSuperalgebra& h);

/// Twist of an untwisted algebra (alpha = id) along an even automorphism a:
/// new bracket a([x,y]), new twist map a.
HomLieSuperalgebra yau_twist(const HomLieSuperalgebra& l, const GradedLinearMap& a,
                             const std::string& name = "");

}  // namespace hls
