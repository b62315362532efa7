#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "hls/algebra.hpp"
#include "hls/spaces.hpp"
#include "hls/verification.hpp"

namespace hls {

/// "x - 2*y" rendering of a coordinate vector over the basis labels.
std::string format_vector(const GradedBasis& basis, const Vec& v);

/// Structural summary of an algebra: derived subalgebra, center, the
/// centralizer of the derived subalgebra, and the usual flags.
struct AnalyzeReport {
  std::string name;
  std::size_t even_dim = 0;
  std::size_t odd_dim = 0;
  Subspace derived;
  Subspace center_space;
  Subspace derived_centralizer;
  bool perfect = false;
  bool centerless = false;
  bool multiplicative = false;
  bool alpha_invertible = false;
};

AnalyzeReport analyze(const HomLieSuperalgebra& h);

/// Which graded degrees a spaces listing covers.
enum class DegreeFilter { Even, Odd, All };

nlohmann::ordered_json subspace_json(const GradedBasis& basis, const Subspace& s);

nlohmann::ordered_json validation_json(const HomLieSuperalgebra& h,
                                       const ValidationReport& r);
std::string validation_text(const HomLieSuperalgebra& h, const ValidationReport& r);

nlohmann::ordered_json analyze_json(const HomLieSuperalgebra& h, const AnalyzeReport& a);
std::string analyze_text(const HomLieSuperalgebra& h, const AnalyzeReport& a);

/// Computes and serializes the solution spaces selected by the filter:
/// biderivations and centroid per degree, commuting maps when the filter
/// includes the even degree.
nlohmann::ordered_json spaces_json(const HomLieSuperalgebra& h, DegreeFilter f,
                                   SymmetryConvention conv);
std::string spaces_text(const HomLieSuperalgebra& h, DegreeFilter f,
                        SymmetryConvention conv);

nlohmann::ordered_json check_report_json(const CheckReport& r);
nlohmann::ordered_json verify_json(const VerifyReport& r);

}  // namespace hls
