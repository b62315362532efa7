#include "hls/verification.hpp"

#include <array>
#include <sstream>

#include "hls/errors.hpp"

namespace hls {

namespace {

std::string deg_el(Parity s, std::size_t i) {
  return "[deg=" + std::to_string(parity_int(s)) + ",el=" + std::to_string(i) + "]";
}

std::string el(std::size_t i) { return "[el=" + std::to_string(i) + "]"; }

std::size_t count_status(const VerifyReport& r, CheckStatus s) {
  std::size_t c = 0;
  for (const VerifyRow& row : r.rows) c += row.report.status == s ? 1 : 0;
  return c;
}

}  // namespace

std::size_t VerifyReport::passed_count() const {
  return count_status(*this, CheckStatus::Passed);
}
std::size_t VerifyReport::failed_count() const {
  return count_status(*this, CheckStatus::Failed);
}
std::size_t VerifyReport::skipped_count() const {
  return count_status(*this, CheckStatus::Skipped);
}

VerifyReport run_verification(const HomLieSuperalgebra& h, SymmetryConvention conv) {
  if (!h.alpha_inverse()) {
    throw PreconditionError("run_verification: alpha must be invertible");
  }

  VerifyReport out;
  out.algebra = h.name();
  out.convention = conv;

  CommutingMapSpace cms = commuting_map_space(h);

  // 1. Each commuting map d induces phi(x,y) = [x, d y], an even
  //    biderivation under the skew convention.
  for (std::size_t m = 0; m < cms.dim(); ++m) {
    GradedBilinearMap phi = bider_from_commuting(h, cms.basis[m]);
    CheckReport rep = biderivation_residuals(h, phi, SymmetryConvention::Skew);
    rep.check = "commuting_bracket_biderivation";
    out.rows.push_back({"commuting_bracket_biderivation" + el(m), std::move(rep)});
  }

  // 2. Each centroid element delta induces phi = alpha^{-1} delta([.,.]),
  //    a biderivation of the same degree under the skew convention.
  for (Parity s : {Parity::Even, Parity::Odd}) {
    CentroidSpace cs = centroid_space(h, s);
    for (std::size_t m = 0; m < cs.dim(); ++m) {
      GradedBilinearMap phi = bider_from_centroid(h, cs.basis[m]);
      CheckReport rep = biderivation_residuals(h, phi, SymmetryConvention::Skew);
      rep.check = "centroid_bracket_biderivation";
      out.rows.push_back({"centroid_bracket_biderivation" + deg_el(s, m), std::move(rep)});
    }
  }

  // 3. Identity sweeps over every biderivation basis element.
  std::array<BiderivationSpace, 2> spaces = {
      biderivation_space(h, Parity::Even, conv),
      biderivation_space(h, Parity::Odd, conv)};
  for (const BiderivationSpace& sp : spaces) {
    for (std::size_t m = 0; m < sp.dim(); ++m) {
      const GradedBilinearMap& phi = sp.basis[m];
      out.rows.push_back({"bracket_closure" + deg_el(sp.degree, m),
                          check_closure_identity(h, phi, conv, false)});
      out.rows.push_back({"kernel_pair_centralizer" + deg_el(sp.degree, m),
                          check_kernel_pairs(h, phi, conv, false)});
      out.rows.push_back({"adjoint_defect" + deg_el(sp.degree, m),
                          check_adjoint_defect(h, phi, conv, false)});
    }
  }

  // 4. Centroid decomposition on perfect, centerless algebras.
  bool perfect = is_perfect(h);
  bool centerless = is_centerless(h);
  if (perfect && centerless) {
    for (const BiderivationSpace& sp : spaces) {
      for (std::size_t m = 0; m < sp.dim(); ++m) {
        CheckReport rep;
        rep.check = "centroid_decomposition";
        try {
          centroid_decomposition(h, sp.basis[m]);
          rep.note = "reconstructed a centroid element with exact pullback";
        } catch (const PreconditionError& e) {
          rep.status = CheckStatus::Skipped;
          rep.note = e.what();
        } catch (const TheoremViolation& e) {
          rep.status = CheckStatus::Failed;
          rep.note = e.what();
        }
        out.rows.push_back({"centroid_decomposition" + deg_el(sp.degree, m),
                            std::move(rep)});
      }
    }
  } else {
    CheckReport rep;
    rep.check = "centroid_decomposition";
    rep.status = CheckStatus::Skipped;
    std::string why;
    if (!perfect) why = "algebra is not perfect";
    if (!centerless) {
      if (!why.empty()) why += "; ";
      why += "algebra has a nonzero center";
    }
    rep.note = "hypotheses not met: " + why;
    out.rows.push_back({"centroid_decomposition", std::move(rep)});
  }

  // 5. Special-biderivation analysis on centerless algebras.
  if (centerless) {
    out.rows.push_back({"special_biderivations", special_extension_check(h, conv)});
  } else {
    CheckReport rep;
    rep.check = "special_biderivations";
    rep.status = CheckStatus::Skipped;
    rep.note = "hypotheses not met: algebra has a nonzero center";
    out.rows.push_back({"special_biderivations", std::move(rep)});
  }

  // 6. Double-bracket identity for each commuting map.
  for (std::size_t m = 0; m < cms.dim(); ++m) {
    out.rows.push_back({"commuting_double_bracket" + el(m),
                        check_commuting_identity(h, cms.basis[m], false)});
  }

  // 7. Commuting maps against the even centroid.
  out.rows.push_back({"commuting_centroid_compatibility", commuting_subset_centroid(h)});

  return out;
}

std::string render_text(const VerifyReport& r) {
  std::ostringstream os;
  os << "verification report: " << r.algebra << " (convention "
     << convention_name(r.convention) << ")\n";
  for (const VerifyRow& row : r.rows) {
    const CheckReport& rep = row.report;
    const char* tag = rep.status == CheckStatus::Passed   ? "PASS"
                      : rep.status == CheckStatus::Failed ? "FAIL"
                                                          : "SKIP";
    os << "  " << tag << "  " << row.name;
    if (rep.status == CheckStatus::Failed && !rep.witnesses.empty()) {
      os << "  (" << rep.witnesses.size() << " witness"
         << (rep.witnesses.size() == 1 ? "" : "es") << ")";
    }
    if (!rep.note.empty()) os << "  -- " << rep.note;
    os << "\n";
  }
  os << "summary: " << r.passed_count() << " passed, " << r.failed_count()
     << " failed, " << r.skipped_count() << " skipped\n";
  return os.str();
}

}  // namespace hls
