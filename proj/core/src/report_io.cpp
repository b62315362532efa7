#include "hls/report_io.hpp"

#include <sstream>

namespace hls {

namespace {

using nlohmann::ordered_json;

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::vector<std::string> vec_strings(const Vec& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const Rational& c : v) out.push_back(c.str());
  return out;
}

/// Residuals are usually coordinate vectors; grading issues carry a single
/// offending entry instead.
std::string residual_display(const GradedBasis& basis, const Vec& r) {
  if (r.size() == basis.dim()) return format_vector(basis, r);
  return join(vec_strings(r), ", ");
}

ordered_json issue_json(const GradedBasis& basis, const ValidationIssue& issue) {
  ordered_json j;
  j["indices"] = issue.indices;
  std::vector<std::string> labels;
  for (std::size_t i : issue.indices) {
    labels.push_back(i < basis.dim() ? basis.label(i) : std::to_string(i));
  }
  j["labels"] = labels;
  j["residual"] = vec_strings(issue.residual);
  return j;
}

ordered_json issues_json(const GradedBasis& basis,
                         const std::vector<ValidationIssue>& issues) {
  ordered_json arr = ordered_json::array();
  for (const ValidationIssue& i : issues) arr.push_back(issue_json(basis, i));
  return arr;
}

void issues_text(std::ostringstream& os, const GradedBasis& basis,
                 const std::vector<ValidationIssue>& issues) {
  for (const ValidationIssue& issue : issues) {
    std::vector<std::string> labels;
    for (std::size_t i : issue.indices) {
      labels.push_back(i < basis.dim() ? basis.label(i) : std::to_string(i));
    }
    os << "    (" << join(labels, ", ") << "): residual "
       << residual_display(basis, issue.residual) << "\n";
  }
}

std::string flag(bool ok) { return ok ? "ok" : "FAIL"; }
std::string yesno(bool b) { return b ? "yes" : "no"; }

/// Bilinear map values on basis pairs, nonzero entries only, row-major order.
std::vector<std::string> bilinear_display(const GradedBasis& basis,
                                          const GradedBilinearMap& m) {
  std::vector<std::string> lines;
  for (std::size_t i = 0; i < basis.dim(); ++i) {
    for (std::size_t j = 0; j < basis.dim(); ++j) {
      Vec v = m.eval_basis(i, j);
      if (is_zero_vec(v)) continue;
      lines.push_back("phi(" + basis.label(i) + "," + basis.label(j) +
                      ") = " + format_vector(basis, v));
    }
  }
  if (lines.empty()) lines.push_back("zero map");
  return lines;
}

std::vector<std::string> linear_display(const GradedBasis& basis,
                                        const GradedLinearMap& m,
                                        const std::string& sym) {
  std::vector<std::string> lines;
  for (std::size_t j = 0; j < basis.dim(); ++j) {
    Vec v = m.apply_basis(j);
    if (is_zero_vec(v)) continue;
    lines.push_back(sym + "(" + basis.label(j) + ") = " + format_vector(basis, v));
  }
  if (lines.empty()) lines.push_back("zero map");
  return lines;
}

ordered_json bilinear_json(const GradedBilinearMap& m) {
  const std::size_t n = m.dim();
  ordered_json t = ordered_json::array();
  for (std::size_t i = 0; i < n; ++i) {
    ordered_json ti = ordered_json::array();
    for (std::size_t j = 0; j < n; ++j) {
      ordered_json tij = ordered_json::array();
      for (std::size_t k = 0; k < n; ++k) tij.push_back(m.tensor().at(i, j, k).str());
      ti.push_back(std::move(tij));
    }
    t.push_back(std::move(ti));
  }
  return t;
}

/// Column-major, matching the twist-map grid in algebra files.
ordered_json matrix_json(const Matrix& m) {
  ordered_json cols = ordered_json::array();
  for (std::size_t j = 0; j < m.cols(); ++j) {
    ordered_json col = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) col.push_back(m.at(i, j).str());
    cols.push_back(std::move(col));
  }
  return cols;
}

}  // namespace

std::string format_vector(const GradedBasis& basis, const Vec& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    bool neg = v[i].sign() < 0;
    Rational mag = neg ? -v[i] : v[i];
    std::string term = mag.is_one() ? basis.label(i) : mag.str() + "*" + basis.label(i);
    if (out.empty()) {
      out = neg ? "-" + term : term;
    } else {
      out += (neg ? " - " : " + ") + term;
    }
  }
  return out.empty() ? "0" : out;
}

AnalyzeReport analyze(const HomLieSuperalgebra& h) {
  AnalyzeReport a;
  a.name = h.name();
  a.even_dim = h.basis().even_count();
  a.odd_dim = h.basis().odd_count();
  a.derived = derived_subalgebra(h);
  a.center_space = center(h);
  a.derived_centralizer = centralizer(h, a.derived);
  a.perfect = a.derived.dim() == h.dim();
  a.centerless = a.center_space.is_zero();
  a.multiplicative = validate(h).multiplicative;
  a.alpha_invertible = h.alpha_inverse().has_value();
  return a;
}

ordered_json subspace_json(const GradedBasis& basis, const Subspace& s) {
  ordered_json j;
  j["dim"] = s.dim();
  ordered_json vectors = ordered_json::array();
  ordered_json display = ordered_json::array();
  for (const Vec& v : s.basis()) {
    vectors.push_back(vec_strings(v));
    display.push_back(format_vector(basis, v));
  }
  j["basis"] = std::move(vectors);
  j["display"] = std::move(display);
  return j;
}

ordered_json validation_json(const HomLieSuperalgebra& h, const ValidationReport& r) {
  ordered_json j;
  j["name"] = h.name();
  j["even"] = h.basis().even_count();
  j["odd"] = h.basis().odd_count();
  j["grading_ok"] = r.grading_ok;
  j["skew_ok"] = r.skew_ok;
  j["jacobi_ok"] = r.jacobi_ok;
  j["multiplicative"] = r.multiplicative;
  j["alpha_invertible"] = r.alpha_invertible;
  j["valid"] = r.axioms_ok();
  ordered_json w;
  w["grading"] = issues_json(h.basis(), r.grading_witnesses);
  w["skew"] = issues_json(h.basis(), r.skew_witnesses);
  w["jacobi"] = issues_json(h.basis(), r.jacobi_witnesses);
  w["multiplicativity"] = issues_json(h.basis(), r.multiplicativity_witnesses);
  j["witnesses"] = std::move(w);
  return j;
}

std::string validation_text(const HomLieSuperalgebra& h, const ValidationReport& r) {
  std::ostringstream os;
  os << "validation report: " << h.name() << " (dim " << h.basis().even_count() << "|"
     << h.basis().odd_count() << ")\n";
  os << "  grading             " << flag(r.grading_ok) << "\n";
  issues_text(os, h.basis(), r.grading_witnesses);
  os << "  skew-supersymmetry  " << flag(r.skew_ok) << "\n";
  issues_text(os, h.basis(), r.skew_witnesses);
  os << "  twisted-jacobi      " << flag(r.jacobi_ok) << "\n";
  issues_text(os, h.basis(), r.jacobi_witnesses);
  os << "  multiplicativity    " << flag(r.multiplicative) << "\n";
  issues_text(os, h.basis(), r.multiplicativity_witnesses);
  os << "  alpha-invertible    " << yesno(r.alpha_invertible) << "\n";
  os << "result: " << (r.axioms_ok() ? "VALID" : "INVALID") << "\n";
  return os.str();
}

ordered_json analyze_json(const HomLieSuperalgebra& h, const AnalyzeReport& a) {
  ordered_json j;
  j["name"] = a.name;
  j["even"] = h.basis().even_labels();
  j["odd"] = h.basis().odd_labels();
  j["derived_subalgebra"] = subspace_json(h.basis(), a.derived);
  j["center"] = subspace_json(h.basis(), a.center_space);
  j["derived_centralizer"] = subspace_json(h.basis(), a.derived_centralizer);
  j["perfect"] = a.perfect;
  j["centerless"] = a.centerless;
  j["multiplicative"] = a.multiplicative;
  j["alpha_invertible"] = a.alpha_invertible;
  return j;
}

std::string analyze_text(const HomLieSuperalgebra& h, const AnalyzeReport& a) {
  std::ostringstream os;
  os << "algebra: " << a.name << "\n";
  os << "  dimension: " << a.even_dim << "|" << a.odd_dim << " (even: "
     << (a.even_dim ? join(h.basis().even_labels(), ", ") : "none") << "; odd: "
     << (a.odd_dim ? join(h.basis().odd_labels(), ", ") : "none") << ")\n";
  auto show = [&](const char* title, const Subspace& s) {
    os << "  " << title << ": dim " << s.dim();
    if (s.dim() > 0) {
      std::vector<std::string> parts;
      for (const Vec& v : s.basis()) parts.push_back(format_vector(h.basis(), v));
      os << ", basis: " << join(parts, "; ");
    }
    os << "\n";
  };
  show("derived subalgebra", a.derived);
  show("center", a.center_space);
  show("centralizer of derived subalgebra", a.derived_centralizer);
  os << "  perfect: " << yesno(a.perfect) << ", centerless: " << yesno(a.centerless)
     << "\n";
  os << "  alpha multiplicative: " << yesno(a.multiplicative)
     << ", alpha invertible: " << yesno(a.alpha_invertible) << "\n";
  return os.str();
}

ordered_json spaces_json(const HomLieSuperalgebra& h, DegreeFilter f,
                         SymmetryConvention conv) {
  ordered_json j;
  j["algebra"] = h.name();
  j["convention"] = convention_name(conv);

  std::vector<Parity> degrees;
  if (f != DegreeFilter::Odd) degrees.push_back(Parity::Even);
  if (f != DegreeFilter::Even) degrees.push_back(Parity::Odd);

  ordered_json biders = ordered_json::array();
  ordered_json centroids = ordered_json::array();
  for (Parity s : degrees) {
    BiderivationSpace bs = biderivation_space(h, s, conv);
    ordered_json b;
    b["degree"] = parity_int(s);
    b["unknowns"] = bs.unknowns;
    b["constraint_rank"] = bs.constraint_rank;
    b["dim"] = bs.dim();
    ordered_json basis = ordered_json::array();
    ordered_json display = ordered_json::array();
    for (const GradedBilinearMap& m : bs.basis) {
      basis.push_back(bilinear_json(m));
      display.push_back(bilinear_display(h.basis(), m));
    }
    b["basis"] = std::move(basis);
    b["display"] = std::move(display);
    biders.push_back(std::move(b));

    CentroidSpace cs = centroid_space(h, s);
    ordered_json c;
    c["degree"] = parity_int(s);
    c["unknowns"] = cs.unknowns;
    c["constraint_rank"] = cs.constraint_rank;
    c["dim"] = cs.dim();
    ordered_json cb = ordered_json::array();
    ordered_json cd = ordered_json::array();
    for (const GradedLinearMap& m : cs.basis) {
      cb.push_back(matrix_json(m.matrix()));
      cd.push_back(linear_display(h.basis(), m, "delta"));
    }
    c["basis"] = std::move(cb);
    c["display"] = std::move(cd);
    centroids.push_back(std::move(c));
  }
  j["biderivations"] = std::move(biders);
  j["centroid"] = std::move(centroids);

  if (f != DegreeFilter::Odd) {
    CommutingMapSpace ms = commuting_map_space(h);
    ordered_json c;
    c["unknowns"] = ms.unknowns;
    c["constraint_rank"] = ms.constraint_rank;
    c["dim"] = ms.dim();
    ordered_json cb = ordered_json::array();
    ordered_json cd = ordered_json::array();
    for (const GradedLinearMap& m : ms.basis) {
      cb.push_back(matrix_json(m.matrix()));
      cd.push_back(linear_display(h.basis(), m, "d"));
    }
    c["basis"] = std::move(cb);
    c["display"] = std::move(cd);
    j["commuting"] = std::move(c);
  }
  return j;
}

std::string spaces_text(const HomLieSuperalgebra& h, DegreeFilter f,
                        SymmetryConvention conv) {
  std::ostringstream os;
  os << "solution spaces: " << h.name() << " (convention " << convention_name(conv)
     << ")\n";

  std::vector<Parity> degrees;
  if (f != DegreeFilter::Odd) degrees.push_back(Parity::Even);
  if (f != DegreeFilter::Even) degrees.push_back(Parity::Odd);

  for (Parity s : degrees) {
    BiderivationSpace bs = biderivation_space(h, s, conv);
    os << "biderivations, degree " << parity_int(s) << ": dim " << bs.dim() << " ("
       << bs.unknowns << " unknowns, rank " << bs.constraint_rank << ")\n";
    for (std::size_t m = 0; m < bs.dim(); ++m) {
      os << "  [" << m << "] " << join(bilinear_display(h.basis(), bs.basis[m]), ", ")
         << "\n";
    }
  }
  for (Parity s : degrees) {
    CentroidSpace cs = centroid_space(h, s);
    os << "centroid, degree " << parity_int(s) << ": dim " << cs.dim() << " ("
       << cs.unknowns << " unknowns, rank " << cs.constraint_rank << ")\n";
    for (std::size_t m = 0; m < cs.dim(); ++m) {
      os << "  [" << m << "] " << join(linear_display(h.basis(), cs.basis[m], "delta"), ", ")
         << "\n";
    }
  }
  if (f != DegreeFilter::Odd) {
    CommutingMapSpace ms = commuting_map_space(h);
    os << "commuting maps: dim " << ms.dim() << " (" << ms.unknowns
       << " unknowns, rank " << ms.constraint_rank << ")\n";
    for (std::size_t m = 0; m < ms.dim(); ++m) {
      os << "  [" << m << "] " << join(linear_display(h.basis(), ms.basis[m], "d"), ", ")
         << "\n";
    }
  }
  return os.str();
}

ordered_json check_report_json(const CheckReport& r) {
  ordered_json j;
  j["check"] = r.check;
  j["status"] = r.status == CheckStatus::Passed   ? "passed"
                : r.status == CheckStatus::Failed ? "failed"
                                                  : "skipped";
  if (!r.note.empty()) j["note"] = r.note;
  ordered_json ws = ordered_json::array();
  for (const Witness& w : r.witnesses) {
    ordered_json wj;
    wj["indices"] = w.indices;
    wj["residual"] = vec_strings(w.residual);
    ws.push_back(std::move(wj));
  }
  j["witnesses"] = std::move(ws);
  return j;
}

ordered_json verify_json(const VerifyReport& r) {
  ordered_json j;
  j["algebra"] = r.algebra;
  j["convention"] = convention_name(r.convention);
  ordered_json rows = ordered_json::array();
  for (const VerifyRow& row : r.rows) {
    ordered_json rj;
    rj["name"] = row.name;
    ordered_json body = check_report_json(row.report);
    for (auto& [k, v] : body.items()) rj[k] = v;
    rows.push_back(std::move(rj));
  }
  j["rows"] = std::move(rows);
  ordered_json summary;
  summary["passed"] = r.passed_count();
  summary["failed"] = r.failed_count();
  summary["skipped"] = r.skipped_count();
  j["summary"] = std::move(summary);
  return j;
}

}  // namespace hls
