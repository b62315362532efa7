#include "hls/algebra.hpp"

#include <sstream>

#include "hls/errors.hpp"

namespace hls {

namespace {

std::string tuple_str(const HomLieSuperalgebra& h, const std::vector<std::size_t>& idx) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) os << ", ";
    os << h.basis().label(idx[i]);
  }
  os << ")";
  return os.str();
}

}  // namespace

HomLieSuperalgebra::HomLieSuperalgebra(std::string name, GradedBasis basis,
                                       GradedBilinearMap bracket, GradedLinearMap alpha)
    : name_(std::move(name)),
      basis_(std::move(basis)),
      bracket_(std::move(bracket)),
      alpha_(std::move(alpha)),
      alpha_inv_(alpha_.matrix().inverse()) {
  if (bracket_.dim() != basis_.dim() || alpha_.dim() != basis_.dim()) {
    throw InputError("bracket/alpha dimension does not match basis");
  }
}

HomLieSuperalgebra HomLieSuperalgebra::unchecked(std::string name, GradedBasis basis,
                                                 GradedBilinearMap bracket,
                                                 GradedLinearMap alpha) {
  return HomLieSuperalgebra(std::move(name), std::move(basis), std::move(bracket),
                            std::move(alpha));
}

HomLieSuperalgebra HomLieSuperalgebra::create(std::string name, GradedBasis basis,
                                              GradedBilinearMap bracket,
                                              GradedLinearMap alpha) {
  HomLieSuperalgebra h = unchecked(std::move(name), std::move(basis), std::move(bracket),
                                   std::move(alpha));
  ValidationReport rep = validate(h);
  if (!rep.grading_ok) {
    throw GradingError("algebra '" + h.name() + "': graded entry " +
                       tuple_str(h, rep.grading_witnesses.front().indices) +
                       " violates homogeneity");
  }
  if (!rep.skew_ok) {
    throw ValidationError("algebra '" + h.name() + "': skew-supersymmetry fails on pair " +
                          tuple_str(h, rep.skew_witnesses.front().indices));
  }
  if (!rep.jacobi_ok) {
    throw ValidationError("algebra '" + h.name() + "': twisted Jacobi identity fails on triple " +
                          tuple_str(h, rep.jacobi_witnesses.front().indices));
  }
  return h;
}

HomLieSuperalgebra HomLieSuperalgebra::with_name(std::string name) const {
  HomLieSuperalgebra copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

ValidationReport validate(const HomLieSuperalgebra& h) {
  ValidationReport rep;
  const std::size_t n = h.dim();
  const GradedBasis& basis = h.basis();
  const Tensor3& t = h.bracket().tensor();
  const Matrix& a = h.alpha().matrix();

  // Grading of the bracket tensor and of alpha (both declared even).
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Parity target = basis.parity(i) + basis.parity(j) + h.bracket().degree();
      for (std::size_t k = 0; k < n; ++k) {
        if (!t.at(i, j, k).is_zero() && basis.parity(k) != target) {
          rep.grading_ok = false;
          rep.grading_witnesses.push_back({{i, j, k}, {t.at(i, j, k)}});
        }
      }
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!a.at(k, j).is_zero() && basis.parity(k) != basis.parity(j) + h.alpha().degree()) {
        rep.grading_ok = false;
        rep.grading_witnesses.push_back({{k, j}, {a.at(k, j)}});
      }
    }
  }

  // [e_i, e_j] + (-1)^(|i||j|) [e_j, e_i] = 0.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Vec r = h.bracket_basis(i, j);
      vec_axpy(r, parity_sign(basis.parity(i), basis.parity(j)), h.bracket_basis(j, i));
      if (!is_zero_vec(r)) {
        rep.skew_ok = false;
        rep.skew_witnesses.push_back({{i, j}, std::move(r)});
      }
    }
  }

  // Twisted Jacobi on all basis triples, graded-cyclic form.
  for (std::size_t i = 0; i < n; ++i) {
    Vec ai = h.alpha_basis(i);
    for (std::size_t j = 0; j < n; ++j) {
      Vec aj = h.alpha_basis(j);
      for (std::size_t k = 0; k < n; ++k) {
        Vec ak = h.alpha_basis(k);
        Vec r = vec_scale(parity_sign(basis.parity(i), basis.parity(k)),
                          h.bracket_of(ai, h.bracket_basis(j, k)));
        vec_axpy(r, parity_sign(basis.parity(j), basis.parity(i)),
                 h.bracket_of(aj, h.bracket_basis(k, i)));
        vec_axpy(r, parity_sign(basis.parity(k), basis.parity(j)),
                 h.bracket_of(ak, h.bracket_basis(i, j)));
        if (!is_zero_vec(r)) {
          rep.jacobi_ok = false;
          rep.jacobi_witnesses.push_back({{i, j, k}, std::move(r)});
        }
      }
    }
  }

  // alpha([x,y]) = [alpha x, alpha y] on all pairs.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vec r = h.alpha_of(h.bracket_basis(i, j));
      Vec rhs = h.bracket_of(h.alpha_basis(i), h.alpha_basis(j));
      Vec diff = vec_sub(r, rhs);
      if (!is_zero_vec(diff)) {
        rep.multiplicative = false;
        rep.multiplicativity_witnesses.push_back({{i, j}, std::move(diff)});
      }
    }
  }

  rep.alpha_invertible = h.alpha_inverse().has_value();
  return rep;
}

Subspace derived_subalgebra(const HomLieSuperalgebra& h) {
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < h.dim(); ++i) {
    for (std::size_t j = 0; j < h.dim(); ++j) gens.push_back(h.bracket_basis(i, j));
  }
  return Subspace::span(h.dim(), gens);
}

Subspace centralizer(const HomLieSuperalgebra& h, const Subspace& x) {
  if (x.ambient_dim() != h.dim()) throw InputError("centralizer: ambient mismatch");
  std::size_t n = h.dim();
  // Stack, for each generator b of X, the map v -> [b, v].
  std::vector<Vec> rows;
  for (const Vec& b : x.basis()) {
    std::vector<Vec> cols;
    cols.reserve(n);
    for (std::size_t j = 0; j < n; ++j) cols.push_back(h.bracket_of(b, unit_vec(n, j)));
    for (std::size_t k = 0; k < n; ++k) {
      Vec row(n);
      for (std::size_t j = 0; j < n; ++j) row[j] = cols[j][k];
      rows.push_back(std::move(row));
    }
  }
  if (rows.empty()) return Subspace::full(n);
  return nullspace_basis(Matrix::from_rows(n, rows));
}

Subspace center(const HomLieSuperalgebra& h) {
  return centralizer(h, Subspace::full(h.dim()));
}

bool is_perfect(const HomLieSuperalgebra& h) {
  return derived_subalgebra(h).dim() == h.dim();
}

bool is_centerless(const HomLieSuperalgebra& h) { return center(h).is_zero(); }

CenterQuotient quotient_by_center(const HomLieSuperalgebra& h) {
  const std::size_t n = h.dim();
  Subspace z = center(h);
  for (const Vec& v : z.basis()) {
    if (!z.member(h.alpha_of(v))) {
      throw PreconditionError("quotient_by_center: alpha does not preserve the center");
    }
  }
  if (z.dim() == n) {
    throw PreconditionError(
        "quotient_by_center: the center is the whole algebra, quotient would be "
        "zero-dimensional");
  }

  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : z.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> complement;
  for (std::size_t j = 0; j < n; ++j) {
    if (!is_pivot[j]) complement.push_back(j);
  }
  const std::size_t m = complement.size();

  // p(v): eliminate the center components, read off the complement entries.
  // Ascending complement indices keep the even-before-odd normalization.
  Matrix proj(m, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vec r = z.reduce(unit_vec(n, j));
    for (std::size_t a = 0; a < m; ++a) proj.at(a, j) = r[complement[a]];
  }

  std::vector<std::string> even_labels, odd_labels;
  for (std::size_t a : complement) {
    if (h.parity(a) == Parity::Even) {
      even_labels.push_back(h.basis().label(a));
    } else {
      odd_labels.push_back(h.basis().label(a));
    }
  }
  GradedBasis qbasis(even_labels, odd_labels);

  Tensor3 qt(m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      Vec img = proj.apply(h.bracket_basis(complement[a], complement[b]));
      for (std::size_t c = 0; c < m; ++c) qt.at(a, b, c) = img[c];
    }
  }
  Matrix qa(m, m);
  for (std::size_t a = 0; a < m; ++a) {
    qa.set_col(a, proj.apply(h.alpha_basis(complement[a])));
  }

  GradedBilinearMap qbracket = GradedBilinearMap::checked(qbasis, Parity::Even, std::move(qt));
  GradedLinearMap qalpha = GradedLinearMap::checked(qbasis, Parity::Even, std::move(qa));
  HomLieSuperalgebra q =
      HomLieSuperalgebra::create(h.name() + "/center", std::move(qbasis),
                                 std::move(qbracket), std::move(qalpha));
  return CenterQuotient{std::move(q), std::move(proj), std::move(complement), std::move(z)};
}

HomLieSuperalgebra yau_twist(const HomLieSuperalgebra& l, const GradedLinearMap& a,
                             const std::string& name) {
  if (!l.alpha().matrix().is_identity()) {
    throw PreconditionError("yau_twist: base algebra must be untwisted (alpha = id)");
  }
  if (a.degree() != Parity::Even) {
    throw PreconditionError("yau_twist: twisting map must be even");
  }
  if (!a.matrix().inverse().has_value()) {
    throw PreconditionError("yau_twist: twisting map must be invertible");
  }
  const std::size_t n = l.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vec lhs = l.bracket_of(a.apply_basis(i), a.apply_basis(j));
      Vec rhs = a.apply(l.bracket_basis(i, j));
      if (lhs != rhs) {
        throw PreconditionError("yau_twist: map is not an automorphism, fails on pair (" +
                                l.basis().label(i) + ", " + l.basis().label(j) + ")");
      }
    }
  }
  Tensor3 t(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vec img = a.apply(l.bracket_basis(i, j));
      for (std::size_t k = 0; k < n; ++k) t.at(i, j, k) = img[k];
    }
  }
  std::string result_name = name.empty() ? l.name() + "_twisted" : name;
  return HomLieSuperalgebra::create(result_name, l.basis(),
                                    GradedBilinearMap::checked(l.basis(), Parity::Even, t),
                                    GradedLinearMap::checked(l.basis(), Parity::Even, a.matrix()));
}

}  // namespace hls
