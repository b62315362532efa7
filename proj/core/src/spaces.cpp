#include "hls/spaces.hpp"

#include "hls/errors.hpp"
#include "hls/linalg.hpp"

namespace hls {

std::string convention_name(SymmetryConvention c) {
  return c == SymmetryConvention::Skew ? "skew" : "printed";
}

std::vector<std::array<std::size_t, 3>> admissible_bilinear_entries(
    const GradedBasis& basis, Parity s) {
  std::vector<std::array<std::size_t, 3>> entries;
  const std::size_t n = basis.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Parity target = basis.parity(i) + basis.parity(j) + s;
      for (std::size_t k = 0; k < n; ++k) {
        if (basis.parity(k) == target) entries.push_back({i, j, k});
      }
    }
  }
  return entries;
}

std::vector<std::array<std::size_t, 2>> admissible_linear_entries(
    const GradedBasis& basis, Parity s) {
  std::vector<std::array<std::size_t, 2>> entries;
  const std::size_t n = basis.dim();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      if (basis.parity(k) == basis.parity(j) + s) entries.push_back({k, j});
    }
  }
  return entries;
}

namespace {

/// Dense index of each admissible (i,j,k), or npos when structurally zero.
struct BilinearLayout {
  explicit BilinearLayout(const GradedBasis& basis, Parity s)
      : n(basis.dim()), index(n * n * n, npos) {
    entries = admissible_bilinear_entries(basis, s);
    for (std::size_t u = 0; u < entries.size(); ++u) {
      const auto& [i, j, k] = entries[u];
      index[(i * n + j) * n + k] = u;
    }
  }
  std::size_t at(std::size_t i, std::size_t j, std::size_t k) const {
    return index[(i * n + j) * n + k];
  }
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t n;
  std::vector<std::array<std::size_t, 3>> entries;
  std::vector<std::size_t> index;
};

struct LinearLayout {
  explicit LinearLayout(const GradedBasis& basis, Parity s)
      : n(basis.dim()), index(n * n, npos) {
    entries = admissible_linear_entries(basis, s);
    for (std::size_t u = 0; u < entries.size(); ++u) {
      index[entries[u][0] * n + entries[u][1]] = u;
    }
  }
  std::size_t at(std::size_t k, std::size_t j) const { return index[k * n + j]; }
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t n;
  std::vector<std::array<std::size_t, 2>> entries;
  std::vector<std::size_t> index;
};

void add_coeff(Vec& row, std::size_t u, const Rational& c) {
  if (u != BilinearLayout::npos && !c.is_zero()) row[u] += c;
}

void push_nonzero(std::vector<Vec>& rows, Vec row) {
  if (!is_zero_vec(row)) rows.push_back(std::move(row));
}

Rational deg_sign(Parity s, Parity p) { return parity_sign(s, p); }

}  // namespace

BiderivationSpace biderivation_space(const HomLieSuperalgebra& h, Parity s,
                                     SymmetryConvention conv) {
  if (!h.alpha_inverse()) {
    throw PreconditionError("biderivation_space: alpha must be invertible");
  }
  const std::size_t n = h.dim();
  const GradedBasis& basis = h.basis();
  const Matrix& a = h.alpha().matrix();
  BilinearLayout layout(basis, s);
  const std::size_t unknowns = layout.entries.size();
  Rational sigma = conv == SymmetryConvention::Skew ? Rational(-1) : Rational(1);

  std::vector<Vec> rows;

  // Family 1, symmetry: phi(e_i,e_j) - sigma (-1)^(|i||j|) phi(e_j,e_i) = 0.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Rational swap_sign = sigma * parity_sign(basis.parity(i), basis.parity(j));
      for (std::size_t k = 0; k < n; ++k) {
        if (layout.at(i, j, k) == BilinearLayout::npos) continue;
        Vec row(unknowns);
        add_coeff(row, layout.at(i, j, k), Rational(1));
        add_coeff(row, layout.at(j, i, k), -swap_sign);
        push_nonzero(rows, std::move(row));
      }
    }
  }

  // Family 2, equivariance: phi(alpha e_i, alpha e_j) - alpha(phi(e_i,e_j)) = 0.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        Vec row(unknowns);
        for (std::size_t p = 0; p < n; ++p) {
          if (a.at(p, i).is_zero()) continue;
          for (std::size_t q = 0; q < n; ++q) {
            add_coeff(row, layout.at(p, q, k), a.at(p, i) * a.at(q, j));
          }
        }
        for (std::size_t c = 0; c < n; ++c) {
          add_coeff(row, layout.at(i, j, c), -a.at(k, c));
        }
        push_nonzero(rows, std::move(row));
      }
    }
  }

  // Family 3, the defining identity on basis triples:
  //   phi([e_i,e_j], alpha e_w) = (-1)^(s|i|) [alpha e_i, phi(e_j,e_w)]
  //                             + (-1)^(|j||w|) [phi(e_i,e_w), alpha e_j].
  for (std::size_t i = 0; i < n; ++i) {
    Vec ai = h.alpha_basis(i);
    Rational si = deg_sign(s, basis.parity(i));
    for (std::size_t j = 0; j < n; ++j) {
      Vec aj = h.alpha_basis(j);
      Vec bij = h.bracket_basis(i, j);
      for (std::size_t w = 0; w < n; ++w) {
        Rational sjw = parity_sign(basis.parity(j), basis.parity(w));
        for (std::size_t k = 0; k < n; ++k) {
          Vec row(unknowns);
          // phi([e_i,e_j], alpha e_w)_k = sum_{p,q} bij_p a_{q,w} t[p][q][k]
          for (std::size_t p = 0; p < n; ++p) {
            if (bij[p].is_zero()) continue;
            for (std::size_t q = 0; q < n; ++q) {
              add_coeff(row, layout.at(p, q, k), bij[p] * a.at(q, w));
            }
          }
          // [alpha e_i, phi(e_j,e_w)]_k = sum_c t[j][w][c] [alpha e_i, e_c]_k
          for (std::size_t c = 0; c < n; ++c) {
            Vec br = h.bracket_of(ai, unit_vec(n, c));
            add_coeff(row, layout.at(j, w, c), -si * br[k]);
          }
          // [phi(e_i,e_w), alpha e_j]_k = sum_c t[i][w][c] [e_c, alpha e_j]_k
          for (std::size_t c = 0; c < n; ++c) {
            Vec br = h.bracket_of(unit_vec(n, c), aj);
            add_coeff(row, layout.at(i, w, c), -sjw * br[k]);
          }
          push_nonzero(rows, std::move(row));
        }
      }
    }
  }

  Matrix constraints = Matrix::from_rows(unknowns, rows);
  RrefResult red = rref(constraints);
  Subspace null = nullspace_basis(constraints);

  BiderivationSpace space;
  space.degree = s;
  space.convention = conv;
  space.constraint_rank = red.pivots.size();
  space.unknowns = unknowns;
  for (const Vec& v : null.basis()) {
    Tensor3 t(n);
    for (std::size_t u = 0; u < unknowns; ++u) {
      const auto& [i, j, k] = layout.entries[u];
      t.at(i, j, k) = v[u];
    }
    space.basis.push_back(GradedBilinearMap::checked(basis, s, std::move(t)));
  }
  return space;
}

CentroidSpace centroid_space(const HomLieSuperalgebra& h, Parity s) {
  const std::size_t n = h.dim();
  const GradedBasis& basis = h.basis();
  const Matrix& a = h.alpha().matrix();
  LinearLayout layout(basis, s);
  const std::size_t unknowns = layout.entries.size();

  std::vector<Vec> rows;

  // delta([e_i,e_j]) - (-1)^(s|i|) [alpha e_i, delta e_j] = 0.
  for (std::size_t i = 0; i < n; ++i) {
    Vec ai = h.alpha_basis(i);
    Rational si = deg_sign(s, basis.parity(i));
    for (std::size_t j = 0; j < n; ++j) {
      Vec bij = h.bracket_basis(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        Vec row(unknowns);
        for (std::size_t c = 0; c < n; ++c) {
          std::size_t u = layout.at(k, c);
          if (u != LinearLayout::npos && !bij[c].is_zero()) row[u] += bij[c];
        }
        for (std::size_t c = 0; c < n; ++c) {
          std::size_t u = layout.at(c, j);
          if (u == LinearLayout::npos) continue;
          Vec br = h.bracket_of(ai, unit_vec(n, c));
          if (!br[k].is_zero()) row[u] -= si * br[k];
        }
        push_nonzero(rows, std::move(row));
      }
    }
  }

  // alpha delta - delta alpha = 0.
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      Vec row(unknowns);
      for (std::size_t c = 0; c < n; ++c) {
        std::size_t u = layout.at(c, j);
        if (u != LinearLayout::npos && !a.at(k, c).is_zero()) row[u] += a.at(k, c);
      }
      for (std::size_t c = 0; c < n; ++c) {
        std::size_t u = layout.at(k, c);
        if (u != LinearLayout::npos && !a.at(c, j).is_zero()) row[u] -= a.at(c, j);
      }
      push_nonzero(rows, std::move(row));
    }
  }

  Matrix constraints = Matrix::from_rows(unknowns, rows);
  RrefResult red = rref(constraints);
  Subspace null = nullspace_basis(constraints);

  CentroidSpace space;
  space.degree = s;
  space.constraint_rank = red.pivots.size();
  space.unknowns = unknowns;
  for (const Vec& v : null.basis()) {
    Matrix m(n, n);
    for (std::size_t u = 0; u < unknowns; ++u) {
      m.at(layout.entries[u][0], layout.entries[u][1]) = v[u];
    }
    space.basis.push_back(GradedLinearMap::checked(basis, s, std::move(m)));
  }
  return space;
}

CommutingMapSpace commuting_map_space(const HomLieSuperalgebra& h) {
  const std::size_t n = h.dim();
  const GradedBasis& basis = h.basis();
  const Matrix& a = h.alpha().matrix();
  LinearLayout layout(basis, Parity::Even);
  const std::size_t unknowns = layout.entries.size();

  std::vector<Vec> rows;

  // [d e_i, e_j] - [e_i, d e_j] = 0.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        Vec row(unknowns);
        for (std::size_t c = 0; c < n; ++c) {
          std::size_t u = layout.at(c, i);
          if (u != LinearLayout::npos) {
            Vec br = h.bracket_of(unit_vec(n, c), unit_vec(n, j));
            if (!br[k].is_zero()) row[u] += br[k];
          }
          u = layout.at(c, j);
          if (u != LinearLayout::npos) {
            Vec br = h.bracket_of(unit_vec(n, i), unit_vec(n, c));
            if (!br[k].is_zero()) row[u] -= br[k];
          }
        }
        push_nonzero(rows, std::move(row));
      }
    }
  }

  // alpha d - d alpha = 0.
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      Vec row(unknowns);
      for (std::size_t c = 0; c < n; ++c) {
        std::size_t u = layout.at(c, j);
        if (u != LinearLayout::npos && !a.at(k, c).is_zero()) row[u] += a.at(k, c);
        u = layout.at(k, c);
        if (u != LinearLayout::npos && !a.at(c, j).is_zero()) row[u] -= a.at(c, j);
      }
      push_nonzero(rows, std::move(row));
    }
  }

  Matrix constraints = Matrix::from_rows(unknowns, rows);
  RrefResult red = rref(constraints);
  Subspace null = nullspace_basis(constraints);

  CommutingMapSpace space;
  space.constraint_rank = red.pivots.size();
  space.unknowns = unknowns;
  for (const Vec& v : null.basis()) {
    Matrix m(n, n);
    for (std::size_t u = 0; u < unknowns; ++u) {
      m.at(layout.entries[u][0], layout.entries[u][1]) = v[u];
    }
    space.basis.push_back(GradedLinearMap::checked(basis, Parity::Even, std::move(m)));
  }
  return space;
}

namespace {

void add_witness(CheckReport& rep, std::vector<std::size_t> indices, Vec residual) {
  if (is_zero_vec(residual)) return;
  rep.status = CheckStatus::Failed;
  rep.witnesses.push_back({std::move(indices), std::move(residual)});
}

}  // namespace

CheckReport biderivation_residuals(const HomLieSuperalgebra& h,
                                   const GradedBilinearMap& phi,
                                   SymmetryConvention conv) {
  const std::size_t n = h.dim();
  if (phi.dim() != n) throw InputError("biderivation_residuals: dimension mismatch");
  const GradedBasis& basis = h.basis();
  Parity s = phi.degree();
  Rational sigma = conv == SymmetryConvention::Skew ? Rational(-1) : Rational(1);

  CheckReport rep;
  rep.check = "biderivation_membership";
  rep.note = "degree " + std::to_string(parity_int(s)) + ", " + convention_name(conv) +
             " convention";

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Vec r = phi.eval_basis(i, j);
      Rational swap_sign = sigma * parity_sign(basis.parity(i), basis.parity(j));
      vec_axpy(r, -swap_sign, phi.eval_basis(j, i));
      add_witness(rep, {i, j}, std::move(r));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vec r = phi.eval(h.alpha_basis(i), h.alpha_basis(j));
      vec_axpy(r, Rational(-1), h.alpha_of(phi.eval_basis(i, j)));
      add_witness(rep, {i, j}, std::move(r));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    Rational si = parity_sign(s, basis.parity(i));
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t w = 0; w < n; ++w) {
        Vec r = phi.eval(h.bracket_basis(i, j), h.alpha_basis(w));
        vec_axpy(r, -si, h.bracket_of(h.alpha_basis(i), phi.eval_basis(j, w)));
        vec_axpy(r, -parity_sign(basis.parity(j), basis.parity(w)),
                 h.bracket_of(phi.eval_basis(i, w), h.alpha_basis(j)));
        add_witness(rep, {i, j, w}, std::move(r));
      }
    }
  }
  return rep;
}

CheckReport centroid_residuals(const HomLieSuperalgebra& h, const GradedLinearMap& delta) {
  const std::size_t n = h.dim();
  if (delta.dim() != n) throw InputError("centroid_residuals: dimension mismatch");
  Parity s = delta.degree();

  CheckReport rep;
  rep.check = "centroid_membership";
  rep.note = "degree " + std::to_string(parity_int(s));

  for (std::size_t i = 0; i < n; ++i) {
    Rational si = parity_sign(s, h.parity(i));
    for (std::size_t j = 0; j < n; ++j) {
      Vec r = delta.apply(h.bracket_basis(i, j));
      vec_axpy(r, -si, h.bracket_of(h.alpha_basis(i), delta.apply_basis(j)));
      add_witness(rep, {i, j}, std::move(r));
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    Vec r = h.alpha_of(delta.apply_basis(j));
    vec_axpy(r, Rational(-1), delta.apply(h.alpha_basis(j)));
    add_witness(rep, {j}, std::move(r));
  }
  return rep;
}

CheckReport commuting_residuals(const HomLieSuperalgebra& h, const GradedLinearMap& d) {
  const std::size_t n = h.dim();
  if (d.dim() != n) throw InputError("commuting_residuals: dimension mismatch");
  if (d.degree() != Parity::Even) {
    throw InputError("commuting_residuals: map must be even");
  }

  CheckReport rep;
  rep.check = "commuting_membership";

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vec r = h.bracket_of(d.apply_basis(i), unit_vec(n, j));
      vec_axpy(r, Rational(-1), h.bracket_of(unit_vec(n, i), d.apply_basis(j)));
      add_witness(rep, {i, j}, std::move(r));
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    Vec r = h.alpha_of(d.apply_basis(j));
    vec_axpy(r, Rational(-1), d.apply(h.alpha_basis(j)));
    add_witness(rep, {j}, std::move(r));
  }
  return rep;
}

}  // namespace hls
