#include "probe.hpp"

#include <stdexcept>

namespace hlstest {

namespace {

using hls::GradedBasis;
using hls::HomLieSuperalgebra;
using hls::Matrix;
using hls::Parity;
using hls::Rational;
using hls::SymmetryConvention;
using hls::Vec;

/// phi with a single tensor entry (a,b,c) = 1: phi(x,y) = x_a y_b e_c.
struct UnitBilinear {
  std::size_t a, b, c;
  Vec eval(const Vec& x, const Vec& y, std::size_t n) const {
    Vec v(n);
    v[c] = x[a] * y[b];
    return v;
  }
};

/// d with a single matrix entry (k,j) = 1: d(x) = x_j e_k.
struct UnitLinear {
  std::size_t k, j;
  Vec eval(const Vec& x, std::size_t n) const {
    Vec v(n);
    v[k] = x[j];
    return v;
  }
};

Rational pm(int exponent) { return exponent % 2 != 0 ? Rational(-1) : Rational(1); }

}  // namespace

hls::Matrix probe_biderivation_rows(const HomLieSuperalgebra& h, Parity s,
                                    SymmetryConvention conv) {
  const std::size_t n = h.dim();
  const GradedBasis& basis = h.basis();
  auto entries = hls::admissible_bilinear_entries(basis, s);
  const std::size_t unknowns = entries.size();
  if (unknowns == 0) return Matrix(0, 0);

  std::vector<UnitBilinear> probes;
  probes.reserve(unknowns);
  for (const auto& e : entries) probes.push_back({e[0], e[1], e[2]});

  // sigma = -1: residual phi(x,y) + (-1)^(|x||y|) phi(y,x)   (skew)
  // sigma = +1: residual phi(x,y) - (-1)^(|x||y|) phi(y,x)   (printed)
  Rational sigma = conv == SymmetryConvention::Skew ? Rational(1) : Rational(-1);

  std::vector<Vec> rows;
  auto emit = [&](const std::vector<Vec>& residual_per_probe) {
    for (std::size_t k = 0; k < n; ++k) {
      Vec row(unknowns);
      for (std::size_t u = 0; u < unknowns; ++u) row[u] = residual_per_probe[u][k];
      rows.push_back(std::move(row));
    }
  };

  std::vector<Vec> per_probe(unknowns);

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Rational sw = sigma * pm(hls::parity_int(basis.parity(i)) *
                               hls::parity_int(basis.parity(j)));
      for (std::size_t u = 0; u < unknowns; ++u) {
        Vec r = probes[u].eval(hls::unit_vec(n, i), hls::unit_vec(n, j), n);
        hls::vec_axpy(r, sw, probes[u].eval(hls::unit_vec(n, j), hls::unit_vec(n, i), n));
        per_probe[u] = std::move(r);
      }
      emit(per_probe);
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    Vec ai = h.alpha_basis(i);
    for (std::size_t j = 0; j < n; ++j) {
      Vec aj = h.alpha_basis(j);
      for (std::size_t u = 0; u < unknowns; ++u) {
        Vec r = probes[u].eval(ai, aj, n);
        hls::vec_axpy(r, Rational(-1),
                      h.alpha_of(probes[u].eval(hls::unit_vec(n, i),
                                                hls::unit_vec(n, j), n)));
        per_probe[u] = std::move(r);
      }
      emit(per_probe);
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    Vec ai = h.alpha_basis(i);
    Rational si = pm(hls::parity_int(s) * hls::parity_int(basis.parity(i)));
    for (std::size_t j = 0; j < n; ++j) {
      Vec bij = h.bracket_basis(i, j);
      Vec aj = h.alpha_basis(j);
      for (std::size_t w = 0; w < n; ++w) {
        Vec aw = h.alpha_basis(w);
        Rational jw = pm(hls::parity_int(basis.parity(j)) *
                         hls::parity_int(basis.parity(w)));
        for (std::size_t u = 0; u < unknowns; ++u) {
          Vec r = probes[u].eval(bij, aw, n);
          hls::vec_axpy(r, -si,
                        h.bracket_of(ai, probes[u].eval(hls::unit_vec(n, j),
                                                        hls::unit_vec(n, w), n)));
          hls::vec_axpy(r, -jw,
                        h.bracket_of(probes[u].eval(hls::unit_vec(n, i),
                                                    hls::unit_vec(n, w), n),
                                     aj));
          per_probe[u] = std::move(r);
        }
        emit(per_probe);
      }
    }
  }

  return Matrix::from_rows(unknowns, rows);
}

hls::Matrix probe_centroid_rows(const HomLieSuperalgebra& h, Parity s) {
  const std::size_t n = h.dim();
  const GradedBasis& basis = h.basis();
  auto entries = hls::admissible_linear_entries(basis, s);
  const std::size_t unknowns = entries.size();
  if (unknowns == 0) return Matrix(0, 0);

  std::vector<UnitLinear> probes;
  probes.reserve(unknowns);
  for (const auto& e : entries) probes.push_back({e[0], e[1]});

  std::vector<Vec> rows;
  auto emit_residuals = [&](const std::vector<Vec>& per_probe) {
    for (std::size_t k = 0; k < n; ++k) {
      Vec row(unknowns);
      for (std::size_t u = 0; u < unknowns; ++u) row[u] = per_probe[u][k];
      rows.push_back(std::move(row));
    }
  };

  std::vector<Vec> per_probe(unknowns);
  for (std::size_t i = 0; i < n; ++i) {
    Vec ai = h.alpha_basis(i);
    Rational si = pm(hls::parity_int(s) * hls::parity_int(basis.parity(i)));
    for (std::size_t j = 0; j < n; ++j) {
      Vec bij = h.bracket_basis(i, j);
      for (std::size_t u = 0; u < unknowns; ++u) {
        Vec r = probes[u].eval(bij, n);
        hls::vec_axpy(r, -si,
                      h.bracket_of(ai, probes[u].eval(hls::unit_vec(n, j), n)));
        per_probe[u] = std::move(r);
      }
      emit_residuals(per_probe);
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t u = 0; u < unknowns; ++u) {
      Vec r = h.alpha_of(probes[u].eval(hls::unit_vec(n, j), n));
      hls::vec_axpy(r, Rational(-1), probes[u].eval(h.alpha_basis(j), n));
      per_probe[u] = std::move(r);
    }
    emit_residuals(per_probe);
  }

  return Matrix::from_rows(unknowns, rows);
}

hls::Matrix probe_commuting_rows(const HomLieSuperalgebra& h) {
  const std::size_t n = h.dim();
  auto entries = hls::admissible_linear_entries(h.basis(), Parity::Even);
  const std::size_t unknowns = entries.size();
  if (unknowns == 0) return Matrix(0, 0);

  std::vector<UnitLinear> probes;
  probes.reserve(unknowns);
  for (const auto& e : entries) probes.push_back({e[0], e[1]});

  std::vector<Vec> rows;
  auto emit_residuals = [&](const std::vector<Vec>& per_probe) {
    for (std::size_t k = 0; k < n; ++k) {
      Vec row(unknowns);
      for (std::size_t u = 0; u < unknowns; ++u) row[u] = per_probe[u][k];
      rows.push_back(std::move(row));
    }
  };

  std::vector<Vec> per_probe(unknowns);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t u = 0; u < unknowns; ++u) {
        Vec r = h.bracket_of(probes[u].eval(hls::unit_vec(n, i), n),
                             hls::unit_vec(n, j));
        hls::vec_axpy(r, Rational(-1),
                      h.bracket_of(hls::unit_vec(n, i),
                                   probes[u].eval(hls::unit_vec(n, j), n)));
        per_probe[u] = std::move(r);
      }
      emit_residuals(per_probe);
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t u = 0; u < unknowns; ++u) {
      Vec r = h.alpha_of(probes[u].eval(hls::unit_vec(n, j), n));
      hls::vec_axpy(r, Rational(-1), probes[u].eval(h.alpha_basis(j), n));
      per_probe[u] = std::move(r);
    }
    emit_residuals(per_probe);
  }

  return Matrix::from_rows(unknowns, rows);
}

hls::Vec flatten_bilinear(const HomLieSuperalgebra& h, Parity s,
                          const hls::GradedBilinearMap& m) {
  auto entries = hls::admissible_bilinear_entries(h.basis(), s);
  const std::size_t n = h.dim();
  Vec out(entries.size());
  for (std::size_t u = 0; u < entries.size(); ++u) {
    out[u] = m.tensor().at(entries[u][0], entries[u][1], entries[u][2]);
  }
  // Everything outside the admissible layout must be zero.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (!m.tensor().at(i, j, k).is_zero() &&
            h.basis().parity(k) != h.basis().parity(i) + h.basis().parity(j) + s) {
          throw std::logic_error("flatten_bilinear: non-admissible entry is nonzero");
        }
      }
    }
  }
  return out;
}

hls::Vec flatten_linear(const HomLieSuperalgebra& h, Parity s,
                        const hls::GradedLinearMap& m) {
  auto entries = hls::admissible_linear_entries(h.basis(), s);
  const std::size_t n = h.dim();
  Vec out(entries.size());
  for (std::size_t u = 0; u < entries.size(); ++u) {
    out[u] = m.matrix().at(entries[u][0], entries[u][1]);
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!m.matrix().at(k, j).is_zero() &&
          h.basis().parity(k) != h.basis().parity(j) + s) {
        throw std::logic_error("flatten_linear: non-admissible entry is nonzero");
      }
    }
  }
  return out;
}

}  // namespace hlstest
