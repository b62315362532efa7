#include "hls/linalg.hpp"

#include <utility>

#include "hls/errors.hpp"

namespace hls {

RrefResult rref(Matrix m) {
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
    std::size_t sel = lead;
    while (sel < m.rows() && m.at(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != lead) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(lead, j));
    }
    Rational inv_pivot = Rational(1) / m.at(lead, col);
    for (std::size_t j = col; j < m.cols(); ++j) m.at(lead, j) *= inv_pivot;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == lead || m.at(i, col).is_zero()) continue;
      Rational f = m.at(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(lead, j);
    }
    pivots.push_back(col);
    ++lead;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Subspace nullspace_basis(const Matrix& m) {
  RrefResult red = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : red.pivots) is_pivot[p] = true;

  // One generator per free column: 1 there, the negated reduced column at the
  // pivot positions. Canonicalized through span() like every other subspace.
  std::vector<Vec> gens;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols());
    v[f] = Rational(1);
    for (std::size_t r = 0; r < red.pivots.size(); ++r) {
      v[red.pivots[r]] = -red.r.at(r, f);
    }
    gens.push_back(std::move(v));
  }
  return Subspace::span(m.cols(), gens);
}

std::optional<Vec> solve_linear(const Matrix& a, const Vec& b) {
  if (b.size() != a.rows()) throw InputError("solve_linear: rhs size mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  RrefResult red = rref(aug);
  for (std::size_t r = 0; r < red.pivots.size(); ++r) {
    if (red.pivots[r] == a.cols()) return std::nullopt;  // row (0 ... 0 | 1)
  }
  Vec x(a.cols());
  for (std::size_t r = 0; r < red.pivots.size(); ++r) {
    x[red.pivots[r]] = red.r.at(r, a.cols());
  }
  return x;
}

Subspace Subspace::zero(std::size_t ambient) { return Subspace(ambient, {}, {}); }

Subspace Subspace::full(std::size_t ambient) {
  std::vector<Vec> rows;
  rows.reserve(ambient);
  for (std::size_t i = 0; i < ambient; ++i) rows.push_back(unit_vec(ambient, i));
  std::vector<std::size_t> pivots(ambient);
  for (std::size_t i = 0; i < ambient; ++i) pivots[i] = i;
  return Subspace(ambient, std::move(rows), std::move(pivots));
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec>& vectors) {
  for (const Vec& v : vectors) {
    if (v.size() != ambient) throw InputError("span: vector dimension mismatch");
  }
  RrefResult red = rref(Matrix::from_rows(ambient, vectors));
  std::vector<Vec> basis;
  basis.reserve(red.pivots.size());
  for (std::size_t r = 0; r < red.pivots.size(); ++r) basis.push_back(red.r.row(r));
  return Subspace(ambient, std::move(basis), std::move(red.pivots));
}

Vec Subspace::reduce(const Vec& v) const {
  if (v.size() != ambient_) throw InputError("reduce: vector dimension mismatch");
  Vec r = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Rational& c = r[pivots_[i]];
    if (!c.is_zero()) {
      Rational f = c;  // basis rows have 1 at their pivot
      vec_axpy(r, -f, basis_[i]);
    }
  }
  return r;
}

bool Subspace::member(const Vec& v) const { return is_zero_vec(reduce(v)); }

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  if (!member(v)) return std::nullopt;
  Vec coords(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) coords[i] = v[pivots_[i]];
  return coords;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw InputError("contains: ambient mismatch");
  for (const Vec& v : other.basis_) {
    if (!member(v)) return false;
  }
  return true;
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw InputError("intersect: ambient mismatch");
  std::size_t n = a.ambient_dim();
  std::size_t p = a.dim(), q = b.dim();
  if (p == 0 || q == 0) return Subspace::zero(n);
  // Solve sum x_i a_i = sum y_j b_j; columns are [A^T | -B^T].
  Matrix m(n, p + q);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t k = 0; k < n; ++k) m.at(k, i) = a.basis()[i][k];
  }
  for (std::size_t j = 0; j < q; ++j) {
    for (std::size_t k = 0; k < n; ++k) m.at(k, p + j) = -b.basis()[j][k];
  }
  Subspace sols = nullspace_basis(m);
  std::vector<Vec> gens;
  for (const Vec& s : sols.basis()) {
    Vec v(n);
    for (std::size_t i = 0; i < p; ++i) vec_axpy(v, s[i], a.basis()[i]);
    gens.push_back(std::move(v));
  }
  return Subspace::span(n, gens);
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw InputError("sum: ambient mismatch");
  std::vector<Vec> gens = a.basis();
  gens.insert(gens.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.ambient_dim(), gens);
}

}  // namespace hls
