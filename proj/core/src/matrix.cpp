#include "hls/matrix.hpp"

#include "hls/errors.hpp"
#include "hls/linalg.hpp"

namespace hls {

bool is_zero_vec(const Vec& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = Rational(1);
  return v;
}

Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw InputError("vector size mismatch in add");
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw InputError("vector size mismatch in sub");
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec vec_scale(const Rational& c, const Vec& v) {
  Vec r(v);
  for (auto& x : r) x *= c;
  return r;
}

void vec_axpy(Vec& a, const Rational& c, const Vec& b) {
  if (a.size() != b.size()) throw InputError("vector size mismatch in axpy");
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += c * b[i];
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

Matrix Matrix::from_rows(std::size_t cols, const std::vector<Vec>& rows) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InputError("row length mismatch in from_rows");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Vec Matrix::row(std::size_t i) const {
  Vec v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

Vec Matrix::col(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

void Matrix::set_col(std::size_t j, const Vec& v) {
  if (v.size() != rows_) throw InputError("column length mismatch in set_col");
  for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw InputError("matrix-vector size mismatch");
  Vec r(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
    }
  }
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw InputError("matrix-matrix size mismatch");
  Matrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        if (!o.at(k, j).is_zero()) r.at(i, j) += at(i, k) * o.at(k, j);
      }
    }
  }
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  }
  return r;
}

bool Matrix::is_zero() const {
  for (const auto& x : e_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  return *this == identity(rows_);
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  // Row-reduce [A | I]; A is invertible iff the left block reduces to I.
  Matrix aug(rows_, 2 * cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = Rational(1);
  }
  RrefResult red = rref(aug);
  if (red.pivots.size() < rows_ || (rows_ > 0 && red.pivots.back() >= cols_)) {
    return std::nullopt;
  }
  for (std::size_t i = 0; i < rows_; ++i) {
    if (red.pivots[i] != i) return std::nullopt;
  }
  Matrix inv(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) inv.at(i, j) = red.r.at(i, cols_ + j);
  }
  return inv;
}

}  // namespace hls
