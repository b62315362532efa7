#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hls/rational.hpp"

namespace hls {

using Vec = std::vector<Rational>;

bool is_zero_vec(const Vec& v);
Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Rational& c, const Vec& v);
/// a += c * b
void vec_axpy(Vec& a, const Rational& c, const Vec& b);

/// Dense row-major matrix of exact rationals. Zero rows or columns are legal;
/// they arise naturally from empty constraint systems.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(std::size_t cols, const std::vector<Vec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  void set_col(std::size_t j, const Vec& v);

  /// Matrix-vector product; v.size() must equal cols().
  Vec apply(const Vec& v) const;
  Matrix operator*(const Matrix& o) const;
  Matrix transpose() const;

  bool is_zero() const;
  bool is_identity() const;
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

  /// Exact inverse, or nullopt when singular (or non-square).
  std::optional<Matrix> inverse() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> e_;
};

}  // namespace hls
