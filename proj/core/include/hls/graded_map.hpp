#pragma once

#include <cstddef>
#include <vector>

#include "hls/grading.hpp"
#include "hls/matrix.hpp"

namespace hls {

/// Homogeneous linear map of fixed parity degree s. Column j holds the image
/// of basis element j; entry (k, j) is zero unless parity(k) = parity(j) + s.
class GradedLinearMap {
 public:
  /// Verifies the homogeneity invariant; throws GradingError naming the first
  /// offending entry.
  static GradedLinearMap checked(const GradedBasis& basis, Parity degree, Matrix m);
  /// Caller guarantees homogeneity (or deliberately stores a raw matrix for
  /// later validation).
  static GradedLinearMap unchecked(Parity degree, Matrix m);
  static GradedLinearMap identity(const GradedBasis& basis);
  static GradedLinearMap zero(const GradedBasis& basis, Parity degree);

  Parity degree() const { return degree_; }
  const Matrix& matrix() const { return m_; }
  std::size_t dim() const { return m_.cols(); }

  Vec apply(const Vec& v) const { return m_.apply(v); }
  Vec apply_basis(std::size_t j) const { return m_.col(j); }

  friend bool operator==(const GradedLinearMap& a, const GradedLinearMap& b) {
    return a.degree_ == b.degree_ && a.m_ == b.m_;
  }

 private:
  GradedLinearMap(Parity degree, Matrix m) : degree_(degree), m_(std::move(m)) {}
  Parity degree_;
  Matrix m_;
};

/// Dense rank-3 tensor t[i][j][k], the coordinates of a bilinear map:
/// phi(e_i, e_j) = sum_k t[i][j][k] e_k.
class Tensor3 {
 public:
  Tensor3() : n_(0) {}
  explicit Tensor3(std::size_t n) : n_(n), t_(n * n * n) {}

  std::size_t dim() const { return n_; }
  Rational& at(std::size_t i, std::size_t j, std::size_t k) {
    return t_[(i * n_ + j) * n_ + k];
  }
  const Rational& at(std::size_t i, std::size_t j, std::size_t k) const {
    return t_[(i * n_ + j) * n_ + k];
  }
  bool is_zero() const;

  friend bool operator==(const Tensor3& a, const Tensor3& b) {
    return a.n_ == b.n_ && a.t_ == b.t_;
  }

 private:
  std::size_t n_;
  std::vector<Rational> t_;
};

/// Homogeneous bilinear map of parity degree s: entry t[i][j][k] is zero
/// unless parity(k) = parity(i) + parity(j) + s.
class GradedBilinearMap {
 public:
  static GradedBilinearMap checked(const GradedBasis& basis, Parity degree, Tensor3 t);
  static GradedBilinearMap unchecked(Parity degree, Tensor3 t);
  static GradedBilinearMap zero(std::size_t n, Parity degree);

  Parity degree() const { return degree_; }
  const Tensor3& tensor() const { return t_; }
  std::size_t dim() const { return t_.dim(); }

  /// phi(e_i, e_j) as a coordinate vector.
  Vec eval_basis(std::size_t i, std::size_t j) const;
  /// Bilinear extension to arbitrary coordinate vectors.
  Vec eval(const Vec& x, const Vec& y) const;

  friend bool operator==(const GradedBilinearMap& a, const GradedBilinearMap& b) {
    return a.degree_ == b.degree_ && a.t_ == b.t_;
  }

 private:
  GradedBilinearMap(Parity degree, Tensor3 t) : degree_(degree), t_(std::move(t)) {}
  Parity degree_;
  Tensor3 t_;
};

}  // namespace hls
