#include "hls/graded_map.hpp"

#include "hls/errors.hpp"

namespace hls {

GradedLinearMap GradedLinearMap::checked(const GradedBasis& basis, Parity degree,
                                         Matrix m) {
  if (m.rows() != basis.dim() || m.cols() != basis.dim()) {
    throw InputError("linear map shape does not match basis dimension");
  }
  for (std::size_t k = 0; k < m.rows(); ++k) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m.at(k, j).is_zero()) continue;
      if (basis.parity(k) != basis.parity(j) + degree) {
        throw GradingError("linear map entry (" + basis.label(k) + ", " +
                           basis.label(j) + ") violates degree " +
                           std::to_string(parity_int(degree)) + " homogeneity");
      }
    }
  }
  return GradedLinearMap(degree, std::move(m));
}

GradedLinearMap GradedLinearMap::unchecked(Parity degree, Matrix m) {
  return GradedLinearMap(degree, std::move(m));
}

GradedLinearMap GradedLinearMap::identity(const GradedBasis& basis) {
  return GradedLinearMap(Parity::Even, Matrix::identity(basis.dim()));
}

GradedLinearMap GradedLinearMap::zero(const GradedBasis& basis, Parity degree) {
  return GradedLinearMap(degree, Matrix(basis.dim(), basis.dim()));
}

bool Tensor3::is_zero() const {
  for (const auto& x : t_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

GradedBilinearMap GradedBilinearMap::checked(const GradedBasis& basis, Parity degree,
                                             Tensor3 t) {
  if (t.dim() != basis.dim()) {
    throw InputError("bilinear map shape does not match basis dimension");
  }
  std::size_t n = t.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (t.at(i, j, k).is_zero()) continue;
        if (basis.parity(k) != basis.parity(i) + basis.parity(j) + degree) {
          throw GradingError("bilinear map entry (" + basis.label(i) + ", " +
                             basis.label(j) + " -> " + basis.label(k) +
                             ") violates degree " +
                             std::to_string(parity_int(degree)) + " homogeneity");
        }
      }
    }
  }
  return GradedBilinearMap(degree, std::move(t));
}

GradedBilinearMap GradedBilinearMap::unchecked(Parity degree, Tensor3 t) {
  return GradedBilinearMap(degree, std::move(t));
}

GradedBilinearMap GradedBilinearMap::zero(std::size_t n, Parity degree) {
  return GradedBilinearMap(degree, Tensor3(n));
}

Vec GradedBilinearMap::eval_basis(std::size_t i, std::size_t j) const {
  std::size_t n = t_.dim();
  Vec v(n);
  for (std::size_t k = 0; k < n; ++k) v[k] = t_.at(i, j, k);
  return v;
}

Vec GradedBilinearMap::eval(const Vec& x, const Vec& y) const {
  std::size_t n = t_.dim();
  if (x.size() != n || y.size() != n) throw InputError("bilinear eval size mismatch");
  Vec v(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      Rational c = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) {
        if (!t_.at(i, j, k).is_zero()) v[k] += c * t_.at(i, j, k);
      }
    }
  }
  return v;
}

}  // namespace hls
