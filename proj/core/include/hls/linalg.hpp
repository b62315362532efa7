#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hls/matrix.hpp"

namespace hls {

struct RrefResult {
  Matrix r;
  std::vector<std::size_t> pivots;  // pivot column of row i, strictly increasing
};

/// Reduced row echelon form by exact Gauss-Jordan elimination: pivots are 1
/// with zeros above and below, rows ordered by pivot column, zero rows last.
RrefResult rref(Matrix m);

std::size_t rank(const Matrix& m);

class Subspace;

/// Canonical basis of {x : m x = 0}.
Subspace nullspace_basis(const Matrix& m);

/// One exact solution of a x = b (free variables set to 0), or nullopt when
/// the system is inconsistent. Inconsistency is a value, not an error.
std::optional<Vec> solve_linear(const Matrix& a, const Vec& b);

/// Subspace of Q^n held as a canonical spanning set: the nonzero rows of the
/// reduced row echelon form. Two subspaces are equal iff their
/// representations are identical.
class Subspace {
 public:
  /// The zero subspace of the zero space; a placeholder for fields that are
  /// filled in later.
  Subspace() : ambient_(0) {}

  static Subspace zero(std::size_t ambient);
  static Subspace full(std::size_t ambient);
  static Subspace span(std::size_t ambient, const std::vector<Vec>& vectors);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool member(const Vec& v) const;
  /// Canonical remainder of v after elimination against the basis; zero iff
  /// v is a member.
  Vec reduce(const Vec& v) const;
  /// Coordinates of v in the canonical basis, or nullopt when v is outside.
  std::optional<Vec> coordinates(const Vec& v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  Subspace(std::size_t ambient, std::vector<Vec> basis, std::vector<std::size_t> pivots)
      : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}
  std::size_t ambient_;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

Subspace intersect(const Subspace& a, const Subspace& b);
Subspace subspace_sum(const Subspace& a, const Subspace& b);

}  // namespace hls
