#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hls/rational.hpp"

namespace hls {

enum class Parity : int { Even = 0, Odd = 1 };

inline Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>((static_cast<int>(a) + static_cast<int>(b)) % 2);
}
inline int parity_int(Parity p) { return static_cast<int>(p); }

/// (-1)^(ab) for parities a, b.
inline Rational parity_sign(Parity a, Parity b) {
  return (a == Parity::Odd && b == Parity::Odd) ? Rational(-1) : Rational(1);
}

/// (-1)^e for an integer exponent (parities multiply as ints mod 2).
inline Rational sign_pow(int e) { return (e % 2 != 0) ? Rational(-1) : Rational(1); }

/// Ordered homogeneous basis of a Z/2-graded space. Even elements always come
/// before odd ones; labels are distinct and nonempty; dimension is >= 1.
class GradedBasis {
 public:
  GradedBasis(std::vector<std::string> even_labels, std::vector<std::string> odd_labels);

  std::size_t dim() const { return labels_.size(); }
  std::size_t even_count() const { return even_count_; }
  std::size_t odd_count() const { return labels_.size() - even_count_; }

  Parity parity(std::size_t i) const {
    return i < even_count_ ? Parity::Even : Parity::Odd;
  }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::vector<std::string> even_labels() const {
    return {labels_.begin(), labels_.begin() + static_cast<std::ptrdiff_t>(even_count_)};
  }
  std::vector<std::string> odd_labels() const {
    return {labels_.begin() + static_cast<std::ptrdiff_t>(even_count_), labels_.end()};
  }
  std::optional<std::size_t> index_of(const std::string& label) const;

  friend bool operator==(const GradedBasis& a, const GradedBasis& b) {
    return a.labels_ == b.labels_ && a.even_count_ == b.even_count_;
  }

 private:
  std::vector<std::string> labels_;
  std::size_t even_count_;
};

}  // namespace hls
