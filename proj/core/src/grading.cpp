#include "hls/grading.hpp"

#include <set>

#include "hls/errors.hpp"

namespace hls {

GradedBasis::GradedBasis(std::vector<std::string> even_labels,
                         std::vector<std::string> odd_labels)
    : even_count_(even_labels.size()) {
  labels_ = std::move(even_labels);
  labels_.insert(labels_.end(), std::make_move_iterator(odd_labels.begin()),
                 std::make_move_iterator(odd_labels.end()));
  if (labels_.empty()) throw InputError("graded basis must have dimension >= 1");
  std::set<std::string> seen;
  for (const std::string& l : labels_) {
    if (l.empty()) throw InputError("basis labels must be nonempty");
    if (!seen.insert(l).second) throw InputError("duplicate basis label '" + l + "'");
  }
}

std::optional<std::size_t> GradedBasis::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

}  // namespace hls
