#include "hls/algebra_io.hpp"

#include <set>

#include <nlohmann/json.hpp>

#include "hls/errors.hpp"

namespace hls {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::vector<std::string> parse_label_list(const json& j, const char* key) {
  std::vector<std::string> out;
  if (!j.contains(key)) return out;
  if (!j[key].is_array()) throw InputError(std::string("'") + key + "' must be an array");
  for (const auto& item : j[key]) {
    if (!item.is_string()) throw InputError(std::string("'") + key + "' entries must be strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

}  // namespace

AlgebraDescription parse_description(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw InputError("algebra description must be a JSON object");

  AlgebraDescription desc;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw InputError("'name' must be a string");
    desc.name = j["name"].get<std::string>();
  } else {
    desc.name = "unnamed";
  }
  desc.even = parse_label_list(j, "even");
  desc.odd = parse_label_list(j, "odd");

  if (j.contains("alpha")) {
    if (!j["alpha"].is_array()) throw InputError("'alpha' must be an array of columns");
    std::vector<std::vector<std::string>> grid;
    for (const auto& col : j["alpha"]) {
      if (!col.is_array()) throw InputError("'alpha' columns must be arrays");
      std::vector<std::string> c;
      for (const auto& entry : col) {
        if (!entry.is_string()) throw InputError("'alpha' entries must be rational strings");
        c.push_back(entry.get<std::string>());
      }
      grid.push_back(std::move(c));
    }
    desc.alpha = std::move(grid);
  }

  if (j.contains("brackets")) {
    if (!j["brackets"].is_array()) throw InputError("'brackets' must be an array");
    for (const auto& b : j["brackets"]) {
      if (!b.is_object() || !b.contains("left") || !b.contains("right") ||
          !b.contains("value")) {
        throw InputError("bracket entries need 'left', 'right' and 'value'");
      }
      if (!b["left"].is_string() || !b["right"].is_string() || !b["value"].is_object()) {
        throw InputError("malformed bracket entry");
      }
      AlgebraDescription::Bracket entry;
      entry.left = b["left"].get<std::string>();
      entry.right = b["right"].get<std::string>();
      for (const auto& [label, val] : b["value"].items()) {
        if (!val.is_string()) throw InputError("bracket values must be rational strings");
        entry.value.emplace_back(label, val.get<std::string>());
      }
      desc.brackets.push_back(std::move(entry));
    }
  }
  return desc;
}

HomLieSuperalgebra assemble_unchecked(const AlgebraDescription& desc) {
  GradedBasis basis(desc.even, desc.odd);
  const std::size_t n = basis.dim();

  Matrix a = Matrix::identity(n);
  if (desc.alpha) {
    const auto& grid = *desc.alpha;
    if (grid.size() != n) throw InputError("'alpha' must have one column per basis element");
    for (std::size_t j = 0; j < n; ++j) {
      if (grid[j].size() != n) throw InputError("'alpha' columns must have length dim");
      for (std::size_t k = 0; k < n; ++k) a.at(k, j) = Rational::parse(grid[j][k]);
    }
  }

  Tensor3 t(n);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& entry : desc.brackets) {
    auto li = basis.index_of(entry.left);
    auto ri = basis.index_of(entry.right);
    if (!li) throw InputError("bracket references unknown label '" + entry.left + "'");
    if (!ri) throw InputError("bracket references unknown label '" + entry.right + "'");
    auto key = std::minmax(*li, *ri);
    if (!seen.insert(key).second) {
      throw InputError("bracket pair (" + entry.left + ", " + entry.right +
                       ") listed more than once (each unordered pair appears once)");
    }
    for (const auto& [label, val] : entry.value) {
      auto ki = basis.index_of(label);
      if (!ki) throw InputError("bracket value references unknown label '" + label + "'");
      t.at(*li, *ri, *ki) = Rational::parse(val);
    }
    if (*li != *ri) {
      // Mirror by skew-supersymmetry.
      Rational s = -parity_sign(basis.parity(*li), basis.parity(*ri));
      for (std::size_t k = 0; k < n; ++k) t.at(*ri, *li, k) = s * t.at(*li, *ri, k);
    }
  }

  return HomLieSuperalgebra::unchecked(
      desc.name, basis, GradedBilinearMap::unchecked(Parity::Even, std::move(t)),
      GradedLinearMap::unchecked(Parity::Even, std::move(a)));
}

HomLieSuperalgebra load_algebra(const std::string& json_text) {
  AlgebraDescription desc = parse_description(json_text);
  HomLieSuperalgebra raw = assemble_unchecked(desc);
  // Re-run the axiom gate; create() throws with the first failing tuple.
  return HomLieSuperalgebra::create(raw.name(), raw.basis(), raw.bracket(), raw.alpha());
}

std::string emit_description(const HomLieSuperalgebra& h) {
  const std::size_t n = h.dim();
  ordered_json j;
  j["name"] = h.name();
  j["even"] = ordered_json::array();
  j["odd"] = ordered_json::array();
  for (std::size_t i = 0; i < n; ++i) {
    (h.parity(i) == Parity::Even ? j["even"] : j["odd"]).push_back(h.basis().label(i));
  }
  if (!h.alpha().matrix().is_identity()) {
    ordered_json grid = ordered_json::array();
    for (std::size_t col = 0; col < n; ++col) {
      ordered_json c = ordered_json::array();
      for (std::size_t row = 0; row < n; ++row) {
        c.push_back(h.alpha().matrix().at(row, col).str());
      }
      grid.push_back(std::move(c));
    }
    j["alpha"] = std::move(grid);
  }
  ordered_json brackets = ordered_json::array();
  for (std::size_t i = 0; i < n; ++i) {
    // One entry per unordered pair; odd diagonals [x,x] are meaningful.
    for (std::size_t k = i; k < n; ++k) {
      Vec v = h.bracket_basis(i, k);
      if (is_zero_vec(v)) continue;
      ordered_json value;
      for (std::size_t c = 0; c < n; ++c) {
        if (!v[c].is_zero()) value[h.basis().label(c)] = v[c].str();
      }
      brackets.push_back(ordered_json{{"left", h.basis().label(i)},
                                      {"right", h.basis().label(k)},
                                      {"value", std::move(value)}});
    }
  }
  j["brackets"] = std::move(brackets);
  return j.dump(2) + "\n";
}

}  // namespace hls
