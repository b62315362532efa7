#pragma once

#include <map>
#include <string>
#include <vector>

#include "hls/algebra.hpp"

namespace hls {

using ZooParams = std::map<std::string, Rational>;

struct ZooEntry {
  std::string name;
  std::string summary;
  std::vector<std::string> params;  // accepted parameter names
};

/// Catalog of built-in algebras, in stable order.
const std::vector<ZooEntry>& zoo_catalog();

/// Instantiates a catalog entry. Accepted names and parameters:
///   abelian          m, n   (sizes of the even/odd parts; default 1|1)
///   heis3            -      (even Heisenberg: [x,y] = z)
///   odd_heis         -      (one even, one odd element: [f,f] = e)
///   sl2              -      ([h,e] = 2e, [h,f] = -2f, [e,f] = h)
///   sl2_twist        lambda (nonzero; twist by diag fixing h, scaling e, f)
///   odd_heis_twist   lambda (nonzero; twist by diag(lambda^2, lambda))
/// Unknown names/params or out-of-range values raise InputError.
HomLieSuperalgebra zoo_get(const std::string& name, const ZooParams& params = {});

}  // namespace hls
