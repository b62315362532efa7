#include "hls/zoo.hpp"

#include "hls/errors.hpp"

namespace hls {

namespace {

void reject_unknown_params(const ZooParams& params,
                           const std::vector<std::string>& accepted,
                           const std::string& name) {
  for (const auto& [key, value] : params) {
    bool ok = false;
    for (const auto& a : accepted) ok = ok || key == a;
    if (!ok) throw InputError("zoo entry '" + name + "' takes no parameter '" + key + "'");
  }
}

long int_param(const ZooParams& params, const std::string& key, long fallback) {
  auto it = params.find(key);
  if (it == params.end()) return fallback;
  if (it->second.denominator() != 1 || it->second.sign() < 0) {
    throw InputError("parameter '" + key + "' must be a non-negative integer");
  }
  return it->second.numerator().get_si();
}

Rational lambda_param(const ZooParams& params) {
  auto it = params.find("lambda");
  Rational lambda = it == params.end() ? Rational(2) : it->second;
  if (lambda.is_zero()) throw InputError("parameter 'lambda' must be nonzero");
  return lambda;
}

HomLieSuperalgebra make_abelian(long m, long n) {
  if (m + n < 1) throw InputError("abelian(m|n) needs m + n >= 1");
  std::vector<std::string> even, odd;
  for (long i = 1; i <= m; ++i) even.push_back("x" + std::to_string(i));
  for (long i = 1; i <= n; ++i) odd.push_back("y" + std::to_string(i));
  GradedBasis basis(even, odd);
  std::string name = "abelian(" + std::to_string(m) + "|" + std::to_string(n) + ")";
  return HomLieSuperalgebra::create(name, basis,
                                    GradedBilinearMap::zero(basis.dim(), Parity::Even),
                                    GradedLinearMap::identity(basis));
}

HomLieSuperalgebra make_heis3() {
  GradedBasis basis({"x", "y", "z"}, {});
  Tensor3 t(3);
  t.at(0, 1, 2) = Rational(1);   // [x,y] = z
  t.at(1, 0, 2) = Rational(-1);
  return HomLieSuperalgebra::create("heis3", basis,
                                    GradedBilinearMap::checked(basis, Parity::Even, t),
                                    GradedLinearMap::identity(basis));
}

HomLieSuperalgebra make_odd_heis() {
  GradedBasis basis({"e"}, {"f"});
  Tensor3 t(2);
  t.at(1, 1, 0) = Rational(1);   // [f,f] = e, legal for an odd element
  return HomLieSuperalgebra::create("odd_heis", basis,
                                    GradedBilinearMap::checked(basis, Parity::Even, t),
                                    GradedLinearMap::identity(basis));
}

HomLieSuperalgebra make_sl2() {
  GradedBasis basis({"h", "e", "f"}, {});
  Tensor3 t(3);
  t.at(0, 1, 1) = Rational(2);    // [h,e] = 2e
  t.at(1, 0, 1) = Rational(-2);
  t.at(0, 2, 2) = Rational(-2);   // [h,f] = -2f
  t.at(2, 0, 2) = Rational(2);
  t.at(1, 2, 0) = Rational(1);    // [e,f] = h
  t.at(2, 1, 0) = Rational(-1);
  return HomLieSuperalgebra::create("sl2", basis,
                                    GradedBilinearMap::checked(basis, Parity::Even, t),
                                    GradedLinearMap::identity(basis));
}

HomLieSuperalgebra make_sl2_twist(const Rational& lambda) {
  HomLieSuperalgebra base = make_sl2();
  // diag automorphism fixing h and scaling the root vectors e, f by
  // lambda, 1/lambda (basis order is h, e, f).
  Matrix a(3, 3);
  a.at(0, 0) = Rational(1);
  a.at(1, 1) = lambda;
  a.at(2, 2) = Rational(1) / lambda;
  return yau_twist(base, GradedLinearMap::checked(base.basis(), Parity::Even, a),
                   "sl2_twist(" + lambda.str() + ")");
}

HomLieSuperalgebra make_odd_heis_twist(const Rational& lambda) {
  HomLieSuperalgebra base = make_odd_heis();
  Matrix a(2, 2);
  a.at(0, 0) = lambda * lambda;  // e -> lambda^2 e, forced by [f,f] = e
  a.at(1, 1) = lambda;           // f -> lambda f
  return yau_twist(base, GradedLinearMap::checked(base.basis(), Parity::Even, a),
                   "odd_heis_twist(" + lambda.str() + ")");
}

}  // namespace

const std::vector<ZooEntry>& zoo_catalog() {
  static const std::vector<ZooEntry> catalog = {
      {"abelian", "zero bracket on m even and n odd generators, alpha = id", {"m", "n"}},
      {"heis3", "Heisenberg algebra: [x,y] = z, alpha = id", {}},
      {"odd_heis", "odd Heisenberg pair: [f,f] = e with f odd, alpha = id", {}},
      {"sl2", "[h,e] = 2e, [h,f] = -2f, [e,f] = h, alpha = id", {}},
      {"sl2_twist", "sl2 twisted along the diagonal automorphism diag(1, lambda, 1/lambda)",
       {"lambda"}},
      {"odd_heis_twist", "odd_heis twisted along diag(lambda^2, lambda)", {"lambda"}},
  };
  return catalog;
}

HomLieSuperalgebra zoo_get(const std::string& name, const ZooParams& params) {
  if (name == "abelian") {
    reject_unknown_params(params, {"m", "n"}, name);
    return make_abelian(int_param(params, "m", 1), int_param(params, "n", 1));
  }
  if (name == "heis3") {
    reject_unknown_params(params, {}, name);
    return make_heis3();
  }
  if (name == "odd_heis") {
    reject_unknown_params(params, {}, name);
    return make_odd_heis();
  }
  if (name == "sl2") {
    reject_unknown_params(params, {}, name);
    return make_sl2();
  }
  if (name == "sl2_twist") {
    reject_unknown_params(params, {"lambda"}, name);
    return make_sl2_twist(lambda_param(params));
  }
  if (name == "odd_heis_twist") {
    reject_unknown_params(params, {"lambda"}, name);
    return make_odd_heis_twist(lambda_param(params));
  }
  throw InputError("unknown zoo entry '" + name + "'");
}

}  // namespace hls
