#include "hls/rational.hpp"

#include <cctype>
#include <ostream>

#include "hls/errors.hpp"

namespace hls {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long num, long den) : v_(num, den) {
  if (den == 0) throw InputError("rational with zero denominator");
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view num = text;
  std::string_view den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  std::string_view num_digits = num;
  if (!num_digits.empty() && num_digits.front() == '-') num_digits.remove_prefix(1);
  if (!all_digits(num_digits) || !all_digits(den)) {
    throw InputError("cannot parse rational '" + std::string(text) +
                     "', expected \"p\" or \"p/q\"");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) {
    throw InputError("rational '" + std::string(text) + "' has zero denominator");
  }
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(std::move(q));
}

std::string Rational::str() const { return v_.get_str(); }

Rational Rational::operator-() const {
  mpq_class r(-v_);
  return Rational(std::move(r));
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw InputError("rational division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.v_.get_str(); }

}  // namespace hls
