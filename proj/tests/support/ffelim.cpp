#include "ffelim.hpp"

#include "hls/rational.hpp"

namespace hlstest {

FfResult fraction_free_solve(const hls::Matrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();

  // Integer matrix: each row scaled by the lcm of its denominators.
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < cols; ++c) {
      mpz_class den = m.at(r, c).denominator();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
    }
    for (std::size_t c = 0; c < cols; ++c) {
      a[r][c] = m.at(r, c).numerator() * (l / m.at(r, c).denominator());
    }
  }

  // One-step Bareiss: entries stay integral, each update divides exactly by
  // the previous pivot.
  mpz_class prev = 1;
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t p = row;
    while (p < rows && a[p][col] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[row]);
    for (std::size_t i = row + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        mpz_class t = a[row][col] * a[i][j] - a[i][col] * a[row][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = t;
      }
      a[i][col] = 0;
    }
    prev = a[row][col];
    pivot_cols.push_back(col);
    ++row;
  }

  FfResult res;
  res.rank = row;

  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivot_cols) is_pivot[c] = true;

  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<mpq_class> v(cols, mpq_class(0));
    v[f] = 1;
    for (std::size_t r = res.rank; r-- > 0;) {
      std::size_t pc = pivot_cols[r];
      mpq_class s = 0;
      for (std::size_t j = pc + 1; j < cols; ++j) {
        if (v[j] != 0 && a[r][j] != 0) s += mpq_class(a[r][j]) * v[j];
      }
      v[pc] = -s / mpq_class(a[r][pc]);
    }
    res.nullspace.push_back(std::move(v));
  }
  return res;
}

std::vector<hls::Vec> to_vecs(const std::vector<std::vector<mpq_class>>& vs) {
  std::vector<hls::Vec> out;
  out.reserve(vs.size());
  for (const auto& v : vs) {
    hls::Vec w;
    w.reserve(v.size());
    for (const mpq_class& q : v) w.push_back(hls::Rational::parse(q.get_str()));
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace hlstest
