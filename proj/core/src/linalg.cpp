#include "qhecke/linalg.hpp"

#include <utility>

namespace qh {

Fp::Fp(const Integer& v) {
  Integer r = v % Integer(kModulus);
  if (r < 0) r += kModulus;
  v_ = static_cast<std::uint64_t>(r);
}

Fp Fp::pow(std::uint64_t e) const {
  Fp r(1), b = *this;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

Fp Fp::inverse() const {
  if (v_ == 0) throw MathError("inverse of zero mod p");
  return pow(kModulus - 2);
}

namespace {

template <class F>
std::size_t rank_dense(std::vector<std::vector<F>> m) {
  std::size_t rank = 0;
  if (m.empty()) return 0;
  const std::size_t cols = m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && is_zero(m[piv][c])) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    F inv = F(1) / m[rank][c];
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (is_zero(m[r][c])) continue;
      F f = m[r][c] * inv;
      for (std::size_t k = c; k < cols; ++k) m[r][k] = m[r][k] - f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t rank_mod_p(std::vector<std::vector<Fp>> m) { return rank_dense(std::move(m)); }
std::size_t rank_rational(std::vector<std::vector<Rational>> m) { return rank_dense(std::move(m)); }

Integer determinant_bareiss(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t s = k + 1;
      while (s < n && m[s][k].is_zero()) ++s;
      if (s == n) return 0;
      std::swap(m[s], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace qh
