#include "qhecke/polyring.hpp"

#include "qhecke/linalg.hpp"

#include <functional>

namespace qh {

bool is_symmetric(const MPoly& p, int n) {
  for (int i = 1; i < n; ++i)
    if (p.swapped(i, i + 1) != p) return false;
  return true;
}

MPoly staircase(int n) {
  Monomial m;
  for (int i = 2; i <= n; ++i) m.set(i - 1, i - 1);
  return MPoly::term(m, 1);
}

MPoly elementary_symmetric(int n, int r) {
  if (r < 0 || r > n) return {};
  std::vector<MPoly::Term> terms;
  std::function<void(int, int, Monomial)> rec = [&](int start, int left, Monomial m) {
    if (left == 0) {
      terms.emplace_back(m, 1);
      return;
    }
    for (int i = start; i <= n - left; ++i) {
      Monomial next = m;
      next.set(i, 1);
      rec(i + 1, left - 1, next);
    }
  };
  rec(0, r, Monomial::one());
  return MPoly::from_terms(std::move(terms));
}

MPoly complete_homogeneous(int n, int d) {
  std::vector<MPoly::Term> terms;
  for (const auto& m : monomials_of_degree(n, d)) terms.emplace_back(m, 1);
  return MPoly::from_terms(std::move(terms));
}

MPoly power_sum(int n, int d) {
  MPoly p;
  for (int i = 1; i <= n; ++i) p += MPoly::term(Monomial::var(i - 1, d), 1);
  return p;
}

std::vector<Monomial> monomials_of_degree(int n, int d) {
  std::vector<Monomial> out;
  if (n <= 0) {
    if (d == 0) out.push_back(Monomial::one());
    return out;
  }
  std::function<void(int, int, Monomial)> rec = [&](int i, int left, Monomial m) {
    if (i == n - 1) {
      m.set(i, left);
      out.push_back(m);
      return;
    }
    for (int k = left; k >= 0; --k) {
      Monomial next = m;
      next.set(i, k);
      rec(i + 1, left - k, next);
    }
  };
  rec(0, d, Monomial::one());
  return out;
}

std::vector<Monomial> monomials_up_to(int n, int d) {
  std::vector<Monomial> out;
  for (int k = 0; k <= d; ++k) {
    auto layer = monomials_of_degree(n, k);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::map<Permutation, MPoly> schubert_basis(int n) {
  std::map<Permutation, MPoly> basis;
  MPoly st = staircase(n);
  for (const auto& w : all_permutations(n)) basis.emplace(w, demazure_word(w, st));
  return basis;
}

std::map<Permutation, MPoly> schubert_coordinates(const MPoly& p, int n) {
  if (p.support() > n) throw MathError("polynomial involves variables beyond X_n");
  const Permutation w0 = longest_element(n);
  auto basis = schubert_basis(n);
  std::map<Permutation, MPoly> coords;
  MPoly rest = p;
  // increasing length: d_{w0 v^{-1}} isolates Q_v once shorter terms are removed
  for (const auto& v : all_permutations(n)) {
    MPoly q = demazure_word(w0 * v.inverse(), rest);
    if (!is_symmetric(q, n)) throw MathError("schubert coordinate is not symmetric");
    if (!q.is_zero()) {
      rest -= q * basis.at(v);
      coords.emplace(v, std::move(q));
    }
  }
  if (!rest.is_zero()) throw MathError("schubert expansion left a residual");
  return coords;
}

MPoly schubert_reconstruct(const std::map<Permutation, MPoly>& coords, int n) {
  auto basis = schubert_basis(n);
  MPoly p;
  for (const auto& [w, q] : coords) p += q * basis.at(w);
  return p;
}

std::vector<std::vector<MPoly>> schubert_gram_matrix(int n) {
  const Permutation w0 = longest_element(n);
  auto perms = all_permutations(n);
  auto basis = schubert_basis(n);
  std::vector<std::vector<MPoly>> g(perms.size(), std::vector<MPoly>(perms.size()));
  for (std::size_t a = 0; a < perms.size(); ++a)
    for (std::size_t b = a; b < perms.size(); ++b) {
      g[a][b] = demazure_word(w0, basis.at(perms[a]) * basis.at(perms[b]));
      g[b][a] = g[a][b];
    }
  return g;
}

Laurent polynomial_ring_hilbert_series(int n, int cutoff) {
  Laurent h;
  for (int d = 0; d <= cutoff; ++d) h.add_term(d, static_cast<long>(monomials_of_degree(n, d).size()));
  return h;
}

Laurent symmetric_ring_hilbert_series(int n, int cutoff) {
  // dimension of the common kernel of all d_i on each graded piece
  Laurent h;
  for (int d = 0; d <= cutoff; ++d) {
    auto rows = monomials_of_degree(n, d);
    auto cols_mons = monomials_of_degree(n, d - 1 >= 0 ? d - 1 : 0);
    std::map<Monomial, int> col_index;
    for (const auto& m : cols_mons) col_index.emplace(m, static_cast<int>(col_index.size()));
    const int ncols = static_cast<int>(col_index.size()) * std::max(1, n - 1);
    std::vector<std::vector<Rational>> mat;
    for (const auto& m : rows) {
      std::vector<Rational> row(ncols, 0);
      if (d > 0) {
        for (int i = 1; i < n; ++i) {
          MPoly img = demazure(i, MPoly::term(m, 1));
          for (const auto& [mm, c] : img.terms()) row[(i - 1) * col_index.size() + col_index.at(mm)] = Rational(c);
        }
      }
      mat.push_back(std::move(row));
    }
    std::size_t rank = (d == 0 || n == 1) ? 0 : rank_rational(mat);
    h.add_term(d, static_cast<long>(rows.size() - rank));
  }
  return h;
}

Laurent polynomial_ring_series_formula(int n, int cutoff) {
  Laurent s(1);
  for (int k = 0; k < n; ++k) s = truncate_above(s * geometric_series(1, cutoff), cutoff);
  return s;
}

Laurent symmetric_ring_series_formula(int n, int cutoff) {
  Laurent s(1);
  for (int k = 1; k <= n; ++k) s = truncate_above(s * geometric_series(k, cutoff), cutoff);
  return s;
}

MPoly demazure_monomial_formula(int i, const Monomial& m) {
  int a = m[i - 1], b = m[i];
  if (a == b) return {};
  Monomial rest = m;
  rest.set(i - 1, 0);
  rest.set(i, 0);
  int low = std::min(a, b), d = std::abs(a - b);
  Integer sign = a > b ? -1 : 1;
  std::vector<MPoly::Term> terms;
  for (int k = 0; k < d; ++k) {
    Monomial t = rest;
    t.set(i - 1, low + k);
    t.set(i, low + d - 1 - k);
    terms.emplace_back(t, sign);
  }
  return MPoly::from_terms(std::move(terms));
}

}  // namespace qh
