#pragma once

#include "qhecke/coxeter.hpp"
#include "qhecke/laurent.hpp"
#include "qhecke/poly.hpp"

#include <map>
#include <vector>

namespace qh {

// X_i -> X_{w(i)}
inline MPoly act(const Permutation& w, const MPoly& p) { return p.act(w); }

// (P - s_i P) / (X_{i+1} - X_i)
template <class R>
Poly<R> demazure(int i, const Poly<R>& p) {
  if (i < 1 || i >= kMaxVars) throw MathError("demazure index out of range");
  return (p - p.swapped(i, i + 1)).divide_linear(i + 1, i);
}

// d_{l_1} d_{l_2} ... d_{l_r}, rightmost applied first
template <class R>
Poly<R> demazure_letters(const std::vector<int>& letters, Poly<R> p) {
  for (auto it = letters.rbegin(); it != letters.rend() && !p.is_zero(); ++it) p = demazure(*it, p);
  return p;
}

template <class R>
Poly<R> demazure_word(const Permutation& w, const Poly<R>& p) {
  return demazure_letters(canonical_letters(w), p);
}

bool is_symmetric(const MPoly& p, int n);

// X_2 X_3^2 ... X_n^{n-1}
MPoly staircase(int n);
MPoly elementary_symmetric(int n, int r);
MPoly complete_homogeneous(int n, int d);
MPoly power_sum(int n, int d);

// b_w = d_w(X_2 X_3^2 ... X_n^{n-1}), indexed by all of S_n
std::map<Permutation, MPoly> schubert_basis(int n);

// Coordinates Q_w (symmetric) with P = sum_w Q_w b_w.
std::map<Permutation, MPoly> schubert_coordinates(const MPoly& p, int n);
MPoly schubert_reconstruct(const std::map<Permutation, MPoly>& coords, int n);

// G_{w,w'} = d_{w[1,n]}(b_w b_{w'}), rows and columns in all_permutations order
std::vector<std::vector<MPoly>> schubert_gram_matrix(int n);

// All monomials in X_1..X_n with exponent sum exactly d.
std::vector<Monomial> monomials_of_degree(int n, int d);
std::vector<Monomial> monomials_up_to(int n, int d);

// Hilbert series up to q^cutoff: coefficient of q^d counts degree-2d pieces.
Laurent polynomial_ring_hilbert_series(int n, int cutoff);
Laurent symmetric_ring_hilbert_series(int n, int cutoff);
// (1-q)^{-n} and prod_k (1-q^k)^{-1}, truncated
Laurent polynomial_ring_series_formula(int n, int cutoff);
Laurent symmetric_ring_series_formula(int n, int cutoff);

// Closed-form monomial action of d_i, independent of the division routine.
MPoly demazure_monomial_formula(int i, const Monomial& m);

}  // namespace qh
