#include "doctest.h"

#include "qhecke/linalg.hpp"
#include "qhecke/polyring.hpp"

#include <random>

using namespace qh;

namespace {

MPoly X(int i) { return MPoly::var(i); }

MPoly random_poly(std::mt19937_64& rng, int n, int maxdeg, int nterms) {
  std::uniform_int_distribution<int> coef(-5, 5);
  auto mons = monomials_up_to(n, maxdeg);
  std::uniform_int_distribution<std::size_t> pick(0, mons.size() - 1);
  MPoly p;
  for (int k = 0; k < nterms; ++k) p += MPoly::term(mons[pick(rng)], coef(rng));
  return p;
}

}  // namespace

TEST_CASE("polynomial arithmetic basics") {
  MPoly a = X(1) + X(2);
  CHECK((a * a).str() == "X1^2 + 2*X1*X2 + X2^2");
  CHECK((a - a).is_zero());
  CHECK((X(1) - 1).pow(3).str() == "X1^3 - 3*X1^2 + 3*X1 - 1");
  CHECK(MPoly(0).str() == "0");
  CHECK(((X(1) * X(1) - X(2) * X(2)).divide_linear(1, 2)) == X(1) + X(2));
  CHECK_FALSE((X(1) * X(1) + X(2)).try_divide_linear(1, 2).has_value());
}

TEST_CASE("symmetric group action") {
  CHECK(act(Permutation::simple(2, 1), X(1)) == X(2));
  CHECK(act(Permutation::simple(2, 1), X(1) + X(2)) == X(1) + X(2));
  CHECK(act(longest_element(3), X(1) * X(2).pow(2)) == X(3) * X(2).pow(2));
  // (vw).P = v.(w.P)
  auto perms = all_permutations(3);
  MPoly p = X(1) * X(2).pow(2) + 3 * X(3);
  for (const auto& v : perms)
    for (const auto& w : perms) CHECK(act(v * w, p) == act(v, act(w, p)));
}

TEST_CASE("demazure examples") {
  CHECK(demazure(1, X(1)) == MPoly(-1));
  CHECK(demazure(1, X(2)) == MPoly(1));
  CHECK(demazure_word(longest_element(3), X(2) * X(3).pow(2)) == MPoly(1));
  CHECK(demazure_word(longest_element(4), staircase(4)) == MPoly(1));
  CHECK(demazure_word(longest_element(3), X(1)).is_zero());
  MPoly p = X(1).pow(2) * X(2);
  CHECK(demazure_letters<Integer>({1, 2, 1}, p) == demazure_letters<Integer>({2, 1, 2}, p));
}

TEST_CASE("division routine agrees with the closed monomial formula") {
  for (const auto& m : monomials_up_to(4, 6))
    for (int i = 1; i < 4; ++i) CHECK(demazure(i, MPoly::term(m, 1)) == demazure_monomial_formula(i, m));
}

TEST_CASE("nil Coxeter relations on monomials") {
  const int n = 4;
  for (const auto& m : monomials_up_to(n, 5)) {
    MPoly p = MPoly::term(m, 1);
    for (int i = 1; i < n; ++i) {
      CHECK(demazure(i, demazure(i, p)).is_zero());
      for (int j = 1; j < n; ++j) {
        if (std::abs(i - j) > 1) CHECK(demazure(i, demazure(j, p)) == demazure(j, demazure(i, p)));
        if (j == i + 1)
          CHECK(demazure(i, demazure(j, demazure(i, p))) == demazure(j, demazure(i, demazure(j, p))));
      }
    }
  }
}

TEST_CASE("twisted Leibniz rule and symmetric linearity") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    MPoly p = random_poly(rng, 3, 3, 4), q = random_poly(rng, 3, 3, 4);
    for (int i = 1; i < 3; ++i) {
      CHECK(demazure(i, p * q) == demazure(i, p) * q + p.swapped(i, i + 1) * demazure(i, q));
      MPoly d = demazure(i, p);
      CHECK(d.swapped(i, i + 1) == d);
    }
    for (int r = 1; r <= 3; ++r) {
      MPoly e = elementary_symmetric(3, r);
      CHECK(demazure_word(longest_element(3), e * p) == e * demazure_word(longest_element(3), p));
    }
  }
}

TEST_CASE("symmetry test") {
  CHECK(is_symmetric(elementary_symmetric(3, 2), 3));
  CHECK_FALSE(is_symmetric(X(1), 2));
  CHECK(elementary_symmetric(3, 2) == X(1) * X(2) + X(1) * X(3) + X(2) * X(3));
}

TEST_CASE("schubert coordinates") {
  const int n = 3;
  auto one = schubert_coordinates(MPoly(1), n);
  CHECK(one.size() == 1);
  CHECK(one.at(longest_element(n)) == MPoly(1));
  auto basis = schubert_basis(n);
  for (const auto& [w, b] : basis) {
    auto c = schubert_coordinates(b, n);
    CHECK(c.size() == 1);
    CHECK(c.at(w) == MPoly(1));
  }
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    MPoly p = random_poly(rng, n, 4, 6);
    auto c = schubert_coordinates(p, n);
    for (const auto& [w, q] : c) CHECK(is_symmetric(q, n));
    CHECK(schubert_reconstruct(c, n) == p);
  }
}

TEST_CASE("hilbert series") {
  CHECK(polynomial_ring_hilbert_series(1, 3).str("q") == "1 + q + q^2 + q^3");
  CHECK(polynomial_ring_hilbert_series(2, 2).str("q") == "1 + 2*q + 3*q^2");
  for (int n = 1; n <= 4; ++n) CHECK(polynomial_ring_hilbert_series(n, 6) == polynomial_ring_series_formula(n, 6));
  CHECK(symmetric_ring_hilbert_series(3, 5) == symmetric_ring_series_formula(3, 5));
  CHECK(symmetric_ring_hilbert_series(2, 6) == symmetric_ring_series_formula(2, 6));
}

TEST_CASE("schubert gram matrix is unimodular") {
  for (int n = 1; n <= 3; ++n) {
    auto g = schubert_gram_matrix(n);
    MPoly det = determinant_leibniz(g);
    CHECK((det == MPoly(1) || det == MPoly(-1)));
  }
}
