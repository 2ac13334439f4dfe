#include "doctest.h"

#include "qhecke/coxeter.hpp"

#include <deque>
#include <map>

using namespace qh;

namespace {

// minimal word length by breadth-first search over the Cayley graph
std::map<Permutation, int> bfs_lengths(int n) {
  std::map<Permutation, int> dist;
  std::deque<Permutation> queue{Permutation::identity(n)};
  dist[queue.front()] = 0;
  while (!queue.empty()) {
    Permutation w = queue.front();
    queue.pop_front();
    for (int i = 1; i < n; ++i) {
      Permutation x = w.right_mul_simple(i);
      if (dist.emplace(x, dist[w] + 1).second) queue.push_back(x);
    }
  }
  return dist;
}

}  // namespace

TEST_CASE("length examples") {
  CHECK(length(Permutation::identity(4)) == 0);
  CHECK(length(Permutation({3, 2, 1})) == 3);
  CHECK(length(longest_element(4)) == 6);
  CHECK(evaluate_word(3, {1, 2, 1}) == Permutation({3, 2, 1}));
  CHECK(evaluate_word(3, {2, 1, 2}) == Permutation({3, 2, 1}));
}

TEST_CASE("inversion count equals minimal word length") {
  for (int n = 1; n <= 5; ++n) {
    auto dist = bfs_lengths(n);
    CHECK(dist.size() == static_cast<std::size_t>(factorial(n)));
    for (const auto& [w, d] : dist) {
      CHECK(w.length() == d);
      CHECK(w.inverse().length() == d);
    }
  }
}

TEST_CASE("canonical reduced words") {
  CHECK(canonical_reduced_word(longest_element(3)).letters() == std::vector<int>{1, 2, 1});
  CHECK(canonical_reduced_word(Permutation::identity(3)).letters().empty());
  for (int n = 1; n <= 5; ++n)
    for (const auto& w : all_permutations(n)) {
      auto word = canonical_reduced_word(w);
      CHECK(word.length() == w.length());
      CHECK(word.evaluate() == w);
    }
}

TEST_CASE("reduced word validation") {
  CHECK_THROWS_AS(ReducedWord(3, {1, 1}), MathError);
  CHECK_NOTHROW(ReducedWord(4, {1, 3, 2}));
  CHECK_THROWS_AS(Permutation({1, 1, 2}), MathError);
}

TEST_CASE("longest element") {
  CHECK(longest_element(2) == Permutation::simple(2, 1));
  CHECK(longest_element(4).images() == std::vector<int>{4, 3, 2, 1});
  const Permutation w0 = longest_element(4);
  for (const auto& w : all_permutations(4)) CHECK((w0 * w.inverse()).length() == w0.length() - w.length());
}

TEST_CASE("descents match length changes") {
  for (const auto& w : all_permutations(4))
    for (int i = 1; i < 4; ++i) {
      CHECK(w.left_descent(i) == (w.left_mul_simple(i).length() < w.length()));
      CHECK(w.right_descent(i) == (w.right_mul_simple(i).length() < w.length()));
      CHECK(w.left_mul_simple(i) == Permutation::simple(4, i) * w);
    }
}

TEST_CASE("coset decomposition is unique and length additive") {
  for (int n = 2; n <= 5; ++n) {
    auto reps = coset_representatives(n);
    CHECK(reps.size() == static_cast<std::size_t>(n));
    std::map<std::vector<int>, int> seen;
    for (const auto& w : all_permutations(n)) {
      auto chain = coset_chain(w);
      CHECK(++seen[chain] == 1);
      int total = 0;
      for (std::size_t k = 0; k < chain.size(); ++k) total += (n - static_cast<int>(k)) - chain[k];
      CHECK(total == w.length());
    }
  }
}

TEST_CASE("concatenating reduced words of length-additive pairs stays reduced") {
  const int n = 4;
  for (const auto& w : all_permutations(n))
    for (const auto& v : all_permutations(n)) {
      if ((w * v).length() != w.length() + v.length()) continue;
      auto word = canonical_letters(w);
      const auto& tail = canonical_letters(v);
      word.insert(word.end(), tail.begin(), tail.end());
      CHECK(is_reduced(n, word));
      CHECK(evaluate_word(n, word) == w * v);
    }
}

TEST_CASE("poincare polynomial") {
  CHECK(poincare_polynomial(1) == Laurent(1));
  Laurent p3;
  p3.add_term(0, 1);
  p3.add_term(1, 2);
  p3.add_term(2, 2);
  p3.add_term(3, 1);
  CHECK(poincare_polynomial(3) == p3);
  for (int n = 1; n <= 6; ++n) CHECK(poincare_polynomial(n) == poincare_product_formula(n));
  CHECK(poincare_polynomial(4).str("q") == "1 + 3*q + 5*q^2 + 6*q^3 + 5*q^4 + 3*q^5 + q^6");
}
