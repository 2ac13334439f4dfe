#pragma once

#include "qhecke/laurent.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace qh {

// Element of S_n in one-line notation (1-based images).
// Composition follows (vw)(i) = v(w(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  // s_i = (i, i+1), 1 <= i <= n-1
  static Permutation simple(int n, int i);

  int n() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i - 1]; }
  std::vector<int> images() const { return {img_.begin(), img_.end()}; }

  Permutation inverse() const;
  int length() const;
  bool is_identity() const;
  int sign() const { return length() % 2 == 0 ? 1 : -1; }

  // l(s_i w) < l(w)
  bool left_descent(int i) const;
  // l(w s_i) < l(w)
  bool right_descent(int i) const;

  // s_i * w and w * s_i without building s_i
  Permutation left_mul_simple(int i) const;
  Permutation right_mul_simple(int i) const;

  friend Permutation operator*(const Permutation& v, const Permutation& w);
  friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.img_ < b.img_; }

  std::string str() const;
  std::size_t hash() const;

 private:
  std::vector<std::uint8_t> img_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const { return p.hash(); }
};

// Orders by length first, then lexicographically.
struct LengthLexLess {
  bool operator()(const Permutation& a, const Permutation& b) const;
};

class ReducedWord {
 public:
  // throws MathError if the word is not reduced
  ReducedWord(int n, std::vector<int> letters);
  int n() const { return n_; }
  const std::vector<int>& letters() const { return letters_; }
  int length() const { return static_cast<int>(letters_.size()); }
  Permutation evaluate() const;
  std::string str() const;

 private:
  int n_;
  std::vector<int> letters_;
};

// s_{l_1} s_{l_2} ... s_{l_r}
Permutation evaluate_word(int n, const std::vector<int>& letters);
bool is_reduced(int n, const std::vector<int>& letters);

int length(const Permutation& w);
Permutation longest_element(int n);

// Coset chain w = c_n c_{n-1} ... c_2 with c_i in C_i,
// C_i = {1, s_{i-1}, s_{i-2}s_{i-1}, ..., s_1...s_{i-1}}.
// Entry k of the result holds c_{n-k} as the starting index j of
// s_j s_{j+1} ... s_{i-1} (j == i means c_i = 1).
std::vector<int> coset_chain(const Permutation& w);
std::vector<Permutation> coset_representatives(int n);
ReducedWord canonical_reduced_word(const Permutation& w);
const std::vector<int>& canonical_letters(const Permutation& w);

std::vector<Permutation> all_permutations(int n);

// sum_w q^{l(w)}, returned as a polynomial in q
Laurent poincare_polynomial(int n);
// prod_{k=1}^n (1-q^k)/(1-q), expanded exactly
Laurent poincare_product_formula(int n);

}  // namespace qh
