#include "qhecke/coxeter.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace qh {

Permutation::Permutation(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  if (n < 1 || n > 250) throw MathError("permutation size out of range");
  std::vector<bool> seen(n + 1, false);
  img_.reserve(n);
  for (int x : images) {
    if (x < 1 || x > n || seen[x]) throw MathError("not a permutation of 1..n");
    seen[x] = true;
    img_.push_back(static_cast<std::uint8_t>(x));
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(v);
}

Permutation Permutation::simple(int n, int i) {
  if (i < 1 || i >= n) throw MathError("simple reflection index out of range");
  Permutation p = identity(n);
  std::swap(p.img_[i - 1], p.img_[i]);
  return p;
}

Permutation Permutation::inverse() const {
  Permutation r = *this;
  for (int i = 0; i < n(); ++i) r.img_[img_[i] - 1] = static_cast<std::uint8_t>(i + 1);
  return r;
}

int Permutation::length() const {
  int l = 0;
  for (int i = 0; i < n(); ++i)
    for (int j = i + 1; j < n(); ++j)
      if (img_[i] > img_[j]) ++l;
  return l;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < n(); ++i)
    if (img_[i] != i + 1) return false;
  return true;
}

bool Permutation::left_descent(int i) const {
  // s_i w has fewer inversions iff i+1 appears before i in the one-line word
  int pi = -1, pj = -1;
  for (int k = 0; k < n(); ++k) {
    if (img_[k] == i) pi = k;
    if (img_[k] == i + 1) pj = k;
  }
  return pj < pi;
}

bool Permutation::right_descent(int i) const { return img_[i - 1] > img_[i]; }

Permutation Permutation::left_mul_simple(int i) const {
  Permutation r = *this;
  for (auto& x : r.img_) {
    if (x == i)
      x = static_cast<std::uint8_t>(i + 1);
    else if (x == i + 1)
      x = static_cast<std::uint8_t>(i);
  }
  return r;
}

Permutation Permutation::right_mul_simple(int i) const {
  Permutation r = *this;
  std::swap(r.img_[i - 1], r.img_[i]);
  return r;
}

Permutation operator*(const Permutation& v, const Permutation& w) {
  if (v.n() != w.n()) throw MathError("permutation size mismatch");
  Permutation r = w;
  for (int i = 0; i < w.n(); ++i) r.img_[i] = v.img_[w.img_[i] - 1];
  return r;
}

std::string Permutation::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < n(); ++i) os << (i ? "," : "") << int(img_[i]);
  os << "]";
  return os.str();
}

std::size_t Permutation::hash() const {
  std::size_t h = 1469598103934665603ULL;
  for (auto x : img_) h = (h ^ x) * 1099511628211ULL;
  return h;
}

bool LengthLexLess::operator()(const Permutation& a, const Permutation& b) const {
  int la = a.length(), lb = b.length();
  if (la != lb) return la < lb;
  return a < b;
}

Permutation evaluate_word(int n, const std::vector<int>& letters) {
  Permutation p = Permutation::identity(n);
  for (int s : letters) {
    if (s < 1 || s >= n) throw MathError("word letter out of range");
    p = p.right_mul_simple(s);
  }
  return p;
}

bool is_reduced(int n, const std::vector<int>& letters) {
  return evaluate_word(n, letters).length() == static_cast<int>(letters.size());
}

ReducedWord::ReducedWord(int n, std::vector<int> letters) : n_(n), letters_(std::move(letters)) {
  if (!is_reduced(n_, letters_)) throw MathError("word is not reduced");
}

Permutation ReducedWord::evaluate() const { return evaluate_word(n_, letters_); }

std::string ReducedWord::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < letters_.size(); ++i) os << (i ? "," : "") << letters_[i];
  os << "]";
  return os.str();
}

int length(const Permutation& w) { return w.length(); }

Permutation longest_element(int n) {
  if (n < 1) throw MathError("rank must be positive");
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = n - i;
  return Permutation(v);
}

std::vector<int> coset_chain(const Permutation& w) {
  const int n = w.n();
  std::vector<int> chain;
  Permutation cur = w;
  for (int i = n; i >= 2; --i) {
    // c_i = s_j ... s_{i-1} sends i to j, and the remaining factor fixes i
    int j = cur(i);
    chain.push_back(j);
    for (int k = j; k <= i - 1; ++k) cur = cur.left_mul_simple(k);
  }
  return chain;
}

std::vector<Permutation> coset_representatives(int n) {
  std::vector<Permutation> reps;
  for (int j = n; j >= 1; --j) {
    std::vector<int> letters;
    for (int k = j; k <= n - 1; ++k) letters.push_back(k);
    reps.push_back(evaluate_word(n, letters));
  }
  return reps;
}

namespace {

std::vector<int> compute_canonical(const Permutation& w) {
  const int n = w.n();
  std::vector<int> letters;
  auto chain = coset_chain(w);
  for (int idx = 0; idx < static_cast<int>(chain.size()); ++idx) {
    int i = n - idx;
    for (int k = chain[idx]; k <= i - 1; ++k) letters.push_back(k);
  }
  return letters;
}

}  // namespace

const std::vector<int>& canonical_letters(const Permutation& w) {
  static std::mutex mu;
  static std::map<Permutation, std::vector<int>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(w);
  if (it != cache.end()) return it->second;
  return cache.emplace(w, compute_canonical(w)).first->second;
}

ReducedWord canonical_reduced_word(const Permutation& w) {
  return ReducedWord(w.n(), canonical_letters(w));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  std::stable_sort(out.begin(), out.end(), LengthLexLess{});
  return out;
}

Laurent poincare_polynomial(int n) {
  if (n < 1) throw MathError("rank must be positive");
  Laurent p;
  for (const auto& w : all_permutations(n)) p.add_term(w.length(), 1);
  return p;
}

Laurent poincare_product_formula(int n) {
  if (n < 1) throw MathError("rank must be positive");
  // (1-q^k)/(1-q) = 1 + q + ... + q^{k-1}
  Laurent p(1);
  for (int k = 1; k <= n; ++k) {
    Laurent f;
    for (int e = 0; e < k; ++e) f.add_term(e, 1);
    p = p * f;
  }
  return p;
}

}  // namespace qh
