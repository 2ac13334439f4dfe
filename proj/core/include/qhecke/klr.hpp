#pragma once

#include "qhecke/coxeter.hpp"
#include "qhecke/polyring.hpp"
#include "qhecke/quiver.hpp"

#include <map>
#include <optional>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

namespace qh {

using Colours = std::vector<int>;
// (source idempotent, permutation whose canonical word labels the tau part)
using KLRKey = std::pair<Colours, Permutation>;

// Sum of tau_w P 1_v with tau_w along the canonical reduced word of w and
// the polynomial P in x_1..x_n on the right.
class KLRElement {
 public:
  explicit KLRElement(int n = 1) : n_(n) {}

  int n() const { return n_; }
  const std::map<KLRKey, MPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  MPoly coeff(const KLRKey& k) const;
  void add_term(const Colours& v, const Permutation& w, const MPoly& p);

  KLRElement& operator+=(const KLRElement& o);
  KLRElement& operator-=(const KLRElement& o);
  friend KLRElement operator+(KLRElement a, const KLRElement& b) { return a += b; }
  friend KLRElement operator-(KLRElement a, const KLRElement& b) { return a -= b; }
  friend bool operator==(const KLRElement& a, const KLRElement& b) { return a.terms_ == b.terms_; }
  // right multiplication by a polynomial (commutes past 1_v)
  KLRElement times_poly(const MPoly& p) const;

  // "coef * tau[word] x[a1,...,an] e(v)" terms joined by " + "
  std::string str() const;

 private:
  int n_;
  std::map<KLRKey, MPoly> terms_;
};

// tau_{l_1} ... tau_{l_r} P 1_v with an arbitrary (not necessarily reduced) word
struct WordTerm {
  std::vector<int> letters;
  MPoly poly;
};

class KLRAlgebra {
 public:
  KLRAlgebra(QuiverData quiver, int n);

  const QuiverData& quiver() const { return quiver_; }
  int n() const { return n_; }
  std::vector<Colours> idempotents() const { return all_sequences(quiver_.vertices(), n_); }

  KLRElement idempotent(const Colours& v) const;
  KLRElement x(int a, const Colours& v) const;
  KLRElement tau(int i, const Colours& v) const;
  KLRElement basis_element(const Colours& v, const Permutation& w, const Monomial& m) const;
  // normal form of tau_{letters} P 1_v
  KLRElement word(const std::vector<int>& letters, const MPoly& p, const Colours& v) const;
  KLRElement poly(const MPoly& p, const Colours& v) const { return word({}, p, v); }

  KLRElement multiply(const KLRElement& a, const KLRElement& b) const;
  // P tau_{letters} 1_v rewritten as a sum of tau_{subword} R 1_v
  std::vector<WordTerm> push_right(const MPoly& p, const std::vector<int>& letters, const Colours& v) const;

  Colours target(const KLRKey& k) const { return act_on_sequence(k.second, k.first); }
  // deg x = 2, deg tau_{i,v} = -a_{v_i v_{i+1}}
  int tau_degree(const std::vector<int>& letters, const Colours& v) const;
  std::optional<int> degree(const KLRElement& e) const;

  // braid correction for the triple at i when y_i = y_{i+2} != y_{i+1}, else zero
  MPoly braid_correction(int i, const Colours& y) const;

  // Polynomial representation, computed directly on polynomials.
  MPoly act_tau(int i, const Colours& v, const MPoly& f) const;
  // image of f in M_{target} under tau_w P 1_v
  MPoly act_term(const KLRKey& k, const MPoly& p, const MPoly& f) const;
  // the action on a vector of components
  std::map<Colours, MPoly> act(const KLRElement& e, const std::map<Colours, MPoly>& f) const;

  // (v, w) for every w
  std::vector<KLRKey> keys_from(const Colours& v) const;

 private:
  using Comb = std::map<Permutation, MPoly>;

  QuiverData quiver_;
  int n_;

  mutable std::mutex mu_;
  mutable std::map<std::pair<std::vector<int>, Colours>, Comb> normal_cache_;
  mutable std::map<std::pair<std::pair<int, Permutation>, Colours>, Comb> left_cache_;

  Comb normalize(const std::vector<int>& letters, const Colours& v) const;
  Comb left_tau(int i, const Permutation& u, const Colours& v) const;
  // tau_{from} 1_v - tau_{to} 1_v as a normal form, both words reduced for the same element
  Comb rewrite_difference(const std::vector<int>& from, const std::vector<int>& to, const Colours& v) const;
  Comb normalize_terms(const std::vector<WordTerm>& terms, const Colours& v) const;
};

// Braid/commutation moves between reduced words.
struct BraidMove {
  int pos;     // first index of the moved block
  bool braid;  // three-letter braid if true, two-letter commutation otherwise
};
std::vector<int> apply_move(std::vector<int> word, const BraidMove& m);
// shortest sequence of moves turning `from` into `to`; throws if none exists
std::vector<BraidMove> braid_path(const std::vector<int>& from, const std::vector<int>& to);
// shortest sequence of moves reaching a word that starts with letter i
std::vector<BraidMove> braid_path_to_prefix(const std::vector<int>& from, int i);

}  // namespace qh
