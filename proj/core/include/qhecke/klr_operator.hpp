#pragma once

#include "qhecke/klr.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qh {

// f -> Delta^{-k} * sum_u N_u * u(f), Delta = prod_{i<j} (x_i - x_j)
struct OperatorComponent {
  int k = 0;
  std::map<Permutation, MPoly> numerators;

  bool is_zero() const { return numerators.empty(); }
  MPoly apply(const MPoly& f) const;
  // same operator written over Delta^{k'} with k' >= k
  OperatorComponent raised(int kprime) const;
  // strip common factors of Delta
  void reduce();
};

// Linear map between the modules M_v, one component per (source, target) pair.
class KLROperator {
 public:
  explicit KLROperator(int n = 1) : n_(n) {}

  int n() const { return n_; }
  const std::map<std::pair<Colours, Colours>, OperatorComponent>& components() const { return comps_; }
  bool is_zero() const { return comps_.empty(); }

  void add(const Colours& src, const Colours& dst, const OperatorComponent& c);
  KLROperator& operator+=(const KLROperator& o);
  KLROperator& operator-=(const KLROperator& o);
  friend KLROperator operator+(KLROperator a, const KLROperator& b) { return a += b; }
  friend KLROperator operator-(KLROperator a, const KLROperator& b) { return a -= b; }
  friend bool operator==(const KLROperator& a, const KLROperator& b);
  // (a * b)(f) = a(b(f))
  friend KLROperator operator*(const KLROperator& a, const KLROperator& b);

  std::map<Colours, MPoly> apply(const std::map<Colours, MPoly>& f) const;

 private:
  int n_;
  std::map<std::pair<Colours, Colours>, OperatorComponent> comps_;
};

MPoly vandermonde(int n);

KLROperator represent(const KLRAlgebra& A, const KLRElement& a);
// Throws MathError("not in image") when op is not the image of an element.
KLRElement pbw_coordinates(const KLRAlgebra& A, const KLROperator& op);

struct PBWIndependence {
  std::size_t words = 0;
  std::size_t rank = 0;
  bool independent() const { return rank == words; }
};
// images of all tau_w x^a 1_v with exponent sum <= max_exp
PBWIndependence pbw_independence(const KLRAlgebra& A, int max_exp);

}  // namespace qh
