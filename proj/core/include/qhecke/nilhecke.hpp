#pragma once

#include "qhecke/coxeter.hpp"
#include "qhecke/laurent.hpp"
#include "qhecke/polyring.hpp"

#include <map>
#include <string>

namespace qh {

// sum_w P_w T_w in the nil affine Hecke algebra, polynomials on the left.
class NilHeckeElement {
 public:
  explicit NilHeckeElement(int n = 1) : n_(n) {}

  static NilHeckeElement one(int n) { return poly(n, MPoly(1)); }
  static NilHeckeElement poly(int n, const MPoly& p);
  static NilHeckeElement T(const Permutation& w, const MPoly& p = MPoly(1));
  static NilHeckeElement T(int n, int i) { return T(Permutation::simple(n, i)); }
  static NilHeckeElement X(int n, int i) { return poly(n, MPoly::var(i)); }

  int n() const { return n_; }
  const std::map<Permutation, MPoly>& terms() const { return terms_; }
  MPoly coeff(const Permutation& w) const;
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Permutation& w, const MPoly& p);

  NilHeckeElement& operator+=(const NilHeckeElement& o);
  NilHeckeElement& operator-=(const NilHeckeElement& o);
  friend NilHeckeElement operator+(NilHeckeElement a, const NilHeckeElement& b) { return a += b; }
  friend NilHeckeElement operator-(NilHeckeElement a, const NilHeckeElement& b) { return a -= b; }
  friend NilHeckeElement operator*(const NilHeckeElement& a, const NilHeckeElement& b);
  NilHeckeElement scaled(const MPoly& p) const;
  friend bool operator==(const NilHeckeElement& a, const NilHeckeElement& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  // homogeneous degree with deg X_i = 2, deg T_i = -2; nullopt if mixed
  std::optional<int> degree() const;
  std::string str() const;

 private:
  int n_;
  std::map<Permutation, MPoly> terms_;
};

NilHeckeElement multiply(const NilHeckeElement& a, const NilHeckeElement& b);
// T_w * P in PBW form
NilHeckeElement T_times_poly(const Permutation& w, const MPoly& p);

// action on P_n with T_i acting by d_i
MPoly apply_to_polynomial(const NilHeckeElement& a, const MPoly& p);

// T_{w[1,n]} X_2 X_3^2 ... X_n^{n-1}
NilHeckeElement b_n(int n);

long long trace_t0(const NilHeckeElement& a);
MPoly trace_t(const NilHeckeElement& a);
MPoly trace_tprime(const NilHeckeElement& a);

// image of w in the nil affine Hecke algebra via s_i -> (X_i - X_{i+1})T_i + 1
NilHeckeElement group_element(const Permutation& w);

NilHeckeElement nakayama_gamma(const NilHeckeElement& a);
// T_w -> T_{w0 w w0} on the finite nil Hecke algebra
NilHeckeElement nakayama_sigma(const NilHeckeElement& a);

// sum_w T_w R_w with polynomials on the right
using RightForm = std::map<Permutation, MPoly>;
RightForm to_right_form(const NilHeckeElement& a);
NilHeckeElement from_right_form(int n, const RightForm& r);

// All X^a T_w with exponent sum <= max_exp.
std::vector<NilHeckeElement> pbw_basis(int n, int max_exp);

// Graded dimension of the PBW basis, in powers of q (deg X = 1, deg T = -1),
// against grdim(P_n^{S_n}) times the graded rank P(q)P(q^{-1}); both cut at
// q^cutoff. Returns the graded rank, whose value at 1 is (n!)^2.
struct RankBookkeeping {
  Laurent enumerated;
  Laurent predicted;
  Laurent graded_rank;
  bool matches = false;
};
RankBookkeeping rank_bookkeeping(int n, int cutoff);

}  // namespace qh
