#pragma once

#include "qhecke/numeric.hpp"

#include <map>
#include <string>

namespace qh {

// Laurent polynomial in one variable with integer coefficients.
class Laurent {
 public:
  Laurent() = default;
  explicit Laurent(const Integer& c) { add_term(0, c); }
  static Laurent monomial(int e, const Integer& c = 1) {
    Laurent l;
    l.add_term(e, c);
    return l;
  }

  void add_term(int e, const Integer& c);
  Integer coeff(int e) const;
  const std::map<int, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int min_exponent() const;
  int max_exponent() const;

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }

  // x -> x^{-1}
  Laurent inverted() const;
  // x -> x^k
  Laurent dilated(int k) const;
  // value at x = 1
  Integer at_one() const;

  // "3*v^-2 + 1 + v^2"; var names the variable
  std::string str(const std::string& var = "v") const;

 private:
  std::map<int, Integer> terms_;
};

// grdim(M) = sum_i v^i dim M_i with v = q^{1/2}
using GradedDim = Laurent;

// Truncated power series arithmetic on the non-negative part, used for
// Hilbert series comparisons up to a cutoff.
Laurent truncate_above(const Laurent& a, int max_exp);
// 1/(1 - x^k) expanded up to x^cutoff
Laurent geometric_series(int k, int cutoff);

}  // namespace qh
