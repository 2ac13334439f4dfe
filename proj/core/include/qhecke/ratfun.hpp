#pragma once

#include "qhecke/numeric.hpp"

#include <string>
#include <vector>

namespace qh {

// Dense univariate polynomial over the integers, coefficients from degree 0 up.
using IntPoly = std::vector<Integer>;

// Rational function in a formal variable q, stored as num/den with
// gcd(num, den) = 1, integer content 1 overall and positive leading coefficient of den.
class RatFun {
 public:
  RatFun() : den_{1} {}
  RatFun(int c) : RatFun(Integer(c)) {}  // NOLINT
  RatFun(const Integer& c);               // NOLINT
  RatFun(const Rational& c);              // NOLINT
  RatFun(IntPoly num, IntPoly den);

  static RatFun q() { return RatFun(IntPoly{0, 1}, IntPoly{1}); }

  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }
  bool is_zero() const { return num_.empty(); }
  RatFun inverse() const;
  RatFun pow(int k) const;
  // value at a rational point; throws MathError at a pole
  Rational evaluate(const Rational& at) const;

  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b) { return a * b.inverse(); }
  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
  friend bool operator==(const RatFun& a, const RatFun& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }
  // arbitrary total order, for use as map keys
  friend bool operator<(const RatFun& a, const RatFun& b);

  // "(q^2 - 1)/(2*q)", "3", "-q"
  std::string str() const;

 private:
  IntPoly num_, den_;
  void normalize();
};

inline bool is_zero(const RatFun& a) { return a.is_zero(); }
inline std::string to_string(const RatFun& a) { return a.str(); }

// polynomial helpers, exposed for tests
IntPoly poly_gcd(IntPoly a, IntPoly b);
std::string poly_str(const IntPoly& p, const std::string& var = "q");

}  // namespace qh
