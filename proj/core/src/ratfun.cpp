#include "qhecke/ratfun.hpp"

#include <sstream>

namespace qh {

namespace {

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int deg(const IntPoly& p) { return static_cast<int>(p.size()) - 1; }

IntPoly add(const IntPoly& a, const IntPoly& b, int sign = 1) {
  IntPoly r(std::max(a.size(), b.size()));
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k];
  for (std::size_t k = 0; k < b.size(); ++k) r[k] += sign * b[k];
  trim(r);
  return r;
}

IntPoly mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

Integer content(const IntPoly& p) {
  Integer g = 0;
  for (const auto& c : p) g = gcd(g, c);
  return g;
}

IntPoly divide_scalar(IntPoly p, const Integer& c) {
  for (auto& x : p) x /= c;
  return p;
}

IntPoly primitive(const IntPoly& p) {
  if (p.empty()) return p;
  IntPoly r = divide_scalar(p, content(p));
  if (r.back() < 0)
    for (auto& x : r) x = -x;
  return r;
}

// a = q*b exactly over the integers, or throws
IntPoly exact_div(IntPoly a, const IntPoly& b) {
  if (b.empty()) throw MathError("division by the zero polynomial");
  if (a.empty()) return {};
  if (deg(a) < deg(b)) throw MathError("inexact polynomial division");
  IntPoly quo(a.size() - b.size() + 1);
  for (int k = deg(a) - deg(b); k >= 0; --k) {
    const Integer& top = a[k + deg(b)];
    if (top % b.back() != 0) throw MathError("inexact polynomial division");
    Integer c = top / b.back();
    quo[k] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= c * b[j];
  }
  trim(a);
  if (!a.empty()) throw MathError("inexact polynomial division");
  trim(quo);
  return quo;
}

// pseudo-remainder of a by b
IntPoly prem(IntPoly a, const IntPoly& b) {
  while (!a.empty() && deg(a) >= deg(b)) {
    const Integer lead = a.back();
    const int shift = deg(a) - deg(b);
    for (auto& x : a) x *= b.back();
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= lead * b[j];
    trim(a);
    a = primitive(a);
  }
  return a;
}

}  // namespace

IntPoly poly_gcd(IntPoly a, IntPoly b) {
  trim(a);
  trim(b);
  if (a.empty()) return primitive(b);
  if (b.empty()) return primitive(a);
  a = primitive(a);
  b = primitive(b);
  if (deg(a) < deg(b)) std::swap(a, b);
  while (!b.empty()) {
    IntPoly r = prem(a, b);
    a = std::move(b);
    b = primitive(r);
  }
  return primitive(a);
}

RatFun::RatFun(const Integer& c) : den_{1} {
  if (c != 0) num_ = {c};
}

RatFun::RatFun(const Rational& c) : RatFun(IntPoly{numerator(c)}, IntPoly{denominator(c)}) {}

RatFun::RatFun(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
  trim(num_);
  trim(den_);
  if (den_.empty()) throw MathError("rational function with zero denominator");
  normalize();
}

void RatFun::normalize() {
  if (num_.empty()) {
    den_ = {1};
    return;
  }
  if (deg(den_) > 0) {
    IntPoly g = poly_gcd(num_, den_);
    if (deg(g) > 0) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
  }
  Integer c = gcd(content(num_), content(den_));
  if (den_.back() < 0) c = -c;
  num_ = divide_scalar(num_, c);
  den_ = divide_scalar(den_, c);
}

RatFun RatFun::inverse() const {
  if (num_.empty()) throw MathError("inverse of zero");
  return RatFun(den_, num_);
}

RatFun RatFun::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  RatFun r(1), b = *this;
  while (k > 0) {
    if (k & 1) r *= b;
    k >>= 1;
    if (k) b *= b;
  }
  return r;
}

Rational RatFun::evaluate(const Rational& at) const {
  auto ev = [&](const IntPoly& p) {
    Rational s = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) s = s * at + Rational(*it);
    return s;
  };
  const Rational d = ev(den_);
  if (d == 0) throw MathError("evaluation at a pole");
  return ev(num_) / d;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
  if (a.den_ == b.den_) return RatFun(add(a.num_, b.num_), a.den_);
  return RatFun(add(mul(a.num_, b.den_), mul(b.num_, a.den_)), mul(a.den_, b.den_));
}

RatFun operator-(const RatFun& a, const RatFun& b) {
  if (a.den_ == b.den_) return RatFun(add(a.num_, b.num_, -1), a.den_);
  return RatFun(add(mul(a.num_, b.den_), mul(b.num_, a.den_), -1), mul(a.den_, b.den_));
}

RatFun operator-(const RatFun& a) {
  RatFun r = a;
  for (auto& c : r.num_) c = -c;
  return r;
}

RatFun operator*(const RatFun& a, const RatFun& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return RatFun(mul(a.num_, b.num_), mul(a.den_, b.den_));
}

bool operator<(const RatFun& a, const RatFun& b) {
  if (a.num_ != b.num_) return a.num_ < b.num_;
  return a.den_ < b.den_;
}

std::string poly_str(const IntPoly& p, const std::string& var) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = deg(p); k >= 0; --k) {
    const Integer& c = p[k];
    if (c == 0) continue;
    const Integer a = abs(c);
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    if (k == 0 || a != 1) os << a << (k ? "*" : "");
    if (k) os << var << (k > 1 ? "^" + std::to_string(k) : "");
  }
  return os.str();
}

std::string RatFun::str() const {
  if (den_ == IntPoly{1}) return poly_str(num_);
  auto wrap = [](const IntPoly& p) {
    std::string s = poly_str(p);
    return s.find_first_of(" *") == std::string::npos ? s : "(" + s + ")";
  };
  return wrap(num_) + "/" + wrap(den_);
}

}  // namespace qh
