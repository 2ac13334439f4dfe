#pragma once

#include "qhecke/coxeter.hpp"
#include "qhecke/numeric.hpp"
#include "qhecke/ratfun.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace qh {

inline constexpr int kMaxVars = 16;

struct Monomial {
  std::array<std::uint8_t, kMaxVars> e{};
  std::uint16_t deg = 0;

  static Monomial one() { return {}; }
  static Monomial var(int i, int k = 1) {
    Monomial m;
    m.set(i, k);
    return m;
  }
  int operator[](int i) const { return e[i]; }
  void set(int i, int k) {
    if (i < 0 || i >= kMaxVars) throw MathError("variable index out of range");
    if (k < 0 || k > 255) throw MathError("exponent out of range");
    deg = static_cast<std::uint16_t>(deg - e[i] + k);
    e[i] = static_cast<std::uint8_t>(k);
  }
  int support() const {
    int s = 0;
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i]) s = i + 1;
    return s;
  }
  bool divides(const Monomial& o) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }
  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) {
      int s = a.e[i] + b.e[i];
      if (s > 255) throw MathError("exponent overflow");
      r.e[i] = static_cast<std::uint8_t>(s);
    }
    r.deg = static_cast<std::uint16_t>(a.deg + b.deg);
    return r;
  }
  // requires b | a
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint8_t>(a.e[i] - b.e[i]);
    r.deg = static_cast<std::uint16_t>(a.deg - b.deg);
    return r;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e != b.e; }
  // graded lexicographic, X_1 > X_2 > ...
  friend bool operator<(const Monomial& a, const Monomial& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    return a.e < b.e;
  }
  std::size_t hash() const {
    std::size_t h = 1469598103934665603ULL;
    for (auto x : e) h = (h ^ x) * 1099511628211ULL;
    return h;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// Sparse polynomial with coefficients in R. Terms are kept sorted in
// decreasing graded lexicographic order with no zero coefficients.
template <class R>
class Poly {
 public:
  using Coeff = R;
  using Term = std::pair<Monomial, R>;

  Poly() = default;
  Poly(const R& c) {  // NOLINT implicit constant
    if (!qh::is_zero(c)) terms_.emplace_back(Monomial::one(), c);
  }
  Poly(int c) : Poly(R(c)) {}  // NOLINT

  static Poly var(int i, const R& c = R(1)) { return term(Monomial::var(i - 1), c); }
  static Poly term(const Monomial& m, const R& c) {
    Poly p;
    if (!qh::is_zero(c)) p.terms_.emplace_back(m, c);
    return p;
  }
  // builds from unsorted terms, combining duplicates
  static Poly from_terms(std::vector<Term> t) {
    Poly p;
    p.terms_ = std::move(t);
    p.normalize();
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.deg == 0); }
  R constant_term() const {
    if (!terms_.empty() && terms_.back().first.deg == 0) return terms_.back().second;
    return R(0);
  }
  R coeff(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& k) { return k < t.first; });
    if (it != terms_.end() && it->first == m) return it->second;
    return R(0);
  }
  // total exponent; -1 for zero
  int degree() const { return terms_.empty() ? -1 : terms_.front().first.deg; }
  int min_degree() const {
    int d = -1;
    for (const auto& t : terms_)
      if (d < 0 || t.first.deg < d) d = t.first.deg;
    return d;
  }
  int degree_in(int i) const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, int(t.first[i - 1]));
    return d;
  }
  bool is_homogeneous() const {
    for (const auto& t : terms_)
      if (t.first.deg != terms_.front().first.deg) return false;
    return true;
  }
  // highest variable index occurring
  int support() const {
    int s = 0;
    for (const auto& t : terms_) s = std::max(s, t.first.support());
    return s;
  }
  Poly homogeneous_part(int d) const {
    Poly p;
    for (const auto& t : terms_)
      if (t.first.deg == d) p.terms_.push_back(t);
    return p;
  }

  Poly& operator+=(const Poly& o) { return *this = merge(*this, o, false); }
  Poly& operator-=(const Poly& o) { return *this = merge(*this, o, true); }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend Poly operator+(const Poly& a, const Poly& b) { return merge(a, b, false); }
  friend Poly operator-(const Poly& a, const Poly& b) { return merge(a, b, true); }
  friend Poly operator-(Poly a) {
    for (auto& t : a.terms_) t.second = -t.second;
    return a;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (b.is_constant()) return a.scaled(b.terms_[0].second);
    if (a.is_constant()) return b.scaled(a.terms_[0].second);
    std::vector<Term> out;
    out.reserve(a.size() * b.size());
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.emplace_back(ma * mb, ca * cb);
    return from_terms(std::move(out));
  }
  Poly scaled(const R& c) const {
    if (qh::is_zero(c)) return {};
    Poly p = *this;
    for (auto& t : p.terms_) t.second = t.second * c;
    p.drop_zeros();
    return p;
  }
  Poly times_monomial(const Monomial& m, const R& c = R(1)) const {
    Poly p = *this;
    for (auto& t : p.terms_) {
      t.first = t.first * m;
      t.second = t.second * c;
    }
    p.drop_zeros();
    return p;
  }
  Poly pow(int k) const {
    Poly r(R(1)), b = *this;
    while (k > 0) {
      if (k & 1) r *= b;
      k >>= 1;
      if (k) b *= b;
    }
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
  // total order used for map keys
  friend bool operator<(const Poly& a, const Poly& b) {
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t k = 0; k < n; ++k) {
      const auto& ta = a.terms_[k];
      const auto& tb = b.terms_[k];
      if (ta.first != tb.first) return tb.first < ta.first;
      if (ta.second != tb.second) return ta.second < tb.second;
    }
    return a.size() < b.size();
  }

  // X_i -> X_{w(i)} for i <= w.n()
  Poly act(const Permutation& w) const {
    Poly p;
    p.terms_.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
      Monomial r = m;
      for (int i = 1; i <= w.n(); ++i) r.e[w(i) - 1] = m.e[i - 1];
      p.terms_.emplace_back(r, c);
    }
    p.normalize();
    return p;
  }
  // exchange X_i and X_j
  Poly swapped(int i, int j) const {
    Poly p;
    p.terms_.reserve(terms_.size());
    for (auto [m, c] : terms_) {
      std::swap(m.e[i - 1], m.e[j - 1]);
      p.terms_.emplace_back(m, c);
    }
    p.normalize();
    return p;
  }

  // Exact quotient by X_a - X_b, or nullopt when the remainder is nonzero.
  std::optional<Poly> try_divide_linear(int a, int b) const {
    // write P = sum_k c_k X_a^k and divide by the monic (X_a - X_b)
    std::map<int, std::vector<Term>> slices;
    int top = 0;
    for (auto [m, c] : terms_) {
      int k = m[a - 1];
      m.set(a - 1, 0);
      slices[k].emplace_back(m, c);
      top = std::max(top, k);
    }
    if (terms_.empty()) return Poly{};
    std::vector<Poly> c(top + 1);
    for (auto& [k, ts] : slices) c[k] = from_terms(std::move(ts));
    Poly xb = var(b);
    // q_{k-1} = c_k + X_b q_k
    Poly carry, quotient;
    for (int k = top; k >= 1; --k) {
      carry = c[k] + xb * carry;
      if (!carry.is_zero()) quotient += carry.times_monomial(Monomial::var(a - 1, k - 1));
    }
    Poly rem = c[0] + xb * carry;
    if (!rem.is_zero()) return std::nullopt;
    return quotient;
  }
  Poly divide_linear(int a, int b) const {
    auto q = try_divide_linear(a, b);
    if (!q) throw MathError("inexact division by linear form");
    return *q;
  }
  // Exact quotient by a monomial times constant; nullopt when not exact.
  std::optional<Poly> try_divide_monomial(const Monomial& m) const {
    Poly p;
    for (const auto& [mm, c] : terms_) {
      if (!m.divides(mm)) return std::nullopt;
      p.terms_.emplace_back(mm / m, c);
    }
    return p;
  }

  // Substitute X_i -> images[i-1] (variables beyond images are kept).
  Poly substitute(const std::vector<Poly>& images) const {
    Poly out;
    std::vector<std::vector<Poly>> powers(images.size());
    for (const auto& [m, c] : terms_) {
      Poly t(c);
      Monomial rest = m;
      for (std::size_t i = 0; i < images.size() && i < kMaxVars; ++i) {
        int k = m[static_cast<int>(i)];
        if (!k) continue;
        auto& pw = powers[i];
        if (pw.empty()) pw.push_back(Poly(R(1)));
        while (static_cast<int>(pw.size()) <= k) pw.push_back(pw.back() * images[i]);
        t *= pw[k];
        rest.set(static_cast<int>(i), 0);
      }
      out += t.times_monomial(rest);
    }
    return out;
  }

  template <class V>
  V evaluate(const std::vector<V>& point) const {
    V s(0);
    for (const auto& [m, c] : terms_) {
      V t = V(c);
      for (int i = 0; i < kMaxVars; ++i)
        for (int k = 0; k < m[i]; ++k) t *= point.at(i);
      s += t;
    }
    return s;
  }

  template <class F>
  auto map_coeffs(F f) const {
    using S = decltype(f(std::declval<R>()));
    std::vector<typename Poly<S>::Term> out;
    for (const auto& [m, c] : terms_) out.emplace_back(m, f(c));
    return Poly<S>::from_terms(std::move(out));
  }

  // "3*X1^2*X2 - X3 + 1"; names[i] labels variable i+1
  std::string str(const std::vector<std::string>& names = {}) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      std::string cs = coeff_string(c);
      bool neg = !cs.empty() && cs[0] == '-' && cs.find_first_of("+-", 1) == std::string::npos;
      if (neg) cs = cs.substr(1);
      if (cs.find_first_of("+- ", 0) != std::string::npos) cs = "(" + cs + ")";
      os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
      first = false;
      bool mono = m.deg > 0;
      if (!mono || cs != "1") {
        os << cs;
        if (mono) os << "*";
      }
      bool firstvar = true;
      for (int i = 0; i < kMaxVars; ++i) {
        if (!m[i]) continue;
        if (!firstvar) os << "*";
        firstvar = false;
        os << (i < static_cast<int>(names.size()) ? names[i] : "X" + std::to_string(i + 1));
        if (m[i] > 1) os << "^" << int(m[i]);
      }
    }
    return os.str();
  }

 private:
  std::vector<Term> terms_;

  static std::string coeff_string(const R& c) {
    using qh::to_string;
    return to_string(c);
  }
  void drop_zeros() {
    terms_.erase(std::remove_if(terms_.begin(), terms_.end(), [](const Term& t) { return qh::is_zero(t.second); }),
                 terms_.end());
  }
  void normalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& x, const Term& y) { return y.first < x.first; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().first == t.first)
        out.back().second = out.back().second + t.second;
      else
        out.push_back(std::move(t));
    }
    terms_ = std::move(out);
    drop_zeros();
  }
  static Poly merge(const Poly& a, const Poly& b, bool subtract) {
    Poly r;
    r.terms_.reserve(a.size() + b.size());
    auto i = a.terms_.begin(), j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
      if (j == b.terms_.end() || (i != a.terms_.end() && j->first < i->first)) {
        r.terms_.push_back(*i++);
      } else if (i == a.terms_.end() || i->first < j->first) {
        r.terms_.emplace_back(j->first, subtract ? R(-j->second) : j->second);
        ++j;
      } else {
        R c = subtract ? R(i->second - j->second) : R(i->second + j->second);
        if (!qh::is_zero(c)) r.terms_.emplace_back(i->first, c);
        ++i, ++j;
      }
    }
    return r;
  }
};

using MPoly = Poly<Integer>;
using QPoly = Poly<Rational>;

template <class R>
bool is_zero(const Poly<R>& p) {
  return p.is_zero();
}

template <class R>
std::string to_string(const Poly<R>& p) {
  return p.str();
}

inline QPoly to_rational(const MPoly& p) {
  return p.map_coeffs([](const Integer& c) { return Rational(c); });
}

// Variable names X1..Xn followed by extra parameter names.
std::vector<std::string> variable_names(int n, const std::vector<std::string>& params = {});

}  // namespace qh
