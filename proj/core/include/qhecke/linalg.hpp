#pragma once

#include "qhecke/coxeter.hpp"
#include "qhecke/numeric.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace qh {

__extension__ typedef unsigned __int128 u128;

// Arithmetic modulo the Mersenne prime 2^61 - 1.
class Fp {
 public:
  static constexpr std::uint64_t kModulus = (1ULL << 61) - 1;

  Fp() = default;
  Fp(long long v) : v_(from_signed(v)) {}  // NOLINT
  explicit Fp(const Integer& v);

  std::uint64_t value() const { return v_; }
  Fp inverse() const;
  Fp pow(std::uint64_t e) const;

  friend Fp operator+(Fp a, Fp b) { return raw(reduce(a.v_ + b.v_)); }
  friend Fp operator-(Fp a, Fp b) { return raw(reduce(a.v_ + kModulus - b.v_)); }
  friend Fp operator-(Fp a) { return raw(a.v_ ? kModulus - a.v_ : 0); }
  friend Fp operator*(Fp a, Fp b) {
    u128 p = static_cast<u128>(a.v_) * b.v_;
    std::uint64_t lo = static_cast<std::uint64_t>(p & kModulus);
    std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
    return raw(reduce(lo + hi));
  }
  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
  Fp& operator+=(Fp b) { return *this = *this + b; }
  Fp& operator-=(Fp b) { return *this = *this - b; }
  Fp& operator*=(Fp b) { return *this = *this * b; }
  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
  friend bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }

 private:
  std::uint64_t v_ = 0;
  static Fp raw(std::uint64_t v) {
    Fp f;
    f.v_ = v;
    return f;
  }
  static std::uint64_t reduce(std::uint64_t x) {
    x = (x & kModulus) + (x >> 61);
    return x >= kModulus ? x - kModulus : x;
  }
  static std::uint64_t from_signed(long long v) {
    if (v >= 0) return reduce(static_cast<std::uint64_t>(v));
    std::uint64_t m = reduce(static_cast<std::uint64_t>(-(v + 1)) + 1);
    return m ? kModulus - m : 0;
  }
};

inline bool is_zero(Fp a) { return a.value() == 0; }

// Row echelon form built one sparse vector at a time.
template <class F>
class SparseEchelon {
 public:
  using Vec = std::map<int, F>;

  // reduces v against the stored rows; returns the residual
  Vec reduce(Vec v) const {
    auto it = v.begin();
    while (it != v.end()) {
      auto row = rows_.find(it->first);
      if (row == rows_.end()) {
        ++it;
        continue;
      }
      F factor = it->second;
      int key = it->first;
      for (const auto& [k, c] : row->second) {
        F nv = v[k] - factor * c;
        if (is_zero(nv))
          v.erase(k);
        else
          v[k] = nv;
      }
      it = v.upper_bound(key);
    }
    return v;
  }

  // returns true when v was independent of the stored rows
  bool insert(Vec v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    F lead = v.begin()->second;
    F inv = F(1) / lead;
    for (auto& [k, c] : v) c = c * inv;
    int pivot = v.begin()->first;
    rows_.emplace(pivot, std::move(v));
    return true;
  }

  bool contains(const Vec& v) const { return reduce(v).empty(); }
  std::size_t rank() const { return rows_.size(); }

 private:
  std::map<int, Vec> rows_;
};

std::size_t rank_mod_p(std::vector<std::vector<Fp>> m);
std::size_t rank_rational(std::vector<std::vector<Rational>> m);
Integer determinant_bareiss(std::vector<std::vector<Integer>> m);

// Leibniz expansion over any commutative ring; intended for size <= 7.
template <class R>
R determinant_leibniz(const std::vector<std::vector<R>>& m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return R(1);
  R total(0);
  for (const auto& w : all_permutations(n)) {
    R prod(w.sign());
    for (int i = 0; i < n && !is_zero(prod); ++i) prod = prod * m[i][w(i + 1) - 1];
    total = total + prod;
  }
  return total;
}

}  // namespace qh
