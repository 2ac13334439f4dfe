#include "qhecke/finite_field.hpp"

#include "qhecke/numeric.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace qh {

FiniteField::FiniteField(int q) : q_(q) {
  if (q != 2 && q != 3 && q != 4 && q != 5) throw UsageError("unsupported field size " + std::to_string(q));
  add_.assign(q * q, 0);
  mul_.assign(q * q, 0);
  neg_.assign(q, 0);
  inv_.assign(q, 0);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      if (q == 4) {
        add_[a * q + b] = a ^ b;
        // carry-less product reduced by t^2 = t + 1
        int p = 0;
        for (int k = 0; k < 2; ++k)
          if (b >> k & 1) p ^= a << k;
        if (p & 4) p ^= 0b111;
        mul_[a * q + b] = p;
      } else {
        add_[a * q + b] = (a + b) % q;
        mul_[a * q + b] = (a * b) % q;
      }
    }
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      if (add(a, b) == 0) neg_[a] = b;
      if (mul(a, b) == 1) inv_[a] = b;
    }
  for (int g = 1; g < q; ++g) {
    int order = 1;
    for (int x = g; x != 1; x = mul(x, g)) ++order;
    if (order == q - 1) {
      primitive_ = g;
      break;
    }
  }
}

int FiniteField::inv(int a) const {
  if (a == 0) throw MathError("inverse of zero in a finite field");
  return inv_[a];
}

FqMatrix FqMatrix::identity(int n) {
  FqMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool FqMatrix::is_zero() const {
  for (auto x : e)
    if (x) return false;
  return true;
}

std::string FqMatrix::str() const {
  std::ostringstream os;
  os << '[';
  for (int r = 0; r < rows; ++r) {
    if (r) os << ';';
    for (int c = 0; c < cols; ++c) os << (c ? " " : "") << int(at(r, c));
  }
  os << ']';
  return os.str();
}

FqMatrix mul(const FiniteField& F, const FqMatrix& a, const FqMatrix& b) {
  if (a.cols != b.rows) throw MathError("matrix shape mismatch");
  FqMatrix r(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k)
      if (a.at(i, k))
        for (int j = 0; j < b.cols; ++j) r.at(i, j) = F.add(r.at(i, j), F.mul(a.at(i, k), b.at(k, j)));
  return r;
}

namespace {

// reduced row echelon form in place; returns pivot columns
std::vector<int> rref(const FiniteField& F, FqMatrix& a) {
  std::vector<int> pivots;
  int row = 0;
  for (int c = 0; c < a.cols && row < a.rows; ++c) {
    int p = row;
    while (p < a.rows && !a.at(p, c)) ++p;
    if (p == a.rows) continue;
    for (int j = 0; j < a.cols; ++j) std::swap(a.at(p, j), a.at(row, j));
    const int s = F.inv(a.at(row, c));
    for (int j = 0; j < a.cols; ++j) a.at(row, j) = F.mul(a.at(row, j), s);
    for (int i = 0; i < a.rows; ++i) {
      if (i == row || !a.at(i, c)) continue;
      const int f = a.at(i, c);
      for (int j = 0; j < a.cols; ++j) a.at(i, j) = F.sub(a.at(i, j), F.mul(f, a.at(row, j)));
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

}  // namespace

int rank(const FiniteField& F, FqMatrix a) { return static_cast<int>(rref(F, a).size()); }

FqMatrix inverse(const FiniteField& F, const FqMatrix& a) {
  if (a.rows != a.cols) throw MathError("inverse of a non-square matrix");
  const int n = a.rows;
  FqMatrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n + i) = 1;
  }
  const auto piv = rref(F, aug);
  if (static_cast<int>(piv.size()) < n || (n > 0 && piv[n - 1] != n - 1)) throw MathError("singular matrix");
  FqMatrix r(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.at(i, j) = aug.at(i, n + j);
  return r;
}

std::vector<int> row_times(const FiniteField& F, const std::vector<int>& v, const FqMatrix& a) {
  std::vector<int> r(a.cols, 0);
  for (int i = 0; i < a.rows; ++i)
    if (v[i])
      for (int j = 0; j < a.cols; ++j) r[j] = F.add(r[j], F.mul(v[i], a.at(i, j)));
  return r;
}

std::vector<int> apply(const FiniteField& F, const FqMatrix& a, const std::vector<int>& v) {
  std::vector<int> r(a.rows, 0);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) r[i] = F.add(r[i], F.mul(a.at(i, j), v[j]));
  return r;
}

std::uint64_t gl_order(int n, int q) {
  std::uint64_t qn = 1;
  for (int k = 0; k < n; ++k) qn *= q;
  std::uint64_t r = 1, qk = 1;
  for (int k = 0; k < n; ++k) {
    r *= qn - qk;
    qk *= q;
  }
  return r;
}

std::vector<FqMatrix> subspaces(const FiniteField& F, int n, int k) {
  std::vector<FqMatrix> out;
  if (k < 0 || k > n) return out;
  std::vector<int> piv(k);
  std::function<void(int, int)> choose = [&](int idx, int from) {
    if (idx == k) {
      std::vector<std::pair<int, int>> free;
      for (int r = 0; r < k; ++r)
        for (int c = piv[r] + 1; c < n; ++c)
          if (std::find(piv.begin(), piv.end(), c) == piv.end()) free.emplace_back(r, c);
      std::vector<int> digits(free.size(), 0);
      while (true) {
        FqMatrix m(k, n);
        for (int r = 0; r < k; ++r) m.at(r, piv[r]) = 1;
        for (std::size_t t = 0; t < free.size(); ++t) m.at(free[t].first, free[t].second) = digits[t];
        out.push_back(std::move(m));
        std::size_t t = 0;
        while (t < digits.size() && ++digits[t] == F.q()) digits[t++] = 0;
        if (t == digits.size()) break;
      }
      return;
    }
    for (int c = from; c < n; ++c) {
      piv[idx] = c;
      choose(idx + 1, c + 1);
    }
  };
  choose(0, 0);
  return out;
}

}  // namespace qh
