#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qh {

// F_q for q in {2, 3, 4, 5}; elements are 0..q-1, and F_4 = F_2[t]/(t^2 + t + 1) with t = 2.
class FiniteField {
 public:
  explicit FiniteField(int q);

  int q() const { return q_; }
  int add(int a, int b) const { return add_[a * q_ + b]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int inv(int a) const;
  // a generator of the multiplicative group
  int primitive() const { return primitive_; }

 private:
  int q_;
  int primitive_ = 1;
  std::vector<int> add_, mul_, neg_, inv_;
};

// Dense matrix over a finite field, row-major.
struct FqMatrix {
  int rows = 0, cols = 0;
  std::vector<std::uint8_t> e;

  FqMatrix() = default;
  FqMatrix(int r, int c) : rows(r), cols(c), e(static_cast<std::size_t>(r) * c, 0) {}
  static FqMatrix identity(int n);

  std::uint8_t& at(int r, int c) { return e[static_cast<std::size_t>(r) * cols + c]; }
  std::uint8_t at(int r, int c) const { return e[static_cast<std::size_t>(r) * cols + c]; }
  bool is_zero() const;
  friend bool operator==(const FqMatrix& a, const FqMatrix& b) = default;
  friend auto operator<=>(const FqMatrix& a, const FqMatrix& b) = default;
  // "[1 0;0 1]"
  std::string str() const;
};

FqMatrix mul(const FiniteField& F, const FqMatrix& a, const FqMatrix& b);
int rank(const FiniteField& F, FqMatrix a);
// throws MathError when singular
FqMatrix inverse(const FiniteField& F, const FqMatrix& a);
// row vector times matrix
std::vector<int> row_times(const FiniteField& F, const std::vector<int>& v, const FqMatrix& a);
// matrix times column vector
std::vector<int> apply(const FiniteField& F, const FqMatrix& a, const std::vector<int>& v);

// |GL_n(F_q)|
std::uint64_t gl_order(int n, int q);
// subspaces of F_q^n of dimension k, as k x n matrices in reduced row echelon form, in a fixed order
std::vector<FqMatrix> subspaces(const FiniteField& F, int n, int k);

}  // namespace qh
