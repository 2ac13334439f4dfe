#pragma once

#include "qhecke/finite_field.hpp"
#include "qhecke/numeric.hpp"
#include "qhecke/quiver.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace qh {

using DimVector = std::vector<int>;

// Quiver for representation counting; loops are allowed. Vertices are 1..m in the API.
struct HallQuiver {
  int vertices = 0;
  // 0-based (source, target)
  std::vector<std::pair<int, int>> arrows;

  static HallQuiver from(const QuiverData& q);
  static HallQuiver single_vertex();
  static HallQuiver jordan();

  // sum_i a_i b_i - sum_{s -> t} a_s b_t
  int euler(const DimVector& a, const DimVector& b) const;
};

struct QuiverRep {
  DimVector dim;
  // one dim[target] x dim[source] matrix per arrow
  std::vector<FqMatrix> maps;
};

// An isomorphism class: its dimension vector and the code of its lexicographically
// minimal matrix tuple (entries of all arrows, row-major, first entry most significant).
struct ClassLabel {
  DimVector dim;
  std::uint64_t code = 0;
  friend auto operator<=>(const ClassLabel&, const ClassLabel&) = default;
  friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
};

struct RepClass {
  ClassLabel label;
  QuiverRep rep;
  std::uint64_t orbit = 0;
  std::uint64_t aut = 0;
};

// a + b v with v^2 = q
struct VNumber {
  Rational a = 0, b = 0;
  bool is_zero() const { return a == 0 && b == 0; }
  friend bool operator==(const VNumber&, const VNumber&) = default;
  std::string str() const;
};

struct HallElement {
  int q = 2;
  std::map<ClassLabel, VNumber> terms;

  bool is_zero() const { return terms.empty(); }
  VNumber coeff(const ClassLabel& l) const;
  void add(const ClassLabel& l, const VNumber& c);
  HallElement& operator+=(const HallElement& o);
  HallElement& operator-=(const HallElement& o);
  friend HallElement operator+(HallElement a, const HallElement& b) { return a += b; }
  friend HallElement operator-(HallElement a, const HallElement& b) { return a -= b; }
  friend HallElement operator*(const VNumber& c, const HallElement& x);
  friend bool operator==(const HallElement& a, const HallElement& b) { return a.q == b.q && a.terms == b.terms; }
};

VNumber vmul(const VNumber& x, const VNumber& y, int q);
// v^k
VNumber vpow(int k, int q);

class HallAlgebra {
 public:
  static constexpr std::uint64_t default_bound = 10'000'000;

  HallAlgebra(HallQuiver quiver, int q, std::uint64_t bound = default_bound);

  const HallQuiver& quiver() const { return quiver_; }
  const FiniteField& field() const { return F_; }
  int q() const { return F_.q(); }

  // orbit representatives in increasing code order; throws UsageError if |M_d| exceeds the bound
  const std::vector<RepClass>& classes(const DimVector& d) const;
  ClassLabel classify(const QuiverRep& r) const;
  const RepClass& find(const ClassLabel& l) const;
  std::string label_str(const ClassLabel& l) const;

  ClassLabel zero() const;
  ClassLabel simple(int i) const;

  // F^L_{M,N}: submodules N' of L with N' ~ N and L/N' ~ M
  std::uint64_t hall_number(const ClassLabel& M, const ClassLabel& N, const ClassLabel& L) const;
  // P^L_{M,N}: exact sequences 0 -> N -> L -> M -> 0, counted as pairs of maps
  std::uint64_t exact_sequences(const ClassLabel& M, const ClassLabel& N, const ClassLabel& L) const;
  // chains L = L_0 > L_1 > ... > L_k = 0 with L_{r-1}/L_r ~ pieces[r-1]
  std::uint64_t filtrations(const ClassLabel& L, const std::vector<ClassLabel>& pieces) const;

  // subrepresentations of r of dimension e, each with its quotient
  std::vector<std::pair<QuiverRep, QuiverRep>> subrepresentations(const QuiverRep& r, const DimVector& e) const;

  HallElement element(const ClassLabel& l, VNumber c = {1, 0}) const;
  // [M]*[N] = sum_L F^L_{M,N} [L]; twisted multiplies by v^<M,N>
  HallElement product(const HallElement& a, const HallElement& b, bool twisted) const;

  // f_i^2 f_j - (v + v^-1) f_i f_j f_i + f_j f_i^2 in the twisted algebra, for a single edge i - j
  HallElement serre_relation(int i, int j) const;

 private:
  HallQuiver quiver_;
  FiniteField F_;
  std::uint64_t bound_;
  struct Table {
    std::vector<RepClass> classes;
    std::vector<std::int32_t> orbit_of;
  };
  mutable std::recursive_mutex mu_;
  mutable std::map<DimVector, std::unique_ptr<Table>> tables_;
  mutable std::map<ClassLabel, std::map<std::pair<ClassLabel, ClassLabel>, std::uint64_t>> hall_;
  mutable std::map<std::pair<int, int>, std::vector<FqMatrix>> subspaces_;

  const Table& table(const DimVector& d) const;
  const std::vector<FqMatrix>& subspace_list(int n, int k) const;
  const std::map<std::pair<ClassLabel, ClassLabel>, std::uint64_t>& hall_numbers(const ClassLabel& L) const;
  std::uint64_t space_size(const DimVector& d) const;
  std::uint64_t encode(const QuiverRep& r) const;
  QuiverRep decode(const DimVector& d, std::uint64_t code) const;
  // all morphisms a -> b, one matrix per vertex
  std::vector<std::vector<FqMatrix>> homs(const QuiverRep& a, const QuiverRep& b) const;
};

}  // namespace qh
