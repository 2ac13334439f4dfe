#pragma once

#include "qhecke/fock.hpp"
#include "qhecke/klr.hpp"
#include "qhecke/laurent.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace qh {

// Cyclotomic nil affine Hecke algebra H_i(n): single vertex, level n, i strands,
// cyclotomic relation X_1^n + z_1 X_1^{n-1} + ... + z_n.
class CyclotomicSl2 {
 public:
  // z = (z_1, ..., z_n) specialized to integers
  CyclotomicSl2(int n, int i, std::vector<Integer> z);

  int level() const { return n_; }
  int strands() const { return i_; }
  const MPoly& cyclotomic_polynomial() const { return f_; }
  // g_j = -/+ d_{j-1} ... d_1 f, monic of degree n-j+1 in X_j
  const std::vector<MPoly>& generators() const { return g_; }
  // true when n < i: g_{n+1} is a unit and the algebra vanishes
  bool is_zero_algebra() const { return zero_; }

  // x^a with a_j <= n - j
  const std::vector<Monomial>& module_basis() const { return basis_; }
  MPoly reduce(MPoly p) const;
  // d_j(g_k) reduces to zero for all j < i and k, so the ideal is a submodule
  bool ideal_is_stable() const;

  // dimension over F_p of the image of the algebra in End(V/M)
  std::size_t image_rank() const;

 private:
  int n_, i_;
  MPoly f_;
  std::vector<MPoly> g_;
  bool zero_ = false;
  std::vector<Monomial> basis_;
};

// i! n!/(n-i)! for i <= n, else 0
Integer cyclotomic_rank_formula(int n, int i);
// spanning set tau_w x^a 1_{(1,...,1)} with w in S_i and a_j <= n - j
std::vector<KLRElement> cyclotomic_basis(int n, int i);

struct CyclotomicRank {
  int n = 0, i = 0;
  std::vector<std::size_t> ranks;  // one per specialization, the last one at z = 0
  bool consistent = false;         // all specializations agree
  Integer expected;
};
CyclotomicRank cyclotomic_rank(int n, int i, std::uint64_t seed, int points = 3);

// dimension of the subalgebra of End(coinvariants of P_n) generated by
// T_1..T_{i-1} and X_1..X_i; this is dim of H_{i,n} tensored down to a field
std::size_t parabolic_nil_hecke_rank(int n, int i);

struct Sl2IsoCheck {
  bool well_defined = false;  // the cyclotomic relation maps to zero
  bool relations = false;     // images of T_j, X_j satisfy the nil affine relations
  std::size_t source_rank = 0, target_rank = 0;
  bool ok() const { return well_defined && relations && source_rank == target_rank; }
};
Sl2IsoCheck sl2_iso_check(int n, int i, std::uint64_t seed);

// P_{S_i}(q) * prod_{k=n-i+1}^n [k]_q as a polynomial in q; its value at 1 is the rank of H_{i,n}
Laurent parabolic_graded_rank(int n, int i);

struct Sl2LedgerRow {
  int i = 0;
  int weight = 0;           // n - 2i
  Integer rank;             // rank of H_{i,n}
  Integer simple_dim;       // i!
  Integer chain_rank;       // rank of H_{i+1,n} over H_{i,n}, 0 at i = n
  Integer ef_per_dim;       // dim E F(M) / dim M
  Integer fe_per_dim;       // dim F E(M) / dim M
};
std::vector<Sl2LedgerRow> minimal_sl2_dimension_ledger(int n);

// partitions of n grouped by residue content
std::map<std::vector<int>, std::vector<Partition>> weight_space_classes(int p, int n);

}  // namespace qh
