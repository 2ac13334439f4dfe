#pragma once

#include "qhecke/numeric.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qh {

struct Partition {
  std::vector<int> parts;  // weakly decreasing, positive

  Partition() = default;
  explicit Partition(std::vector<int> p);

  int size() const;
  int length() const { return static_cast<int>(parts.size()); }
  // "(a1,a2,...)", "()" for the empty partition
  std::string str() const;
  static Partition parse(const std::string& text);
  Partition transpose() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts == b.parts; }
  friend bool operator<(const Partition& a, const Partition& b) { return a.parts < b.parts; }
};

using FockVector = std::map<Partition, Integer>;
using Node = std::pair<int, int>;  // (row, column), 1-based

// (col - row) mod p
int residue(int row, int col, int p);
// all partitions of n in reverse lexicographic order, (n) first
std::vector<Partition> partitions_of(int n);

std::vector<Node> addable_nodes(const Partition& l);
std::vector<Node> removable_nodes(const Partition& l);
int addable_count(const Partition& l, int i, int p);
int removable_count(const Partition& l, int i, int p);

FockVector f_op(int i, const FockVector& v, int p);
FockVector e_op(int i, const FockVector& v, int p);
FockVector d_op(const FockVector& v, int p);
FockVector single(const Partition& l);
std::string fock_str(const FockVector& v);

// number of boxes of each residue 0..p-1
std::vector<int> weight_of(const Partition& l, int p);
// Cartan matrix of affine type A_{p-1}; for p = 2 the off-diagonal entries are -2
int affine_cartan(int i, int j, int p);

// matrix of e_i or f_i from partitions of n to partitions of n -/+ 1; rows index targets
struct FockMatrix {
  std::vector<Partition> rows, cols;
  std::vector<std::vector<Integer>> entries;
};
FockMatrix fock_matrix(char op, int i, int p, int n);

struct FockReport {
  std::size_t checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};
// [e_i, f_j] = delta_ij (addable_i - removable_i), its agreement with the
// weight, transpose adjointness, and the d commutators, on sizes <= max_size
FockReport check_fock_relations(int p, int max_size);

}  // namespace qh
