#pragma once

#include "qhecke/coxeter.hpp"
#include "qhecke/poly.hpp"

#include <string>
#include <vector>

namespace qh {

// Quiver without loops on vertices 1..m, stored by arrow counts d_ij.
class QuiverData {
 public:
  QuiverData() = default;
  explicit QuiverData(int vertices);

  static QuiverData from_arrows(int vertices, const std::vector<std::pair<int, int>>& arrows);
  // symmetric Cartan matrix, arrows oriented i -> j for i < j
  static QuiverData from_cartan(const std::vector<std::vector<int>>& cartan);
  // "i -> j" lines, or rows of a Cartan matrix; '#' starts a comment
  static QuiverData parse(const std::string& text);
  // "a1", "a2", "a3", ..., "a<m>" (linear orientation 1 -> 2 -> ...)
  static QuiverData preset(const std::string& name);

  int vertices() const { return m_; }
  int arrows(int i, int j) const { return d_[i - 1][j - 1]; }
  int edges(int i, int j) const { return i == j ? 0 : arrows(i, j) + arrows(j, i); }
  int cartan(int i, int j) const { return i == j ? 2 : -edges(i, j); }
  std::vector<std::vector<int>> cartan_matrix() const;

  // Q_ij(u, u') = (-1)^{d_ij} (u - u')^{m_ij}, Q_ii = 0
  MPoly Q(int i, int j, const MPoly& u, const MPoly& up) const;
  // P_ij = Q_ij for i < j, P_ji = 1
  MPoly P(int i, int j, const MPoly& u, const MPoly& up) const;

  std::string str() const;

 private:
  int m_ = 0;
  std::vector<std::vector<int>> d_;
};

// (w.v)_k = v_{w^{-1}(k)}
std::vector<int> act_on_sequence(const Permutation& w, const std::vector<int>& v);
// idempotent reached from v along tau_{l_1} ... tau_{l_r} (l_r applied first)
std::vector<int> word_target(const std::vector<int>& letters, const std::vector<int>& v);
std::string sequence_str(const std::vector<int>& v);
// all sequences in {1..m}^n, lexicographic
std::vector<std::vector<int>> all_sequences(int m, int n);
// distinct rearrangements of v, lexicographic
std::vector<std::vector<int>> sequence_orbit(const std::vector<int>& v);

}  // namespace qh
