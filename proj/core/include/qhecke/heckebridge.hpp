#pragma once

#include "qhecke/poly.hpp"
#include "qhecke/ratfun.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace qh {

// Affine: T_i and X_i of H_n over Q(q). Degenerate: s_i and X_i of the degenerate algebra over Q.
enum class BridgeMode { affine, degenerate };

struct BridgeOptions {
  // Read the action formulas literally: coefficients from the source weight, X_i by x_i + v_i,
  // and the third degenerate case with v_{i+1} - v_i. These readings do not give a module.
  bool as_written = false;
};

// Power series in x_1..x_n known modulo terms of total degree >= prec.
template <class K>
struct Series {
  Poly<K> p;
  int prec = 0;
};

// Element of the direct sum of the weight spaces M_v, v in I^n.
template <class K>
struct BridgeElement {
  std::map<std::vector<K>, Series<K>> comps;
  int prec() const;
};

template <class K>
class HeckeBridge {
 public:
  using Weight = std::vector<K>;
  using Element = BridgeElement<K>;

  HeckeBridge(int n, std::vector<K> vertices, BridgeMode mode, BridgeOptions opt = {});

  int n() const { return n_; }
  BridgeMode mode() const { return mode_; }
  const std::vector<K>& vertices() const { return vertices_; }
  // all of I^n, in lexicographic order of vertex positions
  std::vector<Weight> weights() const;

  Element basis(const Weight& v, const Monomial& m, int prec) const;
  // T_i (affine) or s_i (degenerate)
  Element generator(int i, const Element& e) const;
  Element X(int i, const Element& e) const;
  // the quiver Hecke generators on the polynomial module
  Element tau(int i, const Element& e) const;
  Element x(int i, const Element& e) const;

  // true when v_{i+1} is joined to v_i by an arrow v_i -> v_{i+1}
  bool arrow(const K& a, const K& b) const;

 private:
  int n_;
  std::vector<K> vertices_;
  BridgeMode mode_;
  BridgeOptions opt_;
  struct Coeffs {
    Series<K> a, b;
  };
  mutable std::mutex mu_;
  mutable std::map<std::pair<int, Weight>, std::shared_ptr<Coeffs>> cache_;
  // a multiplies tau's output in M_v, b multiplies the identity part on M_v
  std::shared_ptr<Coeffs> coeffs(int i, const Weight& v, int prec) const;
  Series<K> tau_component(int i, const Weight& u, const Series<K>& f) const;
};

using AffineBridge = HeckeBridge<RatFun>;
using DegenerateBridge = HeckeBridge<Rational>;

// 1, q, q^2, ..., q^{count-1}: the quiver i -> qi is of type A_count for generic q
std::vector<RatFun> geometric_vertices(int count);
// 0, 1, ..., count-1
std::vector<Rational> arithmetic_vertices(int count);

struct BridgeReport {
  std::size_t checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Quadratic, braid, commutation and X relations on every weight and every monomial
// of degree < N, compared modulo degree >= N.
BridgeReport check_affine_relations(int n, int N, const std::vector<RatFun>& vertices, BridgeOptions opt = {});
BridgeReport check_degenerate_relations(int n, int N, const std::vector<Rational>& vertices, BridgeOptions opt = {});
// tau_i^2 = Q, the x/tau relations and the braid relation with its correction, on weights of I^n
template <class K>
BridgeReport check_quiver_relations(const HeckeBridge<K>& b, int N);

}  // namespace qh
