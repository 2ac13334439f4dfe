#include "qhecke/heckebridge.hpp"

#include "qhecke/polyring.hpp"

#include <algorithm>
#include <limits>

namespace qh {

namespace {

constexpr int kExact = std::numeric_limits<int>::max() / 4;

template <class K>
Poly<K> truncated(const Poly<K>& p, int prec) {
  std::vector<typename Poly<K>::Term> keep;
  for (const auto& t : p.terms())
    if (t.first.deg < prec) keep.push_back(t);
  return Poly<K>::from_terms(std::move(keep));
}

template <class K>
Series<K> exact(const Poly<K>& p) {
  return {p, kExact};
}

template <class K>
Series<K> mul(const Series<K>& a, const Series<K>& b) {
  const int prec = std::min(a.prec, b.prec);
  std::vector<typename Poly<K>::Term> out;
  for (const auto& [ma, ca] : a.p.terms())
    for (const auto& [mb, cb] : b.p.terms())
      if (ma.deg + mb.deg < prec) out.emplace_back(ma * mb, ca * cb);
  return {Poly<K>::from_terms(std::move(out)), prec};
}

template <class K>
Series<K> add(const Series<K>& a, const Series<K>& b, const K& c = K(1)) {
  const int prec = std::min(a.prec, b.prec);
  return {truncated(a.p + b.p.scaled(c), prec), prec};
}

// inverse of a series with invertible constant term
template <class K>
Series<K> inverse(const Poly<K>& u, int prec) {
  const K c = u.constant_term();
  if (is_zero(c)) throw MathError("factor is not invertible: its constant term vanishes");
  const K ci = K(1) / c;
  // u = c (1 - r), u^{-1} = c^{-1} sum_k r^k
  const Series<K> r{truncated(Poly<K>(K(1)) - u.scaled(ci), prec), prec};
  Series<K> sum{Poly<K>(K(1)), prec}, power = sum;
  for (int k = 1; k < prec; ++k) {
    power = mul(power, r);
    if (power.p.is_zero()) break;
    sum = add(sum, power);
  }
  sum.p = sum.p.scaled(ci);
  return sum;
}

// the formal parameter q, or 1 over the rationals
template <class K>
K formal_q() {
  if constexpr (std::is_same_v<K, RatFun>)
    return RatFun::q();
  else
    return K(1);
}

template <class K>
Poly<K> var(int i) {
  return Poly<K>::var(i);
}

template <class K>
void accumulate(BridgeElement<K>& e, const std::vector<K>& v, const Series<K>& s, const K& c = K(1)) {
  auto it = e.comps.find(v);
  if (it == e.comps.end())
    e.comps.emplace(v, Series<K>{s.p.scaled(c), s.prec});
  else
    it->second = add(it->second, s, c);
}

template <class K>
BridgeElement<K> combine(std::initializer_list<std::pair<K, const BridgeElement<K>*>> parts) {
  BridgeElement<K> out;
  for (const auto& [c, e] : parts)
    for (const auto& [v, s] : e->comps) accumulate(out, v, s, c);
  return out;
}

template <class K>
std::vector<K> swapped_weight(std::vector<K> v, int i) {
  std::swap(v[i - 1], v[i]);
  return v;
}

}  // namespace

template <class K>
int BridgeElement<K>::prec() const {
  int p = kExact;
  for (const auto& [v, s] : comps) p = std::min(p, s.prec);
  return p;
}

template <class K>
HeckeBridge<K>::HeckeBridge(int n, std::vector<K> vertices, BridgeMode mode, BridgeOptions opt)
    : n_(n), vertices_(std::move(vertices)), mode_(mode), opt_(opt) {
  if (n < 1 || n > 6) throw UsageError("bridge rank must be between 1 and 6");
  if (vertices_.empty()) throw UsageError("the vertex set must be nonempty");
  for (const auto& a : vertices_)
    if (mode_ == BridgeMode::affine && is_zero(a)) throw UsageError("vertices must be nonzero in the affine case");
}

template <class K>
bool HeckeBridge<K>::arrow(const K& a, const K& b) const {
  if constexpr (std::is_same_v<K, RatFun>) {
    return b == RatFun::q() * a;
  } else {
    return b == a + K(1);
  }
}

template <class K>
std::vector<typename HeckeBridge<K>::Weight> HeckeBridge<K>::weights() const {
  std::vector<Weight> out{{}};
  for (int k = 0; k < n_; ++k) {
    std::vector<Weight> next;
    for (const auto& w : out)
      for (const auto& a : vertices_) {
        Weight x = w;
        x.push_back(a);
        next.push_back(std::move(x));
      }
    out = std::move(next);
  }
  return out;
}

template <class K>
BridgeElement<K> HeckeBridge<K>::basis(const Weight& v, const Monomial& m, int prec) const {
  if (static_cast<int>(v.size()) != n_) throw UsageError("weight has the wrong length");
  Element e;
  e.comps.emplace(v, Series<K>{truncated(Poly<K>::term(m, K(1)), prec), prec});
  return e;
}

template <class K>
Series<K> HeckeBridge<K>::tau_component(int i, const Weight& u, const Series<K>& f) const {
  if (u[i - 1] == u[i]) return {demazure(i, f.p), f.prec - 1};
  Poly<K> s = f.p.swapped(i, i + 1);
  if (arrow(u[i], u[i - 1])) return {truncated((var<K>(i) - var<K>(i + 1)) * s, f.prec), f.prec};
  return {s, f.prec};
}

template <class K>
BridgeElement<K> HeckeBridge<K>::tau(int i, const Element& e) const {
  if (i < 1 || i >= n_) throw UsageError("generator index out of range");
  Element out;
  for (const auto& [u, f] : e.comps) accumulate(out, swapped_weight(u, i), tau_component(i, u, f));
  return out;
}

template <class K>
BridgeElement<K> HeckeBridge<K>::x(int i, const Element& e) const {
  Element out;
  for (const auto& [u, f] : e.comps) accumulate(out, u, mul(f, exact(var<K>(i))));
  return out;
}

template <class K>
BridgeElement<K> HeckeBridge<K>::X(int i, const Element& e) const {
  if (i < 1 || i > n_) throw UsageError("variable index out of range");
  Element out;
  for (const auto& [u, f] : e.comps) {
    const K& a = u[i - 1];
    // v_i (1 + x_i) in the affine case, x_i + v_i otherwise
    Poly<K> act = (mode_ == BridgeMode::affine && !opt_.as_written) ? (Poly<K>(K(1)) + var<K>(i)).scaled(a)
                                                                     : var<K>(i) + Poly<K>(a);
    accumulate(out, u, mul(f, exact(act)));
  }
  return out;
}

template <class K>
std::shared_ptr<typename HeckeBridge<K>::Coeffs> HeckeBridge<K>::coeffs(int i, const Weight& v, int prec) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find({i, v});
    if (it != cache_.end() && it->second->a.prec >= prec) return it->second;
  }
  const K& a = v[i - 1];
  const K& b = v[i];
  auto c = std::make_shared<Coeffs>();
  if (mode_ == BridgeMode::affine) {
    const K q = formal_q<K>();
    const bool shift = !opt_.as_written;
    const Poly<K> yi = shift ? Poly<K>(K(1)) + var<K>(i) : var<K>(i);
    const Poly<K> yj = shift ? Poly<K>(K(1)) + var<K>(i + 1) : var<K>(i + 1);
    if (a == b) {
      c->a = {yi.scaled(q) - yj, prec};
      c->b = {Poly<K>(q), prec};
    } else if (arrow(a, b)) {
      c->a = inverse(yi.scaled(K(1) / q) - yj, prec);
      c->b = mul(exact(yj.scaled(K(1) - q)), c->a);
    } else {
      const Series<K> d = inverse(yi.scaled(a) - yj.scaled(b), prec);
      c->a = mul(exact(Poly<K>(yi.scaled(q * a) - yj.scaled(b))), d);
      c->b = mul(exact(yj.scaled((K(1) - q) * b)), d);
    }
  } else {
    const Poly<K> d = var<K>(i) - var<K>(i + 1);
    if (a == b) {
      c->a = {d + Poly<K>(K(1)), prec};
      c->b = {Poly<K>(K(1)), prec};
    } else if (arrow(a, b)) {
      c->a = inverse(d - Poly<K>(K(1)), prec);
      c->b = {-c->a.p, prec};
    } else {
      const K shift = opt_.as_written ? K(b - a) : K(a - b);
      const Series<K> inv = inverse(d + Poly<K>(shift), prec);
      c->a = mul(exact(Poly<K>(d + Poly<K>(shift + K(1)))), inv);
      c->b = {-inv.p, prec};
    }
  }
  std::lock_guard<std::mutex> lock(mu_);
  cache_[{i, v}] = c;
  return c;
}

template <class K>
BridgeElement<K> HeckeBridge<K>::generator(int i, const Element& e) const {
  if (i < 1 || i >= n_) throw UsageError("generator index out of range");
  Element out;
  for (const auto& [u, f] : e.comps) {
    const Weight w = swapped_weight(u, i);
    // the tau part lands in M_w and is multiplied there; the literal reading uses the source weight
    const auto ca = coeffs(i, opt_.as_written ? u : w, f.prec);
    const auto cb = coeffs(i, u, f.prec);
    accumulate(out, w, mul(ca->a, tau_component(i, u, f)));
    accumulate(out, u, mul(cb->b, f));
  }
  return out;
}

std::vector<RatFun> geometric_vertices(int count) {
  std::vector<RatFun> out;
  for (int k = 0; k < count; ++k) out.push_back(RatFun::q().pow(k));
  return out;
}

std::vector<Rational> arithmetic_vertices(int count) {
  std::vector<Rational> out;
  for (int k = 0; k < count; ++k) out.emplace_back(k);
  return out;
}

namespace {

template <class K>
std::string weight_str(const std::vector<K>& v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + to_string(v[k]);
  return s + ")";
}

// zero modulo degree >= N; also fails when the tracked precision dropped below N
template <class K>
bool vanishes_below(const BridgeElement<K>& e, int N) {
  for (const auto& [v, s] : e.comps) {
    if (s.prec < N) return false;
    if (!truncated(s.p, N).is_zero()) return false;
  }
  return true;
}

template <class K>
BridgeReport check_relations(const HeckeBridge<K>& b, int N) {
  BridgeReport rep;
  const int n = b.n();
  const bool affine = b.mode() == BridgeMode::affine;
  const K q = formal_q<K>();
  const int prec = N + 3;
  auto expect = [&](bool ok, const std::string& what) {
    ++rep.checked;
    if (!ok) rep.failures.push_back(what);
  };
  for (const auto& v : b.weights())
    for (int d = 0; d < N; ++d)
      for (const auto& m : monomials_of_degree(n, d)) {
        const auto e = b.basis(v, m, prec);
        const std::string where = " at " + weight_str(v) + " on " + Poly<K>::term(m, K(1)).str();
        for (int i = 1; i < n; ++i) {
          const auto t = b.generator(i, e);
          const auto tt = b.generator(i, t);
          // (T - q)(T + 1) = 0, or s^2 = 1
          expect(vanishes_below(combine<K>({{K(1), &tt}, {-(q - K(1)), &t}, {-q, &e}}), N),
                 "quadratic relation for " + std::to_string(i) + where);
          const auto xe = b.X(i + 1, e);
          const auto txe = b.generator(i, xe);
          const auto xte = b.X(i, t);
          // T X_{i+1} - X_i T = (q - 1) X_{i+1}, or s X_{i+1} - X_i s = 1
          if (affine)
            expect(vanishes_below(combine<K>({{K(1), &txe}, {K(-1), &xte}, {-(q - K(1)), &xe}}), N),
                   "X relation for " + std::to_string(i) + where);
          else
            expect(vanishes_below(combine<K>({{K(1), &txe}, {K(-1), &xte}, {K(-1), &e}}), N),
                   "X relation for " + std::to_string(i) + where);
          for (int j = 1; j <= n; ++j) {
            if (j == i || j == i + 1) continue;
            const auto a = b.generator(i, b.X(j, e));
            const auto c = b.X(j, t);
            expect(vanishes_below(combine<K>({{K(1), &a}, {K(-1), &c}}), N),
                   "commutation with X" + std::to_string(j) + " for " + std::to_string(i) + where);
          }
          for (int j = i + 2; j < n; ++j) {
            const auto a = b.generator(i, b.generator(j, e));
            const auto c = b.generator(j, t);
            expect(vanishes_below(combine<K>({{K(1), &a}, {K(-1), &c}}), N),
                   "commutation of " + std::to_string(i) + " and " + std::to_string(j) + where);
          }
          if (i + 1 < n) {
            const auto l = b.generator(i, b.generator(i + 1, t));
            const auto r = b.generator(i + 1, b.generator(i, b.generator(i + 1, e)));
            expect(vanishes_below(combine<K>({{K(1), &l}, {K(-1), &r}}), N),
                   "braid relation for " + std::to_string(i) + where);
          }
        }
        for (int i = 1; i <= n; ++i) {
          // X_i - v_i raises degree, hence is nilpotent of order <= N in the truncation
          auto y = e;
          for (int k = 0; k < N - d; ++k) {
            const auto xy = b.X(i, y);
            y = combine<K>({{K(1), &xy}, {-K(v[i - 1]), &y}});
          }
          expect(vanishes_below(y, N), "nilpotency of X" + std::to_string(i) + where);
        }
      }
  return rep;
}

}  // namespace

BridgeReport check_affine_relations(int n, int N, const std::vector<RatFun>& vertices, BridgeOptions opt) {
  if (N < 1) throw UsageError("truncation order must be positive");
  return check_relations(AffineBridge(n, vertices, BridgeMode::affine, opt), N);
}

BridgeReport check_degenerate_relations(int n, int N, const std::vector<Rational>& vertices, BridgeOptions opt) {
  if (N < 1) throw UsageError("truncation order must be positive");
  return check_relations(DegenerateBridge(n, vertices, BridgeMode::degenerate, opt), N);
}

template <class K>
BridgeReport check_quiver_relations(const HeckeBridge<K>& b, int N) {
  BridgeReport rep;
  const int n = b.n();
  auto expect = [&](bool ok, const std::string& what) {
    ++rep.checked;
    if (!ok) rep.failures.push_back(what);
  };
  for (const auto& v : b.weights())
    for (int d = 0; d < N; ++d)
      for (const auto& m : monomials_of_degree(n, d)) {
        const auto e = b.basis(v, m, N + 2);
        const std::string where = " at " + weight_str(v) + " on " + Poly<K>::term(m, K(1)).str();
        for (int i = 1; i < n; ++i) {
          const K& a = v[i - 1];
          const K& c = v[i];
          // tau^2 = Q_{v_i v_{i+1}}(x_i, x_{i+1})
          Poly<K> Q;
          if (a == c)
            Q = Poly<K>();
          else if (b.arrow(a, c))
            Q = var<K>(i) - var<K>(i + 1);
          else if (b.arrow(c, a))
            Q = var<K>(i + 1) - var<K>(i);
          else
            Q = Poly<K>(K(1));
          const auto tt = b.tau(i, b.tau(i, e));
          BridgeElement<K> qe;
          for (const auto& [u, s] : e.comps) accumulate(qe, u, mul(s, exact(Q)));
          expect(vanishes_below(combine<K>({{K(1), &tt}, {K(-1), &qe}}), N), "tau quadratic for " + std::to_string(i) + where);
          // tau x_{i+1} - x_i tau = delta_{v_i v_{i+1}}
          const auto l = b.tau(i, b.x(i + 1, e));
          const auto r = b.x(i, b.tau(i, e));
          const K delta = a == c ? K(1) : K(0);
          expect(vanishes_below(combine<K>({{K(1), &l}, {K(-1), &r}, {-delta, &e}}), N),
                 "tau-x relation for " + std::to_string(i) + where);
        }
      }
  return rep;
}

template struct BridgeElement<RatFun>;
template struct BridgeElement<Rational>;
template class HeckeBridge<RatFun>;
template class HeckeBridge<Rational>;
template BridgeReport check_quiver_relations(const HeckeBridge<RatFun>&, int);
template BridgeReport check_quiver_relations(const HeckeBridge<Rational>&, int);

}  // namespace qh
