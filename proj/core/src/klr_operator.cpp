#include "qhecke/klr_operator.hpp"

#include "qhecke/linalg.hpp"

namespace qh {

namespace {

std::optional<MPoly> try_divide_delta(const MPoly& p, int n) {
  MPoly r = p;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      auto q = r.try_divide_linear(i, j);
      if (!q) return std::nullopt;
      r = std::move(*q);
    }
  return r;
}

MPoly divide_delta_power(MPoly p, int n, int k) {
  for (int t = 0; t < k; ++t) {
    auto q = try_divide_delta(p, n);
    if (!q) throw MathError("operator output is not a polynomial");
    p = std::move(*q);
  }
  return p;
}

}  // namespace

MPoly vandermonde(int n) {
  MPoly d(1);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) d *= MPoly::var(i) - MPoly::var(j);
  return d;
}

MPoly OperatorComponent::apply(const MPoly& f) const {
  if (numerators.empty()) return {};
  const int n = numerators.begin()->first.n();
  MPoly g;
  for (const auto& [u, nu] : numerators) g += nu * f.act(u);
  return divide_delta_power(g, n, k);
}

OperatorComponent OperatorComponent::raised(int kprime) const {
  if (kprime < k) throw MathError("cannot lower the denominator exponent");
  OperatorComponent r;
  r.k = kprime;
  if (numerators.empty()) return r;
  MPoly scale = vandermonde(numerators.begin()->first.n()).pow(kprime - k);
  for (const auto& [u, nu] : numerators) r.numerators.emplace(u, nu * scale);
  return r;
}

void OperatorComponent::reduce() {
  if (numerators.empty()) {
    k = 0;
    return;
  }
  const int n = numerators.begin()->first.n();
  while (k > 0) {
    std::map<Permutation, MPoly> next;
    for (const auto& [u, nu] : numerators) {
      auto q = try_divide_delta(nu, n);
      if (!q) return;
      next.emplace(u, std::move(*q));
    }
    numerators = std::move(next);
    --k;
  }
}

void KLROperator::add(const Colours& src, const Colours& dst, const OperatorComponent& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(src, dst);
  auto it = comps_.find(key);
  if (it == comps_.end()) {
    comps_.emplace(key, c);
    return;
  }
  int k = std::max(it->second.k, c.k);
  OperatorComponent a = it->second.raised(k), b = c.raised(k);
  for (const auto& [u, nu] : b.numerators) {
    auto& slot = a.numerators[u];
    slot += nu;
    if (slot.is_zero()) a.numerators.erase(u);
  }
  if (a.is_zero()) {
    comps_.erase(it);
    return;
  }
  a.reduce();
  it->second = std::move(a);
}

KLROperator& KLROperator::operator+=(const KLROperator& o) {
  for (const auto& [key, c] : o.comps_) add(key.first, key.second, c);
  return *this;
}

KLROperator& KLROperator::operator-=(const KLROperator& o) {
  for (const auto& [key, c] : o.comps_) {
    OperatorComponent neg = c;
    for (auto& [u, nu] : neg.numerators) nu = -nu;
    add(key.first, key.second, neg);
  }
  return *this;
}

bool operator==(const KLROperator& a, const KLROperator& b) { return (a - b).is_zero(); }

KLROperator operator*(const KLROperator& a, const KLROperator& b) {
  KLROperator r(a.n_);
  for (const auto& [kb, cb] : b.comps_)
    for (const auto& [ka, ca] : a.comps_) {
      if (ka.first != kb.second) continue;
      OperatorComponent c;
      c.k = ca.k + cb.k;
      for (const auto& [u, nu] : ca.numerators) {
        const bool flip = u.sign() < 0 && cb.k % 2 == 1;
        for (const auto& [u2, nu2] : cb.numerators) {
          MPoly t = nu * nu2.act(u);
          if (flip) t = -t;
          auto& slot = c.numerators[u * u2];
          slot += t;
          if (slot.is_zero()) c.numerators.erase(u * u2);
        }
      }
      c.reduce();
      r.add(kb.first, ka.second, c);
    }
  return r;
}

std::map<Colours, MPoly> KLROperator::apply(const std::map<Colours, MPoly>& f) const {
  std::map<Colours, MPoly> out;
  for (const auto& [key, c] : comps_) {
    auto it = f.find(key.first);
    if (it == f.end()) continue;
    out[key.second] += c.apply(it->second);
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

namespace {

// sign * prod (x_a - x_b)^e over a < b
struct LinearFactors {
  int sign = 1;
  std::map<std::pair<int, int>, int> exps;

  void multiply(int a, int b, int e) {
    if (a > b) {
      std::swap(a, b);
      if (e % 2) sign = -sign;
    }
    auto& slot = exps[{a, b}];
    slot += e;
    if (!slot) exps.erase({a, b});
  }
};

class Representer {
 public:
  explicit Representer(const KLRAlgebra& A) : A_(A), n_(A.n()) {}

  OperatorComponent letter(int i, const Colours& z) const {
    OperatorComponent c;
    const Permutation s = Permutation::simple(n_, i);
    if (z[i - 1] == z[i]) {
      // (x_i - x_{i+1})^{-1} (s_i - 1)
      c.k = 1;
      MPoly d = vandermonde(n_).divide_linear(i, i + 1);
      c.numerators.emplace(s, d);
      c.numerators.emplace(Permutation::identity(n_), -d);
    } else {
      c.numerators.emplace(s, A_.quiver().P(z[i - 1], z[i], MPoly::var(i + 1), MPoly::var(i)));
    }
    return c;
  }

  const OperatorComponent& tau(const Colours& v, const Permutation& w) {
    auto key = std::make_pair(v, w);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    OperatorComponent acc;
    acc.numerators.emplace(Permutation::identity(n_), MPoly(1));
    Colours z = v;
    const auto& letters = canonical_letters(w);
    for (auto l = letters.rbegin(); l != letters.rend(); ++l) {
      KLROperator lhs(n_), rhs(n_);
      Colours z2 = z;
      std::swap(z2[*l - 1], z2[*l]);
      lhs.add(z, z2, letter(*l, z));
      rhs.add(v, z, acc);
      KLROperator prod = lhs * rhs;
      acc = prod.is_zero() ? OperatorComponent{} : prod.components().begin()->second;
      z = z2;
    }
    return cache_.emplace(key, acc).first->second;
  }

  // coefficient of w in the image of tau_w 1_v, as linear factors
  LinearFactors lead(const Colours& v, const Permutation& w) const {
    LinearFactors f;
    const auto& letters = canonical_letters(w);
    Permutation prefix = Permutation::identity(n_);
    Colours z = v;
    std::vector<std::pair<int, Colours>> steps;
    for (auto l = letters.rbegin(); l != letters.rend(); ++l) {
      steps.emplace_back(*l, z);
      std::swap(z[*l - 1], z[*l]);
    }
    // outermost letter first: c_1 * s_{l1}(c_2) * s_{l1}s_{l2}(c_3) ...
    for (auto st = steps.rbegin(); st != steps.rend(); ++st) {
      const int i = st->first;
      const Colours& zz = st->second;
      const int a = prefix(i), b = prefix(i + 1);
      if (zz[i - 1] == zz[i]) {
        f.multiply(a, b, -1);
      } else if (zz[i - 1] < zz[i]) {
        // Q_{st}(x_{i+1}, x_i) = (-1)^{d_st} (x_{i+1} - x_i)^{m_st}
        const int m = A_.quiver().edges(zz[i - 1], zz[i]);
        if (A_.quiver().arrows(zz[i - 1], zz[i]) % 2) f.sign = -f.sign;
        f.multiply(b, a, m);
      }
      prefix = prefix * Permutation::simple(n_, i);
    }
    return f;
  }

  KLROperator element(const KLRElement& e) {
    KLROperator out(n_);
    for (const auto& [key, p] : e.terms()) {
      const auto& t = tau(key.first, key.second);
      OperatorComponent c;
      c.k = t.k;
      for (const auto& [u, nu] : t.numerators) c.numerators.emplace(u, nu * p.act(u));
      c.reduce();
      out.add(key.first, A_.target(key), c);
    }
    return out;
  }

 private:
  const KLRAlgebra& A_;
  int n_;
  std::map<std::pair<Colours, Permutation>, OperatorComponent> cache_;
};

}  // namespace

KLROperator represent(const KLRAlgebra& A, const KLRElement& a) { return Representer(A).element(a); }

KLRElement pbw_coordinates(const KLRAlgebra& A, const KLROperator& op) {
  const int n = A.n();
  Representer rep(A);
  KLRElement out(n);
  KLROperator rest = op;
  while (!rest.is_zero()) {
    const auto& [key, comp] = *rest.components().begin();
    const Colours src = key.first, dst = key.second;
    // a permutation of maximal length in the component
    Permutation u = comp.numerators.begin()->first;
    for (const auto& [w, nu] : comp.numerators)
      if (w.length() > u.length()) u = w;
    if (act_on_sequence(u, src) != dst) throw MathError("not in image: idempotents do not match");
    LinearFactors lead = rep.lead(src, u);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) lead.multiply(i, j, comp.k);
    MPoly image = comp.numerators.at(u);
    if (lead.sign < 0) image = -image;
    for (const auto& [ab, e] : lead.exps)
      if (e < 0) image *= (MPoly::var(ab.first) - MPoly::var(ab.second)).pow(-e);
    for (const auto& [ab, e] : lead.exps)
      for (int t = 0; t < e; ++t) {
        auto q = image.try_divide_linear(ab.first, ab.second);
        if (!q) throw MathError("not in image: leading coefficient is not a polynomial");
        image = std::move(*q);
      }
    MPoly p = image.act(u.inverse());
    out.add_term(src, u, p);
    KLRElement term(n);
    term.add_term(src, u, p);
    rest -= rep.element(term);
  }
  return out;
}

PBWIndependence pbw_independence(const KLRAlgebra& A, int max_exp) {
  const int n = A.n();
  Representer rep(A);
  PBWIndependence res;
  const auto monos = monomials_up_to(n, max_exp);
  const auto perms = all_permutations(n);
  for (const auto& v : A.idempotents()) {
    int kmax = 0;
    for (const auto& w : perms) kmax = std::max(kmax, rep.tau(v, w).k);
    std::map<std::pair<Permutation, Monomial>, int> columns;
    SparseEchelon<Fp> ech;
    for (const auto& w : perms) {
      OperatorComponent t = rep.tau(v, w).raised(kmax);
      for (const auto& m : monos) {
        ++res.words;
        SparseEchelon<Fp>::Vec row;
        MPoly xm = MPoly::term(m, 1);
        for (const auto& [u, nu] : t.numerators) {
          const MPoly entry = nu * xm.act(u);
          for (const auto& [mm, c] : entry.terms()) {
            auto key = std::make_pair(u, mm);
            auto it = columns.find(key);
            if (it == columns.end()) it = columns.emplace(key, static_cast<int>(columns.size())).first;
            row[it->second] = Fp(c);
          }
        }
        if (ech.insert(std::move(row))) ++res.rank;
      }
    }
  }
  return res;
}

}  // namespace qh
