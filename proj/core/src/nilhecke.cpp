#include "qhecke/nilhecke.hpp"

#include <mutex>
#include <sstream>

namespace qh {

NilHeckeElement NilHeckeElement::poly(int n, const MPoly& p) {
  NilHeckeElement e(n);
  e.add_term(Permutation::identity(n), p);
  return e;
}

NilHeckeElement NilHeckeElement::T(const Permutation& w, const MPoly& p) {
  NilHeckeElement e(w.n());
  e.add_term(w, p);
  return e;
}

MPoly NilHeckeElement::coeff(const Permutation& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? MPoly() : it->second;
}

void NilHeckeElement::add_term(const Permutation& w, const MPoly& p) {
  if (w.n() != n_) throw MathError("nil Hecke rank mismatch");
  if (p.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, p);
    return;
  }
  it->second += p;
  if (it->second.is_zero()) terms_.erase(it);
}

NilHeckeElement& NilHeckeElement::operator+=(const NilHeckeElement& o) {
  for (const auto& [w, p] : o.terms_) add_term(w, p);
  return *this;
}

NilHeckeElement& NilHeckeElement::operator-=(const NilHeckeElement& o) {
  for (const auto& [w, p] : o.terms_) add_term(w, -p);
  return *this;
}

NilHeckeElement NilHeckeElement::scaled(const MPoly& p) const {
  NilHeckeElement r(n_);
  for (const auto& [w, c] : terms_) r.add_term(w, p * c);
  return r;
}

std::optional<int> NilHeckeElement::degree() const {
  std::optional<int> d;
  for (const auto& [w, p] : terms_) {
    if (!p.is_homogeneous()) return std::nullopt;
    int e = 2 * p.degree() - 2 * w.length();
    if (d && *d != e) return std::nullopt;
    d = e;
  }
  return d;
}

std::string NilHeckeElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, p] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << p.str() << ")";
    if (!w.is_identity()) os << "*T" << w.str();
  }
  return os.str();
}

namespace {

// T_i * (sum_u P_u T_u)
NilHeckeElement left_T(int i, const NilHeckeElement& a) {
  NilHeckeElement r(a.n());
  for (const auto& [u, p] : a.terms()) {
    if (!u.left_descent(i)) r.add_term(u.left_mul_simple(i), p.swapped(i, i + 1));
    r.add_term(u, demazure(i, p));
  }
  return r;
}

struct TQCache {
  std::mutex mu;
  std::map<std::pair<Permutation, Monomial>, NilHeckeElement> table;
};

TQCache& tq_cache() {
  static TQCache c;
  return c;
}

NilHeckeElement T_times_monomial(const Permutation& w, const Monomial& m) {
  auto& cache = tq_cache();
  {
    std::lock_guard<std::mutex> lock(cache.mu);
    auto it = cache.table.find({w, m});
    if (it != cache.table.end()) return it->second;
  }
  const int n = w.n();
  NilHeckeElement cur = NilHeckeElement::poly(n, MPoly::term(m, 1));
  const auto& letters = canonical_letters(w);
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) cur = left_T(*it, cur);
  std::lock_guard<std::mutex> lock(cache.mu);
  cache.table.emplace(std::make_pair(w, m), cur);
  return cur;
}

}  // namespace

NilHeckeElement T_times_poly(const Permutation& w, const MPoly& p) {
  NilHeckeElement r(w.n());
  for (const auto& [m, c] : p.terms()) {
    auto t = T_times_monomial(w, m);
    for (const auto& [u, q] : t.terms()) r.add_term(u, q.scaled(c));
  }
  return r;
}

NilHeckeElement multiply(const NilHeckeElement& a, const NilHeckeElement& b) {
  if (a.n() != b.n()) throw MathError("nil Hecke rank mismatch");
  const int n = a.n();
  NilHeckeElement r(n);
  for (const auto& [w, p] : a.terms())
    for (const auto& [w2, q] : b.terms()) {
      NilHeckeElement mid = T_times_poly(w, q);
      for (const auto& [u, c] : mid.terms()) {
        Permutation uw = u * w2;
        if (uw.length() != u.length() + w2.length()) continue;
        r.add_term(uw, p * c);
      }
    }
  return r;
}

NilHeckeElement operator*(const NilHeckeElement& a, const NilHeckeElement& b) { return multiply(a, b); }

MPoly apply_to_polynomial(const NilHeckeElement& a, const MPoly& p) {
  MPoly r;
  for (const auto& [w, c] : a.terms()) r += c * demazure_word(w, p);
  return r;
}

NilHeckeElement b_n(int n) {
  return multiply(NilHeckeElement::T(longest_element(n)), NilHeckeElement::poly(n, staircase(n)));
}

long long trace_t0(const NilHeckeElement& a) {
  for (const auto& [w, p] : a.terms())
    if (!p.is_constant()) throw MathError("t0 is defined on the finite nil Hecke algebra only");
  MPoly c = a.coeff(longest_element(a.n()));
  return static_cast<long long>(c.constant_term());
}

MPoly trace_t(const NilHeckeElement& a) {
  const Permutation w0 = longest_element(a.n());
  return demazure_word(w0, a.coeff(w0));
}

NilHeckeElement group_element(const Permutation& w) {
  const int n = w.n();
  NilHeckeElement r = NilHeckeElement::one(n);
  for (int i : canonical_letters(w)) {
    NilHeckeElement s = NilHeckeElement::T(n, i).scaled(MPoly::var(i) - MPoly::var(i + 1)) + NilHeckeElement::one(n);
    r = multiply(r, s);
  }
  return r;
}

MPoly trace_tprime(const NilHeckeElement& a) {
  static std::mutex mu;
  static std::map<int, NilHeckeElement> w0_cache;
  NilHeckeElement w0e;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = w0_cache.find(a.n());
    if (it == w0_cache.end()) it = w0_cache.emplace(a.n(), group_element(longest_element(a.n()))).first;
    w0e = it->second;
  }
  return trace_t(multiply(a, w0e));
}

NilHeckeElement nakayama_gamma(const NilHeckeElement& a) {
  const Permutation w0 = longest_element(a.n());
  NilHeckeElement r(a.n());
  for (const auto& [w, p] : a.terms()) {
    MPoly c = p.act(w0);
    if (w.length() % 2) c = -c;
    r.add_term(w0 * w * w0, c);
  }
  return r;
}

NilHeckeElement nakayama_sigma(const NilHeckeElement& a) {
  const Permutation w0 = longest_element(a.n());
  NilHeckeElement r(a.n());
  for (const auto& [w, p] : a.terms()) {
    if (!p.is_constant()) throw MathError("sigma is defined on the finite nil Hecke algebra only");
    r.add_term(w0 * w * w0, p);
  }
  return r;
}

RightForm to_right_form(const NilHeckeElement& a) {
  RightForm out;
  auto add = [](RightForm& f, const Permutation& u, const MPoly& p) {
    if (p.is_zero()) return;
    auto it = f.find(u);
    if (it == f.end()) {
      f.emplace(u, p);
    } else {
      it->second += p;
      if (it->second.is_zero()) f.erase(it);
    }
  };
  for (const auto& [w, p] : a.terms()) {
    // P T_i = T_i s_i(P) + d_i(P), pushed through the letters of w
    RightForm state;
    state.emplace(Permutation::identity(a.n()), p);
    for (int i : canonical_letters(w)) {
      RightForm next;
      for (const auto& [u, r] : state) {
        if (!u.right_descent(i)) add(next, u.right_mul_simple(i), r.swapped(i, i + 1));
        add(next, u, demazure(i, r));
      }
      state = std::move(next);
    }
    for (const auto& [u, r] : state) add(out, u, r);
  }
  return out;
}

NilHeckeElement from_right_form(int n, const RightForm& r) {
  NilHeckeElement out(n);
  for (const auto& [w, p] : r) out += multiply(NilHeckeElement::T(w), NilHeckeElement::poly(n, p));
  return out;
}

std::vector<NilHeckeElement> pbw_basis(int n, int max_exp) {
  std::vector<NilHeckeElement> out;
  for (const auto& m : monomials_up_to(n, max_exp))
    for (const auto& w : all_permutations(n)) out.push_back(NilHeckeElement::T(w, MPoly::term(m, 1)));
  return out;
}

RankBookkeeping rank_bookkeeping(int n, int cutoff) {
  const int top = n * (n - 1) / 2;
  RankBookkeeping rb;
  for (int s = 0; s <= cutoff + top; ++s) {
    long count = static_cast<long>(monomials_of_degree(n, s).size());
    for (const auto& w : all_permutations(n)) {
      int d = s - w.length();
      if (d <= cutoff) rb.enumerated.add_term(d, count);
    }
  }
  Laurent p = poincare_polynomial(n);
  rb.graded_rank = p * p.inverted();
  rb.predicted = truncate_above(symmetric_ring_series_formula(n, cutoff + top) * rb.graded_rank, cutoff);
  rb.matches = rb.enumerated == rb.predicted;
  return rb;
}

}  // namespace qh
