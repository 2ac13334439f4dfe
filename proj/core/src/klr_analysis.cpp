#include "qhecke/klr_analysis.hpp"

#include "qhecke/linalg.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <functional>
#include <set>
#include <tuple>

namespace qh {

namespace {

MPoly act_word(const KLRAlgebra& A, const std::vector<int>& letters, const Colours& v, MPoly f) {
  Colours z = v;
  for (auto it = letters.rbegin(); it != letters.rend() && !f.is_zero(); ++it) {
    f = A.act_tau(*it, z, f);
    std::swap(z[*it - 1], z[*it]);
  }
  return f;
}

std::string describe(const std::string& rel, const Colours& v, const MPoly& f) {
  return rel + " at e" + sequence_str(v) + " on " + f.str(variable_names(static_cast<int>(v.size()), {}));
}

}  // namespace

RelationReport check_relations(const KLRAlgebra& A, int max_exp) {
  RelationReport rep;
  const int n = A.n();
  const auto& Q = A.quiver();
  auto expect = [&](bool ok, const std::string& rel, const Colours& v, const MPoly& f) {
    ++rep.checked;
    if (!ok) rep.failures.push_back(describe(rel, v, f));
  };
  for (const auto& v : A.idempotents())
    for (const auto& m : monomials_up_to(n, max_exp)) {
      const MPoly f = MPoly::term(m, 1);
      for (int i = 1; i < n; ++i) {
        MPoly quad = Q.Q(v[i - 1], v[i], MPoly::var(i), MPoly::var(i + 1));
        expect(act_word(A, {i, i}, v, f) == quad * f, "tau_" + std::to_string(i) + "^2 = Q", v, f);
        for (int j = i + 2; j < n; ++j)
          expect(act_word(A, {i, j}, v, f) == act_word(A, {j, i}, v, f),
                 "tau_" + std::to_string(i) + " tau_" + std::to_string(j) + " commute", v, f);
        for (int a = 1; a <= n; ++a) {
          const int sa = a == i ? i + 1 : (a == i + 1 ? i : a);
          MPoly lhs = act_word(A, {i}, v, MPoly::var(a) * f) - MPoly::var(sa) * act_word(A, {i}, v, f);
          MPoly rhs;
          if (v[i - 1] == v[i]) {
            if (a == i) rhs = -f;
            if (a == i + 1) rhs = f;
          }
          expect(lhs == rhs, "tau_" + std::to_string(i) + " x_" + std::to_string(a), v, f);
        }
        if (i + 1 < n) {
          MPoly lhs = act_word(A, {i + 1, i, i + 1}, v, f) - act_word(A, {i, i + 1, i}, v, f);
          expect(lhs == A.braid_correction(i, v) * f, "braid at " + std::to_string(i), v, f);
        }
      }
    }
  return rep;
}

GradedDim hom_graded_dimension_enumerated(const KLRAlgebra& A, const Colours& v, const Colours& vprime) {
  GradedDim g;
  for (const auto& h : all_permutations(A.n()))
    if (act_on_sequence(h, v) == vprime) g.add_term(A.tau_degree(canonical_letters(h), v), 1);
  return g;
}

GradedDim hom_graded_dimension(const QuiverData& quiver, const Colours& v, const Colours& vprime) {
  if (v.size() != vprime.size()) throw UsageError("idempotents have different lengths");
  const int m = quiver.vertices();
  std::vector<std::vector<int>> gamma(m + 1), gammap(m + 1);
  for (int r = 0; r < static_cast<int>(v.size()); ++r) {
    if (v[r] < 1 || v[r] > m || vprime[r] < 1 || vprime[r] > m) throw UsageError("colour out of range");
    gamma[v[r]].push_back(r + 1);
    gammap[vprime[r]].push_back(r + 1);
  }
  for (int s = 1; s <= m; ++s)
    if (gamma[s].size() != gammap[s].size()) return {};
  std::vector<int> colours;
  std::vector<std::vector<Permutation>> factors;
  for (int s = 1; s <= m; ++s)
    if (!gamma[s].empty()) {
      colours.push_back(s);
      factors.push_back(all_permutations(static_cast<int>(gamma[s].size())));
    }
  GradedDim g;
  std::vector<std::size_t> idx(factors.size(), 0);
  while (true) {
    // strands (colour, start, end)
    std::vector<std::array<int, 3>> strands;
    for (std::size_t c = 0; c < colours.size(); ++c) {
      const int s = colours[c];
      const auto& w = factors[c][idx[c]];
      for (int a = 1; a <= w.n(); ++a) strands.push_back({s, gamma[s][a - 1], gammap[s][w(a) - 1]});
    }
    int e = 0;
    for (const auto& p : strands)
      for (const auto& q : strands)
        if (p[1] < q[1] && p[2] > q[2]) e += quiver.cartan(p[0], q[0]);
    g.add_term(e, 1);
    std::size_t c = 0;
    while (c < idx.size() && ++idx[c] == factors[c].size()) idx[c++] = 0;
    if (c == idx.size()) break;
  }
  return g;
}

PrimeWords::Terms PrimeWords::word(const std::vector<int>& letters, const MPoly& p) const {
  Terms t;
  if (!p.is_zero()) t.emplace(letters, p);
  return t;
}

PrimeWords::Terms PrimeWords::left_poly(const MPoly& p, const std::vector<int>& letters) const {
  Terms t;
  for (const auto& wt : A_.push_right(p, letters, v_)) accumulate(t, word(wt.letters, wt.poly));
  return t;
}

void PrimeWords::accumulate(Terms& into, const Terms& t, const Integer& scale) {
  for (const auto& [w, p] : t) {
    auto& slot = into[w];
    slot += p.scaled(scale);
    if (slot.is_zero()) into.erase(w);
  }
}

PrimeWords::Terms PrimeWords::reduce(const Terms& t) const {
  Terms out;
  for (const auto& [w, p] : t)
    for (const auto& [w2, p2] : reduce_word(w)) {
      auto& slot = out[w2];
      slot += p2 * p;
      if (slot.is_zero()) out.erase(w2);
    }
  return out;
}

PrimeWords::Terms PrimeWords::reduce_word(const std::vector<int>& letters) const {
  auto cached = cache_.find(letters);
  if (cached != cache_.end()) return cached->second;
  // the class of words reachable by R'_Q moves that carry no correction
  std::set<std::vector<int>> seen{letters};
  std::deque<std::vector<int>> queue{letters};
  while (!queue.empty()) {
    auto w = queue.front();
    queue.pop_front();
    for (int p = 0; p + 1 < static_cast<int>(w.size()); ++p) {
      if (std::abs(w[p] - w[p + 1]) > 1) {
        auto next = apply_move(w, {p, false});
        if (seen.insert(next).second) queue.push_back(next);
      }
      if (p + 2 < static_cast<int>(w.size()) && w[p] == w[p + 2] && std::abs(w[p] - w[p + 1]) == 1) {
        Colours y = word_target(std::vector<int>(w.begin() + p + 3, w.end()), v_);
        const int j = std::min(w[p], w[p + 1]);
        if (y[j - 1] == y[j + 1] && y[j - 1] != y[j]) continue;
        auto next = apply_move(w, {p, true});
        if (seen.insert(next).second) queue.push_back(next);
      }
    }
  }
  Terms out;
  bool rewritten = false;
  for (const auto& w : seen) {
    for (int p = 0; p + 1 < static_cast<int>(w.size()); ++p) {
      if (w[p] != w[p + 1]) continue;
      std::vector<int> tail(w.begin() + p + 2, w.end());
      Colours z = word_target(tail, v_);
      const int l = w[p];
      MPoly q = A_.quiver().Q(z[l - 1], z[l], MPoly::var(l), MPoly::var(l + 1));
      for (const auto& wt : A_.push_right(q, tail, v_)) {
        std::vector<int> shorter(w.begin(), w.begin() + p);
        shorter.insert(shorter.end(), wt.letters.begin(), wt.letters.end());
        for (const auto& [w2, p2] : reduce_word(shorter)) {
          auto& slot = out[w2];
          slot += p2 * wt.poly;
          if (slot.is_zero()) out.erase(w2);
        }
      }
      rewritten = true;
      break;
    }
    if (rewritten) break;
  }
  if (!rewritten) out.emplace(*seen.begin(), MPoly(1));
  cache_.emplace(letters, out);
  return out;
}

TorsionResult torsion_check(const KLRAlgebra& A, const Colours& v, int i) {
  if (i < 1 || i + 2 > A.n()) throw UsageError("torsion check needs 1 <= i <= n-2");
  TorsionResult res;
  res.v = v;
  res.i = i;
  PrimeWords H(A, v);
  const MPoly c = A.braid_correction(i, v);
  PrimeWords::Terms a = H.word({i + 1, i, i + 1}, MPoly(1));
  PrimeWords::accumulate(a, H.word({i, i + 1, i}, MPoly(1)), -1);
  PrimeWords::accumulate(a, H.word({}, c), -1);

  res.discrepancy_zero = H.reduce(a).empty();
  PrimeWords::Terms ta;
  for (const auto& [w, p] : a) {
    std::vector<int> longer{i};
    longer.insert(longer.end(), w.begin(), w.end());
    PrimeWords::accumulate(ta, H.word(longer, p));
  }
  res.annihilated = H.reduce(ta).empty();
  const Colours u = word_target({i + 1, i, i + 1}, v);
  res.multiplier = res.discrepancy_zero ? MPoly(1) : A.quiver().Q(u[i - 1], u[i], MPoly::var(i), MPoly::var(i + 1));

  KLRElement in_h = A.word({i + 1, i, i + 1}, MPoly(1), v) - A.word({i, i + 1, i}, MPoly(1), v) - A.poly(c, v);
  res.holds_in_h = in_h.is_zero();
  return res;
}

namespace {

struct ColourLayout {
  std::vector<int> colours;          // colours present, increasing
  std::map<int, int> offset;         // first variable index (0-based) of each colour
  std::map<int, int> count;
};

ColourLayout layout_of(const Colours& v) {
  ColourLayout L;
  for (int c : v) ++L.count[c];
  int off = 0;
  for (const auto& [c, k] : L.count) {
    L.colours.push_back(c);
    L.offset[c] = off;
    off += k;
  }
  return L;
}

// vectors indexed by (idempotent, permutation, monomial)
class Coordinates {
 public:
  SparseEchelon<Rational>::Vec vec(const KLRElement& e) {
    SparseEchelon<Rational>::Vec out;
    for (const auto& [k, p] : e.terms())
      for (const auto& [m, c] : p.terms()) {
        auto key = std::make_tuple(k.first, k.second, m);
        auto it = index_.find(key);
        if (it == index_.end()) it = index_.emplace(key, static_cast<int>(index_.size())).first;
        out[it->second] = Rational(c);
      }
    return out;
  }

 private:
  std::map<std::tuple<Colours, Permutation, Monomial>, int> index_;
};

void build_span(const KLRAlgebra& A, const Colours& v, const std::vector<KLRElement>& gens, int word_bound,
                Coordinates& coords, SparseEchelon<Rational>& span) {
  std::vector<KLRElement> basis;
  const auto monos = monomials_up_to(A.n(), word_bound);
  for (const auto& u : sequence_orbit(v))
    for (const auto& w : all_permutations(A.n()))
      for (const auto& m : monos) basis.push_back(A.basis_element(u, w, m));
  for (const auto& g : gens)
    for (const auto& b : basis) {
      KLRElement gb = A.multiply(g, b);
      if (gb.is_zero()) continue;
      for (const auto& a : basis) {
        KLRElement agb = A.multiply(a, gb);
        if (!agb.is_zero()) span.insert(coords.vec(agb));
      }
    }
}

}  // namespace

KLRElement central_element(const KLRAlgebra& A, const Colours& v, const MPoly& P) {
  const ColourLayout L = layout_of(v);
  KLRElement out(A.n());
  for (const auto& u : sequence_orbit(v)) {
    std::vector<MPoly> images(u.size());
    std::map<int, int> seen;
    for (int pos = 0; pos < static_cast<int>(u.size()); ++pos) {
      const int c = u[pos];
      images[L.offset.at(c) + seen[c]++] = MPoly::var(pos + 1);
    }
    out.add_term(u, Permutation::identity(A.n()), P.substitute(images));
  }
  return out;
}

bool in_bounded_ideal(const KLRAlgebra& A, const Colours& v, const std::vector<KLRElement>& gens, int word_bound,
                      const KLRElement& target) {
  Coordinates coords;
  SparseEchelon<Rational> span;
  build_span(A, v, gens, word_bound, coords, span);
  return span.contains(coords.vec(target));
}

CentralProbe central_ideal_probe(const KLRAlgebra& A, const Colours& v, const std::vector<KLRElement>& gens,
                                 int word_bound, int poly_bound) {
  CentralProbe res;
  bool any = false;
  for (const auto& g : gens) any = any || !g.is_zero();
  if (!any) throw UsageError("the ideal needs a nonzero generator");
  const ColourLayout L = layout_of(v);
  const int n = A.n();

  Coordinates coords;
  SparseEchelon<Rational> span;
  build_span(A, v, gens, word_bound, coords, span);

  // candidates: orbit sums of monomials under the product of symmetric groups
  constexpr int kTag = 1 << 28;
  std::vector<MPoly> candidates;
  SparseEchelon<Rational> residuals;
  for (int d = 0; d <= poly_bound; ++d) {
    std::set<Monomial> done;
    for (const auto& m : monomials_of_degree(n, d)) {
      Monomial canon = m;
      for (int c : L.colours) {
        auto b = canon.e.begin() + L.offset.at(c);
        std::sort(b, b + L.count.at(c), std::greater<>());
      }
      if (!done.insert(canon).second) continue;
      std::set<Monomial> orbit;
      // permute within each colour block independently
      std::vector<std::vector<std::uint8_t>> blocks;
      for (int c : L.colours)
        blocks.emplace_back(canon.e.begin() + L.offset.at(c), canon.e.begin() + L.offset.at(c) + L.count.at(c));
      for (auto& b : blocks) std::sort(b.begin(), b.end());
      std::function<void(std::size_t, Monomial)> rec = [&](std::size_t k, Monomial acc) {
        if (k == blocks.size()) {
          orbit.insert(acc);
          return;
        }
        auto b = blocks[k];
        do {
          Monomial next = acc;
          for (std::size_t r = 0; r < b.size(); ++r) next.set(L.offset.at(L.colours[k]) + static_cast<int>(r), b[r]);
          rec(k + 1, next);
        } while (std::next_permutation(b.begin(), b.end()));
      };
      rec(0, Monomial::one());
      MPoly P;
      for (const auto& o : orbit) P += MPoly::term(o, 1);
      const int idx = static_cast<int>(candidates.size());
      candidates.push_back(P);
      auto row = span.reduce(coords.vec(central_element(A, v, P)));
      row[kTag + idx] = Rational(1);
      auto reduced = residuals.reduce(row);
      if (!reduced.empty() && reduced.begin()->first >= kTag) {
        QPoly combo;
        for (const auto& [col, c] : reduced) combo += to_rational(candidates[col - kTag]).scaled(c);
        Integer den = 1;
        for (const auto& [mm, c] : combo.terms()) den = boost::multiprecision::lcm(den, denominator(c));
        MPoly clean;
        for (const auto& [mm, c] : combo.terms()) clean += MPoly::term(mm, numerator(c) * (den / denominator(c)));
        Integer g = 0;
        for (const auto& [mm, c] : clean.terms()) g = boost::multiprecision::gcd(g, c);
        if (!clean.terms().empty() && clean.terms().front().second < 0) g = -g;
        res.symmetric = clean.map_coeffs([&](const Integer& c) { return Integer(c / g); });
        res.found = true;
        res.degree = d;
        return res;
      }
      residuals.insert(row);
    }
  }
  res.note = "no central element of degree <= " + std::to_string(poly_bound) + " within word bound " +
             std::to_string(word_bound) + " (inconclusive)";
  return res;
}

}  // namespace qh
