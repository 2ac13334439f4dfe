#include "qhecke/klr.hpp"

#include <deque>
#include <set>
#include <sstream>

namespace qh {

MPoly KLRElement::coeff(const KLRKey& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? MPoly() : it->second;
}

void KLRElement::add_term(const Colours& v, const Permutation& w, const MPoly& p) {
  if (static_cast<int>(v.size()) != n_ || w.n() != n_) throw MathError("KLR size mismatch");
  if (p.is_zero()) return;
  KLRKey k{v, w};
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(std::move(k), p);
    return;
  }
  it->second += p;
  if (it->second.is_zero()) terms_.erase(it);
}

KLRElement& KLRElement::operator+=(const KLRElement& o) {
  for (const auto& [k, p] : o.terms_) add_term(k.first, k.second, p);
  return *this;
}

KLRElement& KLRElement::operator-=(const KLRElement& o) {
  for (const auto& [k, p] : o.terms_) add_term(k.first, k.second, -p);
  return *this;
}

KLRElement KLRElement::times_poly(const MPoly& p) const {
  KLRElement r(n_);
  for (const auto& [k, c] : terms_) r.add_term(k.first, k.second, c * p);
  return r;
}

std::string KLRElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, p] : terms_) {
    const auto& letters = canonical_letters(k.second);
    for (const auto& [m, c] : p.terms()) {
      if (!first) os << " + ";
      first = false;
      os << c << " * tau[";
      for (std::size_t i = 0; i < letters.size(); ++i) os << (i ? "," : "") << letters[i];
      os << "] x[";
      for (int i = 0; i < n_; ++i) os << (i ? "," : "") << m[i];
      os << "] e" << sequence_str(k.first);
    }
  }
  return os.str();
}

std::vector<int> apply_move(std::vector<int> word, const BraidMove& m) {
  if (m.braid) {
    int a = word[m.pos], b = word[m.pos + 1];
    word[m.pos] = b;
    word[m.pos + 1] = a;
    word[m.pos + 2] = b;
  } else {
    std::swap(word[m.pos], word[m.pos + 1]);
  }
  return word;
}

namespace {

std::vector<BraidMove> moves_of(const std::vector<int>& w) {
  std::vector<BraidMove> out;
  for (int p = 0; p + 1 < static_cast<int>(w.size()); ++p) {
    if (std::abs(w[p] - w[p + 1]) > 1) out.push_back({p, false});
    if (p + 2 < static_cast<int>(w.size()) && w[p] == w[p + 2] && std::abs(w[p] - w[p + 1]) == 1)
      out.push_back({p, true});
  }
  return out;
}

template <class Done>
std::vector<BraidMove> bfs_moves(const std::vector<int>& from, Done done) {
  std::map<std::vector<int>, std::pair<std::vector<int>, BraidMove>> parent;
  std::deque<std::vector<int>> queue{from};
  parent.emplace(from, std::make_pair(from, BraidMove{-1, false}));
  while (!queue.empty()) {
    auto w = queue.front();
    queue.pop_front();
    if (done(w)) {
      std::vector<BraidMove> path;
      while (w != from) {
        const auto& [prev, mv] = parent.at(w);
        path.push_back(mv);
        w = prev;
      }
      return {path.rbegin(), path.rend()};
    }
    for (const auto& mv : moves_of(w)) {
      auto next = apply_move(w, mv);
      if (parent.emplace(next, std::make_pair(w, mv)).second) queue.push_back(next);
    }
  }
  throw MathError("words are not connected by braid moves");
}

std::mutex& path_mutex() {
  static std::mutex mu;
  return mu;
}

}  // namespace

std::vector<BraidMove> braid_path(const std::vector<int>& from, const std::vector<int>& to) {
  static std::map<std::pair<std::vector<int>, std::vector<int>>, std::vector<BraidMove>> cache;
  {
    std::lock_guard<std::mutex> lock(path_mutex());
    auto it = cache.find({from, to});
    if (it != cache.end()) return it->second;
  }
  auto path = bfs_moves(from, [&](const std::vector<int>& w) { return w == to; });
  std::lock_guard<std::mutex> lock(path_mutex());
  cache.emplace(std::make_pair(from, to), path);
  return path;
}

std::vector<BraidMove> braid_path_to_prefix(const std::vector<int>& from, int i) {
  static std::map<std::pair<std::vector<int>, int>, std::vector<BraidMove>> cache;
  {
    std::lock_guard<std::mutex> lock(path_mutex());
    auto it = cache.find({from, i});
    if (it != cache.end()) return it->second;
  }
  auto path = bfs_moves(from, [&](const std::vector<int>& w) { return !w.empty() && w[0] == i; });
  std::lock_guard<std::mutex> lock(path_mutex());
  cache.emplace(std::make_pair(from, i), path);
  return path;
}

KLRAlgebra::KLRAlgebra(QuiverData quiver, int n) : quiver_(std::move(quiver)), n_(n) {
  if (n < 1 || n > 8) throw UsageError("KLR size n must be in 1..8");
}

KLRElement KLRAlgebra::idempotent(const Colours& v) const { return poly(MPoly(1), v); }

KLRElement KLRAlgebra::x(int a, const Colours& v) const { return poly(MPoly::var(a), v); }

KLRElement KLRAlgebra::tau(int i, const Colours& v) const { return word({i}, MPoly(1), v); }

KLRElement KLRAlgebra::basis_element(const Colours& v, const Permutation& w, const Monomial& m) const {
  KLRElement e(n_);
  e.add_term(v, w, MPoly::term(m, 1));
  return e;
}

KLRElement KLRAlgebra::word(const std::vector<int>& letters, const MPoly& p, const Colours& v) const {
  if (static_cast<int>(v.size()) != n_) throw UsageError("idempotent has wrong length");
  for (int c : v)
    if (c < 1 || c > quiver_.vertices()) throw UsageError("idempotent colour out of range");
  for (int l : letters)
    if (l < 1 || l >= n_) throw UsageError("tau index out of range");
  KLRElement e(n_);
  for (const auto& [u, s] : normalize(letters, v)) e.add_term(v, u, s * p);
  return e;
}

std::vector<WordTerm> KLRAlgebra::push_right(const MPoly& p, const std::vector<int>& letters,
                                             const Colours& v) const {
  std::map<std::vector<int>, MPoly> state;
  state.emplace(std::vector<int>{}, p);
  for (std::size_t k = 0; k < letters.size(); ++k) {
    const int l = letters[k];
    Colours z = word_target(std::vector<int>(letters.begin() + k + 1, letters.end()), v);
    const bool same = z[l - 1] == z[l];
    std::map<std::vector<int>, MPoly> next;
    for (const auto& [prefix, q] : state) {
      auto with = prefix;
      with.push_back(l);
      next[with] += q.swapped(l, l + 1);
      if (same) next[prefix] += demazure(l, q);
    }
    state.clear();
    for (auto& [w, q] : next)
      if (!q.is_zero()) state.emplace(w, std::move(q));
  }
  std::vector<WordTerm> out;
  for (auto& [w, q] : state) out.push_back({w, q});
  return out;
}

MPoly KLRAlgebra::braid_correction(int i, const Colours& y) const {
  if (!(y[i - 1] == y[i + 1] && y[i - 1] != y[i])) return {};
  MPoly xi = MPoly::var(i), xj = MPoly::var(i + 1), xk = MPoly::var(i + 2);
  MPoly diff = quiver_.Q(y[i - 1], y[i], xk, xj) - quiver_.Q(y[i - 1], y[i], xi, xj);
  return diff.divide_linear(i + 2, i);
}

KLRAlgebra::Comb KLRAlgebra::normalize_terms(const std::vector<WordTerm>& terms, const Colours& v) const {
  Comb out;
  for (const auto& t : terms)
    for (const auto& [u, s] : normalize(t.letters, v)) {
      auto& slot = out[u];
      slot += s * t.poly;
      if (slot.is_zero()) out.erase(u);
    }
  return out;
}

KLRAlgebra::Comb KLRAlgebra::rewrite_difference(const std::vector<int>& from, const std::vector<int>& to,
                                                const Colours& v) const {
  Comb diff;
  std::vector<int> cur = from;
  for (const auto& mv : braid_path(from, to)) {
    if (mv.braid) {
      std::vector<int> tail(cur.begin() + mv.pos + 3, cur.end());
      Colours y = word_target(tail, v);
      int j = std::min(cur[mv.pos], cur[mv.pos + 1]);
      MPoly c = braid_correction(j, y);
      if (!c.is_zero()) {
        // (j+1, j, j+1) = (j, j+1, j) + C
        if (cur[mv.pos] == j) c = -c;
        std::vector<WordTerm> pushed = push_right(c, tail, v);
        for (auto& t : pushed) t.letters.insert(t.letters.begin(), cur.begin(), cur.begin() + mv.pos);
        for (const auto& [u, s] : normalize_terms(pushed, v)) {
          auto& slot = diff[u];
          slot += s;
          if (slot.is_zero()) diff.erase(u);
        }
      }
    }
    cur = apply_move(cur, mv);
  }
  return diff;
}

KLRAlgebra::Comb KLRAlgebra::left_tau(int i, const Permutation& u, const Colours& v) const {
  auto key = std::make_pair(std::make_pair(i, u), v);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = left_cache_.find(key);
    if (it != left_cache_.end()) return it->second;
  }
  Comb out;
  auto add = [&out](const Permutation& w, const MPoly& p) {
    auto& slot = out[w];
    slot += p;
    if (slot.is_zero()) out.erase(w);
  };
  const auto& cu = canonical_letters(u);
  if (!u.left_descent(i)) {
    std::vector<int> from{i};
    from.insert(from.end(), cu.begin(), cu.end());
    Permutation target = u.left_mul_simple(i);
    add(target, MPoly(1));
    for (const auto& [w, p] : rewrite_difference(from, canonical_letters(target), v)) add(w, p);
  } else {
    std::vector<int> alt = cu;
    for (const auto& mv : braid_path_to_prefix(cu, i)) alt = apply_move(alt, mv);
    Comb diff = rewrite_difference(cu, alt, v);
    std::vector<int> rest(alt.begin() + 1, alt.end());
    Colours z = word_target(rest, v);
    MPoly q = quiver_.Q(z[i - 1], z[i], MPoly::var(i), MPoly::var(i + 1));
    for (const auto& [w, p] : normalize_terms(push_right(q, rest, v), v)) add(w, p);
    for (const auto& [w, p] : diff)
      for (const auto& [w2, p2] : left_tau(i, w, v)) add(w2, p2 * p);
  }
  std::lock_guard<std::mutex> lock(mu_);
  left_cache_.emplace(key, out);
  return out;
}

KLRAlgebra::Comb KLRAlgebra::normalize(const std::vector<int>& letters, const Colours& v) const {
  if (letters.empty()) return Comb{{Permutation::identity(n_), MPoly(1)}};
  auto key = std::make_pair(letters, v);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = normal_cache_.find(key);
    if (it != normal_cache_.end()) return it->second;
  }
  Comb rest = normalize(std::vector<int>(letters.begin() + 1, letters.end()), v);
  Comb out;
  for (const auto& [u, s] : rest)
    for (const auto& [w, p] : left_tau(letters[0], u, v)) {
      auto& slot = out[w];
      slot += p * s;
      if (slot.is_zero()) out.erase(w);
    }
  std::lock_guard<std::mutex> lock(mu_);
  normal_cache_.emplace(key, out);
  return out;
}

KLRElement KLRAlgebra::multiply(const KLRElement& a, const KLRElement& b) const {
  if (a.n() != n_ || b.n() != n_) throw MathError("KLR size mismatch");
  KLRElement out(n_);
  for (const auto& [kb, pb] : b.terms()) {
    Colours tb = target(kb);
    const auto& wb = canonical_letters(kb.second);
    for (const auto& [ka, pa] : a.terms()) {
      if (ka.first != tb) continue;
      const auto& wa = canonical_letters(ka.second);
      for (const auto& t : push_right(pa, wb, kb.first)) {
        std::vector<int> letters = wa;
        letters.insert(letters.end(), t.letters.begin(), t.letters.end());
        MPoly tail = t.poly * pb;
        for (const auto& [u, s] : normalize(letters, kb.first)) out.add_term(kb.first, u, s * tail);
      }
    }
  }
  return out;
}

int KLRAlgebra::tau_degree(const std::vector<int>& letters, const Colours& v) const {
  Colours z = v;
  int d = 0;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    d -= quiver_.cartan(z[*it - 1], z[*it]);
    std::swap(z[*it - 1], z[*it]);
  }
  return d;
}

std::optional<int> KLRAlgebra::degree(const KLRElement& e) const {
  std::optional<int> d;
  for (const auto& [k, p] : e.terms()) {
    if (!p.is_homogeneous()) return std::nullopt;
    int t = 2 * p.degree() + tau_degree(canonical_letters(k.second), k.first);
    if (d && *d != t) return std::nullopt;
    d = t;
  }
  return d;
}

MPoly KLRAlgebra::act_tau(int i, const Colours& v, const MPoly& f) const {
  if (v[i - 1] == v[i]) return demazure(i, f);
  return quiver_.P(v[i - 1], v[i], MPoly::var(i + 1), MPoly::var(i)) * f.swapped(i, i + 1);
}

MPoly KLRAlgebra::act_term(const KLRKey& k, const MPoly& p, const MPoly& f) const {
  MPoly g = p * f;
  Colours z = k.first;
  const auto& letters = canonical_letters(k.second);
  for (auto it = letters.rbegin(); it != letters.rend() && !g.is_zero(); ++it) {
    g = act_tau(*it, z, g);
    std::swap(z[*it - 1], z[*it]);
  }
  return g;
}

std::map<Colours, MPoly> KLRAlgebra::act(const KLRElement& e, const std::map<Colours, MPoly>& f) const {
  std::map<Colours, MPoly> out;
  for (const auto& [k, p] : e.terms()) {
    auto it = f.find(k.first);
    if (it == f.end()) continue;
    MPoly g = act_term(k, p, it->second);
    if (g.is_zero()) continue;
    auto& slot = out[target(k)];
    slot += g;
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

std::vector<KLRKey> KLRAlgebra::keys_from(const Colours& v) const {
  std::vector<KLRKey> out;
  for (const auto& w : all_permutations(n_)) out.emplace_back(v, w);
  return out;
}

}  // namespace qh
