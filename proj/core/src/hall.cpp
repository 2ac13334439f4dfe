#include "qhecke/hall.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace qh {

HallQuiver HallQuiver::from(const QuiverData& q) {
  HallQuiver h;
  h.vertices = q.vertices();
  for (int i = 1; i <= q.vertices(); ++i)
    for (int j = 1; j <= q.vertices(); ++j)
      for (int k = 0; k < q.arrows(i, j); ++k) h.arrows.emplace_back(i - 1, j - 1);
  return h;
}

HallQuiver HallQuiver::single_vertex() { return HallQuiver{1, {}}; }

HallQuiver HallQuiver::jordan() { return HallQuiver{1, {{0, 0}}}; }

int HallQuiver::euler(const DimVector& a, const DimVector& b) const {
  int r = 0;
  for (int i = 0; i < vertices; ++i) r += a[i] * b[i];
  for (const auto& [s, t] : arrows) r -= a[s] * b[t];
  return r;
}

std::string VNumber::str() const {
  if (b == 0) return a.str();
  std::string bv = b == 1 ? "v" : b == -1 ? "-v" : b.str() + "*v";
  if (a == 0) return bv;
  if (b < 0) return a.str() + " - " + (b == -1 ? "v" : Rational(-b).str() + "*v");
  return a.str() + " + " + bv;
}

VNumber vmul(const VNumber& x, const VNumber& y, int q) {
  return {x.a * y.a + x.b * y.b * q, x.a * y.b + x.b * y.a};
}

VNumber vpow(int k, int q) {
  const int h = k >= 0 ? k / 2 : -((-k + 1) / 2);
  Rational s = 1;
  for (int t = 0; t < std::abs(h); ++t) s *= q;
  if (h < 0) s = 1 / s;
  return (k - 2 * h) ? VNumber{0, s} : VNumber{s, 0};
}

VNumber HallElement::coeff(const ClassLabel& l) const {
  auto it = terms.find(l);
  return it == terms.end() ? VNumber{} : it->second;
}

void HallElement::add(const ClassLabel& l, const VNumber& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms.emplace(l, c);
  if (fresh) return;
  it->second.a += c.a;
  it->second.b += c.b;
  if (it->second.is_zero()) terms.erase(it);
}

HallElement& HallElement::operator+=(const HallElement& o) {
  for (const auto& [l, c] : o.terms) add(l, c);
  return *this;
}

HallElement& HallElement::operator-=(const HallElement& o) {
  for (const auto& [l, c] : o.terms) add(l, {-c.a, -c.b});
  return *this;
}

HallElement operator*(const VNumber& c, const HallElement& x) {
  HallElement r;
  r.q = x.q;
  for (const auto& [l, d] : x.terms) r.add(l, vmul(c, d, x.q));
  return r;
}

HallAlgebra::HallAlgebra(HallQuiver quiver, int q, std::uint64_t bound)
    : quiver_(std::move(quiver)), F_(q), bound_(bound) {
  for (const auto& [s, t] : quiver_.arrows)
    if (s < 0 || t < 0 || s >= quiver_.vertices || t >= quiver_.vertices) throw UsageError("arrow out of range");
}

std::uint64_t HallAlgebra::space_size(const DimVector& d) const {
  if (static_cast<int>(d.size()) != quiver_.vertices) throw UsageError("dimension vector has the wrong length");
  for (int x : d)
    if (x < 0) throw UsageError("negative dimension");
  std::uint64_t size = 1;
  for (const auto& [s, t] : quiver_.arrows)
    for (int k = 0; k < d[s] * d[t]; ++k) {
      size *= F_.q();
      if (size > bound_)
        throw UsageError("representation space exceeds the enumeration bound of " + std::to_string(bound_));
    }
  return size;
}

std::uint64_t HallAlgebra::encode(const QuiverRep& r) const {
  std::uint64_t code = 0;
  for (const auto& m : r.maps)
    for (auto x : m.e) code = code * F_.q() + x;
  return code;
}

QuiverRep HallAlgebra::decode(const DimVector& d, std::uint64_t code) const {
  QuiverRep r;
  r.dim = d;
  for (const auto& [s, t] : quiver_.arrows) r.maps.emplace_back(d[t], d[s]);
  for (auto m = r.maps.rbegin(); m != r.maps.rend(); ++m)
    for (auto x = m->e.rbegin(); x != m->e.rend(); ++x) {
      *x = static_cast<std::uint8_t>(code % F_.q());
      code /= F_.q();
    }
  return r;
}

const HallAlgebra::Table& HallAlgebra::table(const DimVector& d) const {
  std::lock_guard lock(mu_);
  if (auto it = tables_.find(d); it != tables_.end()) return *it->second;
  const std::uint64_t size = space_size(d);

  // generators of prod GL(d_i): transvections and one primitive diagonal entry per vertex
  struct Gen {
    int vertex;
    FqMatrix g, ginv;
  };
  std::vector<Gen> gens;
  for (int i = 0; i < quiver_.vertices; ++i) {
    const int n = d[i];
    if (n == 0) continue;
    auto push = [&](FqMatrix g) { gens.push_back({i, g, inverse(F_, g)}); };
    if (F_.q() > 2) {
      FqMatrix g = FqMatrix::identity(n);
      g.at(0, 0) = static_cast<std::uint8_t>(F_.primitive());
      push(g);
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (a != b) {
          FqMatrix g = FqMatrix::identity(n);
          g.at(a, b) = 1;
          push(g);
        }
  }
  std::uint64_t group = 1;
  for (int x : d) group *= gl_order(x, F_.q());

  auto t = std::make_unique<Table>();
  t->orbit_of.assign(size, -1);
  std::vector<std::uint64_t> stack;
  for (std::uint64_t code = 0; code < size; ++code) {
    if (t->orbit_of[code] >= 0) continue;
    const auto id = static_cast<std::int32_t>(t->classes.size());
    std::uint64_t count = 0;
    t->orbit_of[code] = id;
    stack.assign(1, code);
    while (!stack.empty()) {
      const std::uint64_t c = stack.back();
      stack.pop_back();
      ++count;
      const QuiverRep r = decode(d, c);
      for (const auto& g : gens) {
        QuiverRep s = r;
        for (std::size_t a = 0; a < quiver_.arrows.size(); ++a) {
          const auto [src, tgt] = quiver_.arrows[a];
          if (tgt == g.vertex) s.maps[a] = mul(F_, g.g, s.maps[a]);
          if (src == g.vertex) s.maps[a] = mul(F_, s.maps[a], g.ginv);
        }
        const std::uint64_t e = encode(s);
        if (t->orbit_of[e] < 0) {
          t->orbit_of[e] = id;
          stack.push_back(e);
        }
      }
    }
    t->classes.push_back({ClassLabel{d, code}, decode(d, code), count, group / count});
  }
  return *tables_.emplace(d, std::move(t)).first->second;
}

const std::vector<RepClass>& HallAlgebra::classes(const DimVector& d) const { return table(d).classes; }

ClassLabel HallAlgebra::classify(const QuiverRep& r) const {
  const Table& t = table(r.dim);
  return t.classes[t.orbit_of[encode(r)]].label;
}

const RepClass& HallAlgebra::find(const ClassLabel& l) const {
  const Table& t = table(l.dim);
  if (l.code >= t.orbit_of.size()) throw UsageError("unknown class");
  const RepClass& c = t.classes[t.orbit_of[l.code]];
  if (c.label.code != l.code) throw UsageError("label is not a canonical representative");
  return c;
}

std::string HallAlgebra::label_str(const ClassLabel& l) const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < l.dim.size(); ++i) os << (i ? "," : "") << l.dim[i];
  os << ')';
  const QuiverRep r = decode(l.dim, l.code);
  for (const auto& m : r.maps) os << ' ' << m.str();
  return os.str();
}

ClassLabel HallAlgebra::zero() const { return ClassLabel{DimVector(quiver_.vertices, 0), 0}; }

ClassLabel HallAlgebra::simple(int i) const {
  if (i < 1 || i > quiver_.vertices) throw UsageError("vertex out of range");
  DimVector d(quiver_.vertices, 0);
  d[i - 1] = 1;
  for (const auto& [s, t] : quiver_.arrows)
    if (s == i - 1 && t == i - 1) throw UsageError("vertex with a loop has no unique simple");
  return ClassLabel{d, 0};
}

const std::vector<FqMatrix>& HallAlgebra::subspace_list(int n, int k) const {
  std::lock_guard lock(mu_);
  auto it = subspaces_.find({n, k});
  if (it == subspaces_.end()) it = subspaces_.emplace(std::pair{n, k}, subspaces(F_, n, k)).first;
  return it->second;
}

std::vector<std::pair<QuiverRep, QuiverRep>> HallAlgebra::subrepresentations(const QuiverRep& r,
                                                                            const DimVector& e) const {
  const int m = quiver_.vertices;
  for (int i = 0; i < m; ++i)
    if (e[i] < 0 || e[i] > r.dim[i]) return {};

  // per vertex and subspace: the basis completed by unit vectors off the pivots, and its inverse
  struct Frame {
    FqMatrix full, inv;
  };
  std::vector<std::vector<Frame>> frames(m);
  for (int i = 0; i < m; ++i)
    for (const auto& b : subspace_list(r.dim[i], e[i])) {
      FqMatrix full(r.dim[i], r.dim[i]);
      std::vector<bool> pivot(r.dim[i], false);
      for (int row = 0; row < e[i]; ++row) {
        int c = 0;
        while (!b.at(row, c)) ++c;
        pivot[c] = true;
        for (int j = 0; j < r.dim[i]; ++j) full.at(row, j) = b.at(row, j);
      }
      int row = e[i];
      for (int c = 0; c < r.dim[i]; ++c)
        if (!pivot[c]) full.at(row++, c) = 1;
      frames[i].push_back({full, inverse(F_, full)});
    }

  std::vector<std::pair<QuiverRep, QuiverRep>> out;
  std::vector<std::size_t> pick(m, 0);
  auto row_of = [](const FqMatrix& a, int r) { return std::vector<int>(a.e.begin() + r * a.cols, a.e.begin() + (r + 1) * a.cols); };
  while (true) {
    QuiverRep sub, quo;
    sub.dim = e;
    quo.dim.resize(m);
    for (int i = 0; i < m; ++i) quo.dim[i] = r.dim[i] - e[i];
    bool stable = true;
    for (std::size_t a = 0; a < quiver_.arrows.size() && stable; ++a) {
      const auto [s, t] = quiver_.arrows[a];
      const Frame& fs = frames[s][pick[s]];
      const Frame& ft = frames[t][pick[t]];
      FqMatrix ms(e[t], e[s]), mq(quo.dim[t], quo.dim[s]);
      for (int k = 0; k < r.dim[s] && stable; ++k) {
        const auto coords = row_times(F_, apply(F_, r.maps[a], row_of(fs.full, k)), ft.inv);
        if (k < e[s]) {
          for (int j = e[t]; j < r.dim[t]; ++j)
            if (coords[j]) stable = false;
          for (int j = 0; j < e[t]; ++j) ms.at(j, k) = static_cast<std::uint8_t>(coords[j]);
        } else {
          for (int j = e[t]; j < r.dim[t]; ++j) mq.at(j - e[t], k - e[s]) = static_cast<std::uint8_t>(coords[j]);
        }
      }
      sub.maps.push_back(std::move(ms));
      quo.maps.push_back(std::move(mq));
    }
    if (stable) out.emplace_back(std::move(sub), std::move(quo));
    int i = 0;
    while (i < m && ++pick[i] == frames[i].size()) pick[i++] = 0;
    if (i == m) break;
  }
  return out;
}

const std::map<std::pair<ClassLabel, ClassLabel>, std::uint64_t>& HallAlgebra::hall_numbers(
    const ClassLabel& L) const {
  std::lock_guard lock(mu_);
  if (auto it = hall_.find(L); it != hall_.end()) return it->second;
  const QuiverRep& rep = find(L).rep;
  std::map<std::pair<ClassLabel, ClassLabel>, std::uint64_t> counts;
  DimVector e(quiver_.vertices, 0);
  while (true) {
    for (const auto& [sub, quo] : subrepresentations(rep, e)) ++counts[{classify(quo), classify(sub)}];
    int i = 0;
    while (i < quiver_.vertices && ++e[i] > L.dim[i]) e[i++] = 0;
    if (i == quiver_.vertices) break;
  }
  return hall_.emplace(L, std::move(counts)).first->second;
}

std::uint64_t HallAlgebra::hall_number(const ClassLabel& M, const ClassLabel& N, const ClassLabel& L) const {
  for (int i = 0; i < quiver_.vertices; ++i)
    if (M.dim.at(i) + N.dim.at(i) != L.dim.at(i)) throw UsageError("dimension vectors do not add up");
  const auto& h = hall_numbers(L);
  auto it = h.find({M, N});
  return it == h.end() ? 0 : it->second;
}

std::vector<std::vector<FqMatrix>> HallAlgebra::homs(const QuiverRep& a, const QuiverRep& b) const {
  const int m = quiver_.vertices;
  std::size_t entries = 0;
  std::uint64_t total = 1;
  for (int i = 0; i < m; ++i) entries += static_cast<std::size_t>(a.dim[i]) * b.dim[i];
  for (std::size_t k = 0; k < entries; ++k)
    if ((total *= F_.q()) > bound_) throw UsageError("morphism space exceeds the enumeration bound");
  std::vector<std::vector<FqMatrix>> out;
  std::vector<FqMatrix> f;
  for (int i = 0; i < m; ++i) f.emplace_back(b.dim[i], a.dim[i]);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (auto& x : f)
      for (auto& y : x.e) {
        y = static_cast<std::uint8_t>(c % F_.q());
        c /= F_.q();
      }
    bool ok = true;
    for (std::size_t k = 0; k < quiver_.arrows.size() && ok; ++k) {
      const auto [s, t] = quiver_.arrows[k];
      ok = mul(F_, b.maps[k], f[s]) == mul(F_, f[t], a.maps[k]);
    }
    if (ok) out.push_back(f);
  }
  return out;
}

std::uint64_t HallAlgebra::exact_sequences(const ClassLabel& M, const ClassLabel& N, const ClassLabel& L) const {
  const int m = quiver_.vertices;
  for (int i = 0; i < m; ++i)
    if (M.dim.at(i) + N.dim.at(i) != L.dim.at(i)) throw UsageError("dimension vectors do not add up");
  const QuiverRep &rm = find(M).rep, &rn = find(N).rep, &rl = find(L).rep;
  std::vector<std::vector<FqMatrix>> inj, surj;
  for (auto& f : homs(rn, rl)) {
    bool ok = true;
    for (int i = 0; i < m && ok; ++i) ok = rank(F_, f[i]) == N.dim[i];
    if (ok) inj.push_back(std::move(f));
  }
  for (auto& g : homs(rl, rm)) {
    bool ok = true;
    for (int i = 0; i < m && ok; ++i) ok = rank(F_, g[i]) == M.dim[i];
    if (ok) surj.push_back(std::move(g));
  }
  std::uint64_t count = 0;
  for (const auto& f : inj)
    for (const auto& g : surj) {
      bool ok = true;
      for (int i = 0; i < m && ok; ++i) ok = mul(F_, g[i], f[i]).is_zero();
      count += ok;
    }
  return count;
}

std::uint64_t HallAlgebra::filtrations(const ClassLabel& L, const std::vector<ClassLabel>& pieces) const {
  std::function<std::uint64_t(const QuiverRep&, std::size_t)> count = [&](const QuiverRep& r, std::size_t k) {
    if (k == pieces.size()) return std::uint64_t(std::all_of(r.dim.begin(), r.dim.end(), [](int x) { return x == 0; }));
    DimVector e(r.dim.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = r.dim[i] - pieces[k].dim[i];
    std::uint64_t total = 0;
    for (const auto& [sub, quo] : subrepresentations(r, e))
      if (classify(quo) == pieces[k]) total += count(sub, k + 1);
    return total;
  };
  return count(find(L).rep, 0);
}

HallElement HallAlgebra::element(const ClassLabel& l, VNumber c) const {
  find(l);
  HallElement e;
  e.q = F_.q();
  e.add(l, c);
  return e;
}

HallElement HallAlgebra::product(const HallElement& a, const HallElement& b, bool twisted) const {
  HallElement r;
  r.q = F_.q();
  for (const auto& [M, cm] : a.terms)
    for (const auto& [N, cn] : b.terms) {
      DimVector d(quiver_.vertices);
      for (int i = 0; i < quiver_.vertices; ++i) d[i] = M.dim[i] + N.dim[i];
      VNumber c = vmul(cm, cn, F_.q());
      if (twisted) c = vmul(c, vpow(quiver_.euler(M.dim, N.dim), F_.q()), F_.q());
      for (const auto& L : classes(d)) {
        const std::uint64_t f = hall_number(M, N, L.label);
        if (f) r.add(L.label, vmul(c, VNumber{Rational(f), 0}, F_.q()));
      }
    }
  return r;
}

HallElement HallAlgebra::serre_relation(int i, int j) const {
  if (i == j) throw UsageError("Serre relation needs two distinct vertices");
  const ClassLabel si = simple(i), sj = simple(j);
  int edges = 0;
  for (const auto& [s, t] : quiver_.arrows)
    if ((s == i - 1 && t == j - 1) || (s == j - 1 && t == i - 1)) ++edges;
  if (edges != 1) throw UsageError("Serre relation is implemented for a single edge only");
  const HallElement fi = element(si), fj = element(sj);
  auto p = [&](const HallElement& x, const HallElement& y) { return product(x, y, true); };
  const VNumber two{0, 1 + Rational(1, F_.q())};
  return p(p(fi, fi), fj) - two * p(p(fi, fj), fi) + p(p(fj, fi), fi);
}

}  // namespace qh
