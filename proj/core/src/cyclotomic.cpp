#include "qhecke/cyclotomic.hpp"

#include "qhecke/linalg.hpp"
#include "qhecke/nilhecke.hpp"

#include <deque>
#include <functional>
#include <random>

namespace qh {

namespace {

// dense square matrix over F_p
struct FpMatrix {
  std::size_t n = 0;
  std::vector<Fp> a;

  explicit FpMatrix(std::size_t size) : n(size), a(size * size) {}
  static FpMatrix identity(std::size_t size) {
    FpMatrix m(size);
    for (std::size_t k = 0; k < size; ++k) m.a[k * size + k] = Fp(1);
    return m;
  }
  Fp& at(std::size_t r, std::size_t c) { return a[r * n + c]; }
  Fp at(std::size_t r, std::size_t c) const { return a[r * n + c]; }
  FpMatrix operator*(const FpMatrix& o) const {
    FpMatrix r(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const Fp x = at(i, k);
        if (is_zero(x)) continue;
        for (std::size_t j = 0; j < n; ++j) r.a[i * n + j] += x * o.a[k * n + j];
      }
    return r;
  }
};

// row echelon form of dense vectors, pivots normalized to 1
class DenseEchelon {
 public:
  explicit DenseEchelon(std::size_t len) : pivot_row_(len, -1) {}
  bool insert(std::vector<Fp> v) {
    for (std::size_t c = 0; c < v.size(); ++c) {
      if (is_zero(v[c])) continue;
      const int r = pivot_row_[c];
      if (r < 0) {
        const Fp inv = v[c].inverse();
        for (std::size_t k = c; k < v.size(); ++k) v[k] *= inv;
        pivot_row_[c] = static_cast<int>(rows_.size());
        rows_.push_back(std::move(v));
        return true;
      }
      const Fp f = v[c];
      const auto& row = rows_[r];
      for (std::size_t k = c; k < v.size(); ++k)
        if (!is_zero(row[k])) v[k] -= f * row[k];
    }
    return false;
  }
  std::size_t rank() const { return rows_.size(); }

 private:
  std::vector<int> pivot_row_;
  std::vector<std::vector<Fp>> rows_;
};

// dimension of the algebra generated by the given matrices (with identity)
std::size_t generated_dimension(const std::vector<FpMatrix>& gens, std::size_t size) {
  if (size == 0) return 0;
  DenseEchelon ech(size * size);
  std::deque<FpMatrix> queue;
  FpMatrix id = FpMatrix::identity(size);
  ech.insert(id.a);
  queue.push_back(id);
  while (!queue.empty()) {
    FpMatrix m = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      FpMatrix p = g * m;
      if (ech.insert(p.a)) queue.push_back(std::move(p));
    }
  }
  return ech.rank();
}

// matrix of op on the span of basis, reducing images with reduce
FpMatrix operator_matrix(const std::vector<Monomial>& basis, const std::function<MPoly(const MPoly&)>& op,
                         const std::function<MPoly(MPoly)>& reduce) {
  std::map<Monomial, std::size_t> index;
  for (std::size_t k = 0; k < basis.size(); ++k) index[basis[k]] = k;
  FpMatrix m(basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c) {
    const MPoly image = reduce(op(MPoly::term(basis[c], 1)));
    for (const auto& [mono, coef] : image.terms()) {
      auto it = index.find(mono);
      if (it == index.end()) throw MathError("reduction left the normal-form basis");
      m.at(it->second, c) = Fp(coef);
    }
  }
  return m;
}

// monomials x^a in n variables with a_j <= bound(j)
std::vector<Monomial> box_monomials(int vars, const std::function<int(int)>& bound) {
  std::vector<Monomial> out{Monomial::one()};
  for (int j = 1; j <= vars; ++j) {
    std::vector<Monomial> next;
    for (const auto& m : out)
      for (int e = 0; e <= bound(j); ++e) {
        Monomial r = m;
        r.set(j - 1, e);
        next.push_back(r);
      }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// subtracts multiples of the monic generator g (leading power d of variable j) until no term has X_j^{>= d}
MPoly reduce_by(MPoly p, const MPoly& g, int j, int d) {
  const Monomial lead = Monomial::var(j - 1, d);
  const MPoly tail = g - MPoly::term(lead, 1);
  while (true) {
    const MPoly::Term* hit = nullptr;
    for (const auto& t : p.terms())
      if (t.first[j - 1] >= d) {
        hit = &t;
        break;
      }
    if (!hit) return p;
    Monomial q = hit->first;
    q.set(j - 1, q[j - 1] - d);
    const Integer c = hit->second;
    // X_j^d = -tail modulo g
    p = p - MPoly::term(hit->first, c) - (tail * MPoly::term(q, c));
  }
}

}  // namespace

CyclotomicSl2::CyclotomicSl2(int n, int i, std::vector<Integer> z) : n_(n), i_(i) {
  if (n < 0 || i < 0) throw UsageError("level and strand count must be nonnegative");
  if (i > 8) throw UsageError("at most 8 strands");
  if (static_cast<int>(z.size()) != n) throw UsageError("need exactly n parameters z_1..z_n");
  f_ = MPoly::var(1).pow(n);
  for (int l = 1; l <= n; ++l) f_ += MPoly::var(1).pow(n - l).scaled(z[l - 1]);
  if (i == 0) {
    basis_ = {Monomial::one()};
    return;
  }
  g_.push_back(f_);
  for (int j = 1; j < i && j <= n; ++j) {
    MPoly next = demazure(j, g_.back());
    const Integer lead = next.coeff(Monomial::var(j, n - j));
    if (lead != 1 && lead != -1) throw MathError("divided difference lost monicity");
    g_.push_back(next.scaled(lead));
  }
  zero_ = i > n;
  if (!zero_) basis_ = box_monomials(i, [n](int j) { return n - j; });
}

MPoly CyclotomicSl2::reduce(MPoly p) const {
  if (zero_) return {};
  for (int j = std::min(i_, n_); j >= 1; --j) p = reduce_by(std::move(p), g_[j - 1], j, n_ - j + 1);
  return p;
}

bool CyclotomicSl2::ideal_is_stable() const {
  if (zero_) return true;
  for (int j = 1; j < i_; ++j)
    for (const auto& g : g_)
      if (!reduce(demazure(j, g)).is_zero()) return false;
  return true;
}

std::size_t CyclotomicSl2::image_rank() const {
  if (zero_) return 0;
  std::vector<FpMatrix> gens;
  auto red = [this](MPoly p) { return reduce(std::move(p)); };
  for (int j = 1; j <= i_; ++j) gens.push_back(operator_matrix(basis_, [j](const MPoly& p) { return MPoly::var(j) * p; }, red));
  for (int j = 1; j < i_; ++j) gens.push_back(operator_matrix(basis_, [j](const MPoly& p) { return demazure(j, p); }, red));
  return generated_dimension(gens, basis_.size());
}

Integer cyclotomic_rank_formula(int n, int i) {
  if (i > n) return 0;
  return factorial(i) * factorial(n) / factorial(n - i);
}

std::vector<KLRElement> cyclotomic_basis(int n, int i) {
  std::vector<KLRElement> out;
  if (i > n) return out;
  const Colours v(i, 1);
  for (const auto& w : all_permutations(std::max(i, 1)))
    for (const auto& m : box_monomials(i, [n](int j) { return n - j; })) {
      if (i == 0) {
        KLRElement e(1);
        out.push_back(e);
        break;
      }
      KLRElement e(i);
      e.add_term(v, w, MPoly::term(m, 1));
      out.push_back(e);
    }
  return out;
}

CyclotomicRank cyclotomic_rank(int n, int i, std::uint64_t seed, int points) {
  CyclotomicRank r;
  r.n = n;
  r.i = i;
  r.expected = cyclotomic_rank_formula(n, i);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-50, 50);
  for (int k = 0; k <= points; ++k) {
    std::vector<Integer> z(n);
    if (k < points)
      for (auto& c : z) c = dist(rng);
    r.ranks.push_back(CyclotomicSl2(n, i, z).image_rank());
  }
  r.consistent = std::all_of(r.ranks.begin(), r.ranks.end(), [&](std::size_t x) { return x == r.ranks[0]; });
  return r;
}

std::size_t parabolic_nil_hecke_rank(int n, int i) {
  if (i > n) throw UsageError("H_{i,n} needs i <= n");
  // coinvariants: Groebner basis h_{n-k+1}(x_1, ..., x_k), leading x_k^{n-k+1}
  std::vector<MPoly> h(n + 1);
  for (int k = 1; k <= n; ++k) h[k] = complete_homogeneous(k, n - k + 1);
  auto reduce = [&](MPoly p) {
    for (int k = n; k >= 1; --k) p = reduce_by(std::move(p), h[k], k, n - k + 1);
    return p;
  };
  const auto basis = box_monomials(n, [n](int k) { return n - k; });
  std::vector<FpMatrix> gens;
  for (int j = 1; j <= i; ++j)
    gens.push_back(operator_matrix(basis, [j](const MPoly& p) { return MPoly::var(j) * p; }, reduce));
  for (int j = 1; j < i; ++j)
    gens.push_back(operator_matrix(basis, [j](const MPoly& p) { return demazure(j, p); }, reduce));
  return generated_dimension(gens, basis.size());
}

Sl2IsoCheck sl2_iso_check(int n, int i, std::uint64_t seed) {
  if (i > n) throw UsageError("the isomorphism is stated for i <= n");
  Sl2IsoCheck c;
  // z_l -> (-1)^l e_l(x_1, ..., x_n)
  MPoly image = MPoly::var(1).pow(n);
  for (int l = 1; l <= n; ++l) {
    MPoly z = elementary_symmetric(n, l);
    if (l % 2) z = -z;
    image += MPoly::var(1).pow(n - l) * z;
  }
  c.well_defined = image.is_zero();

  bool rel = true;
  for (int j = 1; j < i; ++j) {
    auto T = NilHeckeElement::T(n, j);
    rel = rel && (T * T).is_zero();
    rel = rel && (T * NilHeckeElement::X(n, j + 1) - NilHeckeElement::X(n, j) * T == NilHeckeElement::one(n));
    if (j + 1 < i) {
      auto T2 = NilHeckeElement::T(n, j + 1);
      rel = rel && (T * T2 * T == T2 * T * T2);
    }
  }
  c.relations = rel;
  auto r = cyclotomic_rank(n, i, seed);
  c.source_rank = r.consistent ? r.ranks[0] : 0;
  c.target_rank = parabolic_nil_hecke_rank(n, i);
  return c;
}

Laurent parabolic_graded_rank(int n, int i) {
  if (i > n) return {};
  Laurent r = poincare_polynomial(std::max(i, 1));
  for (int k = n - i + 1; k <= n; ++k) {
    Laurent qk;
    for (int t = 0; t < k; ++t) qk.add_term(t, 1);
    r = r * qk;
  }
  return r;
}

std::vector<Sl2LedgerRow> minimal_sl2_dimension_ledger(int n) {
  if (n < 0 || n > 8) throw UsageError("ledger supports 0 <= n <= 8");
  std::vector<Integer> rank(n + 2, 0);
  for (int i = 0; i <= n; ++i) rank[i] = parabolic_graded_rank(n, i).at_one();
  std::vector<Sl2LedgerRow> rows;
  for (int i = 0; i <= n; ++i) {
    Sl2LedgerRow row;
    row.i = i;
    row.weight = n - 2 * i;
    row.rank = rank[i];
    // H_{i,n} tensored down is a matrix algebra of size s over a local algebra of dimension binom(n, i)
    const Integer blocks = rank[i] / binomial(n, i);
    Integer s = boost::multiprecision::sqrt(blocks);
    row.simple_dim = s * s == blocks ? s : Integer(-1);
    row.chain_rank = i < n ? Integer(rank[i + 1] / rank[i]) : Integer(0);
    // F = induction to H_{i+1,n}, E = restriction to H_{i-1,n}
    row.ef_per_dim = row.chain_rank;
    row.fe_per_dim = i > 0 ? Integer(rank[i] / rank[i - 1]) : Integer(0);
    rows.push_back(row);
  }
  return rows;
}

std::map<std::vector<int>, std::vector<Partition>> weight_space_classes(int p, int n) {
  std::map<std::vector<int>, std::vector<Partition>> out;
  for (const auto& l : partitions_of(n)) out[weight_of(l, p)].push_back(l);
  return out;
}

}  // namespace qh
