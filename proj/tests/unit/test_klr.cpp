#include "doctest.h"

#include "qhecke/klr.hpp"
#include "qhecke/klr_operator.hpp"
#include "qhecke/nilhecke.hpp"

#include <random>

using namespace qh;

namespace {

MPoly X(int i) { return MPoly::var(i); }

KLRElement random_element(std::mt19937_64& rng, const KLRAlgebra& A, int max_exp, int nterms) {
  auto idems = A.idempotents();
  auto perms = all_permutations(A.n());
  auto monos = monomials_up_to(A.n(), max_exp);
  std::uniform_int_distribution<std::size_t> pv(0, idems.size() - 1), pw(0, perms.size() - 1),
      pm(0, monos.size() - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  KLRElement e(A.n());
  for (int k = 0; k < nterms; ++k) e.add_term(idems[pv(rng)], perms[pw(rng)], MPoly::term(monos[pm(rng)], coef(rng)));
  return e;
}

// compares the two operators on every monomial of bounded degree in every component
bool same_action(const KLRAlgebra& A, const KLRElement& lhs, const KLRElement& a, const KLRElement& b) {
  for (const auto& v : A.idempotents())
    for (const auto& m : monomials_up_to(A.n(), 2)) {
      std::map<Colours, MPoly> f{{v, MPoly::term(m, 1)}};
      if (A.act(lhs, f) != A.act(a, A.act(b, f))) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("braid paths") {
  auto path = braid_path({1, 2, 1}, {2, 1, 2});
  REQUIRE(path.size() == 1);
  CHECK(path[0].braid);
  auto w = std::vector<int>{1, 3, 2, 1};
  for (const auto& mv : braid_path_to_prefix(w, 3)) w = apply_move(w, mv);
  CHECK(w[0] == 3);
  CHECK_THROWS_AS(braid_path({1, 2}, {2, 1}), MathError);
}

TEST_CASE("quadratic relation on A2") {
  KLRAlgebra A(QuiverData::preset("a2"), 2);
  CHECK(A.word({1, 1}, MPoly(1), {1, 2}) == A.poly(X(2) - X(1), {1, 2}));
  CHECK(A.word({1, 1}, MPoly(1), {2, 1}) == A.poly(X(1) - X(2), {2, 1}));
  CHECK(A.word({1, 1}, MPoly(1), {1, 1}).is_zero());
  CHECK(A.tau_degree({1}, {1, 2}) == 1);
  CHECK(A.tau_degree({1}, {1, 1}) == -2);
}

TEST_CASE("single vertex agrees with the nil Hecke algebra") {
  KLRAlgebra A(QuiverData::preset("a1"), 3);
  const Colours v{1, 1, 1};
  std::mt19937_64 rng(7);
  auto basis = pbw_basis(3, 2);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  auto to_klr = [&](const NilHeckeElement& e) {
    KLRElement r(3);
    for (const auto& [w, p] : to_right_form(e)) r.add_term(v, w, p);
    return r;
  };
  for (int trial = 0; trial < 30; ++trial) {
    const auto& a = basis[pick(rng)];
    const auto& b = basis[pick(rng)];
    CHECK(A.multiply(to_klr(a), to_klr(b)) == to_klr(a * b));
  }
}

TEST_CASE("products match the polynomial representation") {
  for (const char* q : {"a2", "a3"}) {
    KLRAlgebra A(QuiverData::preset(q), 3);
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 25; ++trial) {
      auto a = random_element(rng, A, 1, 3), b = random_element(rng, A, 1, 3);
      CHECK(same_action(A, A.multiply(a, b), a, b));
    }
  }
}

TEST_CASE("associativity") {
  KLRAlgebra A(QuiverData::preset("a2"), 3);
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    auto a = random_element(rng, A, 1, 2), b = random_element(rng, A, 1, 2), c = random_element(rng, A, 1, 2);
    CHECK(A.multiply(A.multiply(a, b), c) == A.multiply(a, A.multiply(b, c)));
  }
}

TEST_CASE("braid relation with correction") {
  KLRAlgebra A(QuiverData::preset("a2"), 3);
  const Colours y{1, 2, 1};
  auto lhs = A.word({2, 1, 2}, MPoly(1), y) - A.word({1, 2, 1}, MPoly(1), y);
  CHECK(lhs == A.poly(A.braid_correction(1, y), y));
  CHECK(A.braid_correction(1, {1, 1, 2}).is_zero());
}

TEST_CASE("degrees add") {
  KLRAlgebra A(QuiverData::preset("a2"), 3);
  std::mt19937_64 rng(29);
  auto perms = all_permutations(3);
  auto idems = A.idempotents();
  for (int trial = 0; trial < 40; ++trial) {
    auto v = idems[rng() % idems.size()];
    auto w = perms[rng() % perms.size()];
    auto a = A.basis_element(v, w, Monomial::var(static_cast<int>(rng() % 3)));
    auto u = perms[rng() % perms.size()];
    auto b = A.basis_element(act_on_sequence(w, v), u, Monomial::one());
    auto prod = A.multiply(b, a);
    if (prod.is_zero()) continue;
    auto d = A.degree(prod);
    REQUIRE(d.has_value());
    CHECK(*d == *A.degree(a) + *A.degree(b));
  }
}

TEST_CASE("text format") {
  KLRAlgebra A(QuiverData::preset("a2"), 2);
  CHECK(A.tau(1, {1, 2}).str() == "1 * tau[1] x[0,0] e(1,2)");
  CHECK(KLRElement(2).str() == "0");
}

TEST_CASE("operator form agrees with the direct action") {
  KLRAlgebra A(QuiverData::preset("a2"), 3);
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_element(rng, A, 2, 3);
    auto op = represent(A, a);
    for (const auto& v : A.idempotents())
      for (const auto& m : monomials_up_to(3, 2)) {
        std::map<Colours, MPoly> f{{v, MPoly::term(m, 1)}};
        CHECK(op.apply(f) == A.act(a, f));
      }
  }
}

TEST_CASE("composition of operators matches products") {
  KLRAlgebra A(QuiverData::preset("a3"), 3);
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 15; ++trial) {
    auto a = random_element(rng, A, 1, 3), b = random_element(rng, A, 1, 3);
    CHECK(represent(A, A.multiply(a, b)) == represent(A, a) * represent(A, b));
  }
}

TEST_CASE("PBW coordinates round trip") {
  KLRAlgebra A(QuiverData::preset("a2"), 2);
  CHECK(pbw_coordinates(A, represent(A, A.idempotent({1, 2}))) == A.idempotent({1, 2}));
  auto xt = A.multiply(A.x(1, {2, 1}), A.tau(1, {1, 2}));
  CHECK(pbw_coordinates(A, represent(A, xt)) == xt);
  for (const char* q : {"a1", "a2", "a3"}) {
    KLRAlgebra B(QuiverData::preset(q), 3);
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 15; ++trial) {
      auto a = random_element(rng, B, 2, 4);
      CHECK(pbw_coordinates(B, represent(B, a)) == a);
    }
  }
}

TEST_CASE("braid correction read off from operators") {
  KLRAlgebra A(QuiverData::preset("a2"), 3);
  const Colours y{1, 2, 1};
  auto t = [&](int i, const Colours& z) { return represent(A, A.tau(i, z)); };
  Colours y1 = word_target({1}, y), y2 = word_target({2}, y);
  auto lhs = t(2, word_target({1, 2}, y)) * t(1, y2) * t(2, y);
  auto rhs = t(1, word_target({2, 1}, y)) * t(2, y1) * t(1, y);
  CHECK(pbw_coordinates(A, lhs - rhs) == A.poly(A.braid_correction(1, y), y));
}

TEST_CASE("operators outside the image are rejected") {
  KLRAlgebra A(QuiverData::preset("a1"), 2);
  // (x_1 - x_2)^{-1} times the identity
  OperatorComponent inv;
  inv.k = 1;
  inv.numerators.emplace(Permutation::identity(2), MPoly(1));
  KLROperator op(2);
  op.add({1, 1}, {1, 1}, inv);
  CHECK_THROWS_AS(pbw_coordinates(A, op), MathError);
}

TEST_CASE("PBW independence") {
  for (const char* q : {"a2", "a3"}) {
    KLRAlgebra A(QuiverData::preset(q), 3);
    auto r = pbw_independence(A, 2);
    CHECK(r.words > 0);
    CHECK(r.rank == r.words);
  }
}
