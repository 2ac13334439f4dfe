#include "doctest.h"

#include "qhecke/heckebridge.hpp"

using namespace qh;

TEST_CASE("T on a constant of equal weight is q") {
  AffineBridge b(2, geometric_vertices(1), BridgeMode::affine);
  const auto v = b.weights().front();
  auto t = b.generator(1, b.basis(v, Monomial::one(), 6));
  REQUIRE(t.comps.size() == 1);
  CHECK(t.comps.at(v).p == Poly<RatFun>(RatFun::q()));
}

TEST_CASE("affine Hecke relations, generic q") {
  auto r = check_affine_relations(2, 4, geometric_vertices(3));
  CHECK(r.checked > 0);
  CHECK(r.ok());
  auto r3 = check_affine_relations(3, 2, geometric_vertices(3));
  CHECK(r3.ok());
}

TEST_CASE("degenerate affine Hecke relations") {
  auto r = check_degenerate_relations(2, 4, arithmetic_vertices(3));
  CHECK(r.ok());
  auto r3 = check_degenerate_relations(3, 3, {Rational(0), Rational(1), Rational(2), Rational(7, 2)});
  CHECK(r3.checked > 0);
  CHECK(r3.ok());
}

TEST_CASE("degenerate examples") {
  DegenerateBridge b(2, arithmetic_vertices(2), BridgeMode::degenerate);
  for (auto v : b.weights()) {
    auto e = b.basis(v, Monomial::var(0, 2), 8);
    auto s2 = b.generator(1, b.generator(1, e));
    REQUIRE(s2.comps.count(v));
    CHECK(s2.comps.at(v).p == e.comps.at(v).p);
  }
}

TEST_CASE("quiver Hecke relations of the underlying module") {
  CHECK(check_quiver_relations(AffineBridge(3, geometric_vertices(3), BridgeMode::affine), 3).ok());
  CHECK(check_quiver_relations(DegenerateBridge(3, arithmetic_vertices(3), BridgeMode::degenerate), 3).ok());
}

TEST_CASE("literal readings do not give a module") {
  BridgeOptions lit;
  lit.as_written = true;
  // (q^{-1} x_i - x_{i+1}) has no constant term
  CHECK_THROWS_AS(check_affine_relations(2, 3, geometric_vertices(2), lit), MathError);
  auto r = check_degenerate_relations(2, 3, {Rational(0), Rational(1), Rational(3)}, lit);
  CHECK_FALSE(r.ok());
  auto same = check_degenerate_relations(2, 3, {Rational(0)}, lit);
  CHECK(same.ok());
}

TEST_CASE("usage errors") {
  CHECK_THROWS_AS(AffineBridge(2, {RatFun(0)}, BridgeMode::affine), UsageError);
  CHECK_THROWS_AS(check_affine_relations(2, 0, geometric_vertices(2)), UsageError);
  AffineBridge b(2, geometric_vertices(2), BridgeMode::affine);
  CHECK_THROWS_AS(b.generator(2, b.basis(b.weights()[0], Monomial::one(), 3)), UsageError);
}
