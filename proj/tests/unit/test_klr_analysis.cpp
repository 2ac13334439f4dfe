#include "doctest.h"

#include "qhecke/klr_analysis.hpp"

using namespace qh;

namespace {

MPoly X(int i) { return MPoly::var(i); }

}  // namespace

TEST_CASE("relations hold in the polynomial representation") {
  for (const char* q : {"a1", "a2", "a3"}) {
    KLRAlgebra A(QuiverData::preset(q), 3);
    auto r = check_relations(A, 2);
    CHECK(r.checked > 0);
    CHECK(r.ok());
  }
  KLRAlgebra B(QuiverData::preset("a3"), 4);
  CHECK(check_relations(B, 1).ok());
}

TEST_CASE("graded dimension: formula against enumeration") {
  for (const char* q : {"a1", "a2", "a3"})
    for (int n = 1; n <= 3; ++n) {
      KLRAlgebra A(QuiverData::preset(q), n);
      for (const auto& v : A.idempotents())
        for (const auto& vp : A.idempotents()) {
          auto formula = hom_graded_dimension(A.quiver(), v, vp);
          auto oracle = hom_graded_dimension_enumerated(A, v, vp);
          CHECK(formula == oracle.inverted());
        }
    }
}

TEST_CASE("graded dimension examples") {
  auto a2 = QuiverData::preset("a2");
  CHECK(hom_graded_dimension(a2, {1, 2}, {1, 2}) == GradedDim(1));
  CHECK(hom_graded_dimension(a2, {1, 2}, {2, 2}).is_zero());
  KLRAlgebra A(a2, 2);
  CHECK(hom_graded_dimension_enumerated(A, {1, 2}, {2, 1}) == GradedDim::monomial(1));
  // one vertex, n = 2: 1 + v^{-2}, the Poincare polynomial of S_2 in q^{-1}
  KLRAlgebra B(QuiverData::preset("a1"), 2);
  CHECK(hom_graded_dimension_enumerated(B, {1, 1}, {1, 1}) == GradedDim(1) + GradedDim::monomial(-2));
}

TEST_CASE("torsion multiplier") {
  KLRAlgebra A(QuiverData::preset("a2"), 3);
  auto r = torsion_check(A, {1, 2, 1}, 1);
  CHECK_FALSE(r.discrepancy_zero);
  CHECK(r.annihilated);
  CHECK(r.multiplier == X(2) - X(1));
  CHECK(r.holds_in_h);

  KLRAlgebra B(QuiverData::preset("a3"), 3);
  auto rb = torsion_check(B, {1, 2, 1}, 1);
  CHECK(rb.annihilated);
  CHECK(rb.holds_in_h);
  auto rc = torsion_check(B, {2, 3, 2}, 1);
  CHECK(rc.annihilated);
  CHECK(rc.multiplier == X(2) - X(1));

  KLRAlgebra C(QuiverData::preset("a1"), 3);
  auto single = torsion_check(C, {1, 1, 1}, 1);
  CHECK(single.discrepancy_zero);
  CHECK(single.multiplier == MPoly(1));
}

TEST_CASE("prime words reduce the quadratic relation") {
  KLRAlgebra A(QuiverData::preset("a2"), 2);
  PrimeWords H(A, {1, 2});
  auto t = H.reduce(H.word({1, 1}, MPoly(1)));
  REQUIRE(t.size() == 1);
  CHECK(t.at({}) == X(2) - X(1));
}

TEST_CASE("central elements in ideals") {
  KLRAlgebra A1(QuiverData::preset("a1"), 1);
  auto p1 = central_ideal_probe(A1, {1}, {A1.x(1, {1})}, 1, 2);
  REQUIRE(p1.found);
  CHECK(p1.symmetric == X(1));

  // tau_1 x_2 - x_1 tau_1 = 1 already lies in the ideal generated by tau_1
  KLRAlgebra A2(QuiverData::preset("a1"), 2);
  std::vector<KLRElement> gens{A2.tau(1, {1, 1})};
  auto p2 = central_ideal_probe(A2, {1, 1}, gens, 1, 2);
  REQUIRE(p2.found);
  CHECK(p2.symmetric == MPoly(1));
  CHECK(in_bounded_ideal(A2, {1, 1}, gens, 2, central_element(A2, {1, 1}, (X(1) - X(2)).pow(2))));

  KLRAlgebra B(QuiverData::preset("a2"), 2);
  auto p3 = central_ideal_probe(B, {1, 2}, {B.idempotent({1, 2})}, 1, 2);
  REQUIRE(p3.found);
  CHECK(p3.degree == 1);
  CHECK(p3.symmetric == X(1) - X(2));
  auto z = central_element(B, {1, 2}, p3.symmetric);
  CHECK(z == B.poly(X(1) - X(2), {1, 2}) + B.poly(X(2) - X(1), {2, 1}));
}
