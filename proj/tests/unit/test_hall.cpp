#include "qhecke/hall.hpp"

#include <doctest.h>

using namespace qh;

namespace {

HallAlgebra a2(int q) { return HallAlgebra(HallQuiver::from(QuiverData::preset("a2")), q); }

HallElement simple_element(const HallAlgebra& H, int i) { return H.element(H.simple(i)); }

// the indecomposable k -> k of dimension (1,1)
ClassLabel m12() { return ClassLabel{{1, 1}, 1}; }

}  // namespace

TEST_CASE("finite fields") {
  for (int q : {2, 3, 4, 5}) {
    FiniteField F(q);
    for (int a = 0; a < q; ++a) {
      CHECK(F.add(a, F.neg(a)) == 0);
      if (a) CHECK(F.mul(a, F.inv(a)) == 1);
      for (int b = 0; b < q; ++b)
        for (int c = 0; c < q; ++c) CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
    }
    int order = 1;
    for (int x = F.primitive(); x != 1; x = F.mul(x, F.primitive())) ++order;
    CHECK(order == q - 1);
    CHECK(subspaces(F, 2, 1).size() == static_cast<std::size_t>(q + 1));
    CHECK(subspaces(F, 3, 1).size() == static_cast<std::size_t>(q * q + q + 1));
  }
  CHECK_THROWS_AS(FiniteField(6), UsageError);
  CHECK(gl_order(2, 2) == 6);
  CHECK(gl_order(2, 3) == 48);
}

TEST_CASE("classification") {
  const HallAlgebra H = a2(2);
  const auto& cl = H.classes({1, 1});
  REQUIRE(cl.size() == 2);
  CHECK(cl[0].label.code == 0);
  CHECK(cl[1].label == m12());
  CHECK(cl[0].aut == 1);
  CHECK(cl[1].aut == 1);
  CHECK(a2(3).classes({1, 1})[1].aut == 2);
  CHECK(a2(3).classes({1, 1})[0].aut == 4);
  // indecomposables of A2 are S1, S2, M, so dimension (2,2) has 3 classes
  CHECK(H.classes({2, 2}).size() == 3);
  for (int q : {2, 3, 4, 5}) {
    HallAlgebra S(HallQuiver::single_vertex(), q);
    REQUIRE(S.classes({1}).size() == 1);
    CHECK(S.classes({1})[0].aut == static_cast<std::uint64_t>(q - 1));
  }
  // conjugacy classes of 2x2 matrices over F_2, including the companion matrix of t^2 + t + 1
  CHECK(HallAlgebra(HallQuiver::jordan(), 2).classes({2}).size() == 6);
  CHECK(HallAlgebra(HallQuiver::jordan(), 3).classes({2}).size() == 12);
  for (const auto& c : H.classes({2, 1})) CHECK(H.find(c.label).rep.maps[0] == c.rep.maps[0]);
  CHECK(H.label_str(m12()) == "(1,1) [1]");
}

TEST_CASE("enumeration bound is an error") {
  HallAlgebra H(HallQuiver::jordan(), 2, 1000);
  CHECK(H.classes({3}).size() == 14);
  CHECK_THROWS_AS(H.classes({4}), UsageError);
}

TEST_CASE("hall numbers") {
  for (int q : {2, 3}) {
    const HallAlgebra H = a2(q);
    const ClassLabel s1 = H.simple(1), s2 = H.simple(2), split{{1, 1}, 0};
    CHECK(H.hall_number(s1, s2, m12()) == 1);
    CHECK(H.hall_number(s1, s2, split) == 1);
    CHECK(H.hall_number(s2, s1, m12()) == 0);
    const ClassLabel m_s1 = H.classify(H.find(ClassLabel{{2, 1}, 1}).rep);
    CHECK(H.hall_number(s1, m12(), m_s1) == static_cast<std::uint64_t>(q));
    for (const auto& L : H.classes({2, 1})) {
      CHECK(H.hall_number(L.label, H.zero(), L.label) == 1);
      CHECK(H.hall_number(H.zero(), L.label, L.label) == 1);
    }
    CHECK_THROWS_AS(H.hall_number(s1, s1, m12()), UsageError);
  }
}

TEST_CASE("products in A2") {
  for (int q : {2, 3}) {
    const HallAlgebra H = a2(q);
    const auto f1 = simple_element(H, 1), f2 = simple_element(H, 2), f12 = H.element(m12());
    const auto split = H.element(ClassLabel{{1, 1}, 0});
    CHECK(H.product(f1, f2, false) == f12 + split);
    CHECK(H.product(f2, f1, false) == split);
    CHECK(H.product(f1, f2, false) - H.product(f2, f1, false) == f12);
    CHECK(H.product(f1, f12, false) == VNumber{Rational(q), 0} * H.product(f12, f1, false));
    const auto one = H.element(H.zero());
    CHECK(H.product(one, f12, true) == f12);
    CHECK(H.product(f12, one, false) == f12);
  }
}

TEST_CASE("exact sequences") {
  for (int q : {2, 3}) {
    const HallAlgebra H = a2(q);
    int triples = 0;
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; b <= 2; ++b)
        for (const auto& L : H.classes({a, b}))
          for (int c = 0; c <= a; ++c)
            for (int d = 0; d <= b; ++d)
              for (const auto& N : H.classes({c, d}))
                for (const auto& M : H.classes({a - c, b - d})) {
                  ++triples;
                  CHECK(H.hall_number(M.label, N.label, L.label) * M.aut * N.aut ==
                        H.exact_sequences(M.label, N.label, L.label));
                }
    CHECK(triples == 123);
  }
}

TEST_CASE("associativity and filtrations") {
  const HallAlgebra H = a2(2);
  std::vector<ClassLabel> all;
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 1; ++b)
      for (const auto& c : H.classes({a, b})) all.push_back(c.label);
  for (const auto& x : all)
    for (const auto& y : all)
      for (const auto& z : all) {
        if (x.dim[0] + y.dim[0] + z.dim[0] > 2 || x.dim[1] + y.dim[1] + z.dim[1] > 1) continue;
        const auto ex = H.element(x), ey = H.element(y), ez = H.element(z);
        for (bool tw : {false, true})
          CHECK(H.product(H.product(ex, ey, tw), ez, tw) == H.product(ex, H.product(ey, ez, tw), tw));
      }

  const HallAlgebra H3 = a2(3);
  const ClassLabel s1 = H3.simple(1), s2 = H3.simple(2);
  for (const auto& order : std::vector<std::vector<ClassLabel>>{{s1, s2, s1}, {s1, s1, s2}, {s2, s1, s1}}) {
    const auto prod = H3.product(H3.product(H3.element(order[0]), H3.element(order[1]), false),
                                 H3.element(order[2]), false);
    for (const auto& L : H3.classes({2, 1}))
      CHECK(prod.coeff(L.label) == VNumber{Rational(H3.filtrations(L.label, order)), 0});
  }
}

TEST_CASE("quantum Serre relation") {
  for (int q : {2, 3}) {
    const HallAlgebra H = a2(q);
    CHECK(H.serre_relation(1, 2).is_zero());
    CHECK(H.serre_relation(2, 1).is_zero());
    // the untwisted product does not satisfy it
    const auto f1 = simple_element(H, 1), f2 = simple_element(H, 2);
    auto p = [&](const HallElement& x, const HallElement& y) { return H.product(x, y, false); };
    const VNumber two{0, 1 + Rational(1, q)};
    CHECK_FALSE((p(p(f1, f1), f2) - two * p(p(f1, f2), f1) + p(p(f2, f1), f1)).is_zero());
    CHECK_THROWS_AS(H.serre_relation(1, 1), UsageError);
  }
  HallAlgebra A3(HallQuiver::from(QuiverData::preset("a3")), 2);
  CHECK_THROWS_AS(A3.serre_relation(1, 3), UsageError);
}

TEST_CASE("classes of elementary abelian type commute") {
  for (int q : {2, 3}) {
    HallAlgebra J(HallQuiver::jordan(), q);
    const auto u1 = J.element(ClassLabel{{1}, 0}), u2 = J.element(ClassLabel{{2}, 0});
    CHECK(J.product(u1, u2, false) == J.product(u2, u1, false));
    CHECK(J.product(u1, J.product(u1, u1, false), false) == J.product(J.product(u1, u1, false), u1, false));
  }
}

TEST_CASE("v arithmetic") {
  CHECK(vpow(2, 3) == VNumber{3, 0});
  CHECK(vpow(-1, 2) == VNumber{0, Rational(1, 2)});
  CHECK(vpow(-2, 2) == VNumber{Rational(1, 2), 0});
  CHECK(vpow(3, 2) == VNumber{0, 2});
  CHECK(vmul(VNumber{0, 1}, VNumber{0, 1}, 5) == VNumber{5, 0});
  CHECK(VNumber{1, -2}.str() == "1 - 2*v");
}
