#include "doctest.h"

#include "qhecke/cyclotomic.hpp"

using namespace qh;

TEST_CASE("ranks match i! n!/(n-i)!") {
  for (int n = 0; n <= 4; ++n)
    for (int i = 0; i <= n; ++i) {
      auto r = cyclotomic_rank(n, i, 7);
      CHECK(r.consistent);
      CHECK(Integer(r.ranks[0]) == r.expected);
      CHECK(cyclotomic_basis(n, i).size() == static_cast<std::size_t>(r.expected));
    }
}

TEST_CASE("more strands than the level gives zero") {
  for (int n = 0; n <= 3; ++n) {
    CyclotomicSl2 a(n, n + 1, std::vector<Integer>(n, 3));
    CHECK(a.is_zero_algebra());
    CHECK(a.image_rank() == 0);
    CHECK(cyclotomic_rank_formula(n, n + 1) == 0);
    CHECK(cyclotomic_basis(n, n + 1).empty());
  }
}

TEST_CASE("ideal is stable under divided differences") {
  for (int n = 1; n <= 4; ++n)
    for (int i = 1; i <= n; ++i) {
      std::vector<Integer> z;
      for (int l = 1; l <= n; ++l) z.push_back(2 * l - 5);
      CHECK(CyclotomicSl2(n, i, z).ideal_is_stable());
    }
}

TEST_CASE("map to the nil Hecke algebra") {
  for (int n = 1; n <= 4; ++n)
    for (int i = 0; i <= n; ++i) {
      auto c = sl2_iso_check(n, i, 11);
      CHECK(c.ok());
    }
  CHECK_THROWS_AS(sl2_iso_check(2, 3, 1), UsageError);
}

TEST_CASE("dimension ledger") {
  for (int n = 0; n <= 6; ++n) {
    auto rows = minimal_sl2_dimension_ledger(n);
    REQUIRE(rows.size() == static_cast<std::size_t>(n + 1));
    for (const auto& r : rows) {
      CHECK(r.simple_dim == factorial(r.i));
      CHECK(r.rank == cyclotomic_rank_formula(n, r.i));
      CHECK(r.ef_per_dim - r.fe_per_dim == r.weight);
    }
  }
  for (int n = 0; n <= 4; ++n)
    for (int i = 0; i <= n; ++i)
      CHECK(parabolic_graded_rank(n, i).at_one() == Integer(parabolic_nil_hecke_rank(n, i)));
}

TEST_CASE("weight classes") {
  CHECK(weight_space_classes(2, 2).size() == 1);
  auto c = weight_space_classes(3, 4);
  CHECK(c.count({1, 1, 2}) == 1);
  std::size_t total = 0;
  for (const auto& [w, ls] : c) total += ls.size();
  CHECK(total == 5);
}
