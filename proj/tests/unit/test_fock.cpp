#include "doctest.h"

#include "qhecke/fock.hpp"

using namespace qh;

namespace {

Partition P(std::vector<int> p) { return Partition(std::move(p)); }

FockVector sum(std::initializer_list<Partition> ps) {
  FockVector v;
  for (const auto& p : ps) v[p] += 1;
  return v;
}

}  // namespace

TEST_CASE("residues") {
  CHECK(residue(1, 1, 3) == 0);
  CHECK(residue(2, 1, 3) == 2);
  CHECK(residue(1, 4, 3) == 0);
  CHECK_THROWS_AS(residue(1, 1, 1), UsageError);
}

TEST_CASE("partitions") {
  CHECK(partitions_of(0).size() == 1);
  const std::vector<std::size_t> counts{1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int n = 0; n <= 8; ++n) CHECK(partitions_of(n).size() == counts[n]);
  CHECK(partitions_of(3).front() == P({3}));
  CHECK(P({3, 1}).str() == "(3,1)");
  CHECK(Partition().str() == "()");
  CHECK(Partition::parse("(3, 1,1)") == P({3, 1, 1}));
  CHECK(Partition::parse("()") == Partition());
  CHECK_THROWS_AS(Partition::parse("(1,3)"), UsageError);
  CHECK_THROWS_AS(Partition::parse("3,1"), UsageError);
  CHECK(P({3, 1}).transpose() == P({2, 1, 1}));
  for (const auto& l : partitions_of(6)) CHECK(l.transpose().transpose() == l);
}

TEST_CASE("operators on (3,1) for p = 3") {
  const auto v = single(P({3, 1}));
  CHECK(f_op(0, v, 3) == sum({P({4, 1}), P({3, 2})}));
  CHECK(f_op(1, v, 3) == sum({P({3, 1, 1})}));
  CHECK(f_op(2, v, 3).empty());
  CHECK(e_op(2, v, 3) == sum({P({2, 1}), P({3})}));
  CHECK(e_op(0, v, 3).empty());
  CHECK(e_op(1, v, 3).empty());
  CHECK(d_op(v, 3) == v);
  CHECK(fock_str(f_op(0, v, 3)) == "(4,1) + (3,2)");
}

TEST_CASE("small cases") {
  for (int i = 0; i < 3; ++i) CHECK(e_op(i, single(Partition()), 3).empty());
  CHECK(d_op(single(Partition()), 3).empty());
  for (int p = 2; p <= 5; ++p) CHECK(d_op(single(P({p})), p) == single(P({p})));
  CHECK(weight_of(Partition(), 3) == std::vector<int>{0, 0, 0});
  CHECK(weight_of(P({3, 1}), 3) == std::vector<int>{1, 1, 2});
  CHECK(weight_of(P({2}), 2) == weight_of(P({1, 1}), 2));
}

TEST_CASE("commutation relations and adjointness") {
  for (int p : {2, 3, 5}) {
    auto r = check_fock_relations(p, 6);
    CHECK(r.checked > 0);
    CHECK(r.ok());
  }
}

TEST_CASE("matrices") {
  auto m = fock_matrix('f', 0, 3, 0);
  REQUIRE(m.rows.size() == 1);
  CHECK(m.entries[0][0] == 1);
  CHECK_THROWS_AS(fock_matrix('g', 0, 3, 1), UsageError);
  CHECK(fock_matrix('e', 0, 3, 0).rows.empty());
}
