#include "doctest.h"

#include "qhecke/ratfun.hpp"

using namespace qh;

TEST_CASE("normal form") {
  const RatFun q = RatFun::q();
  CHECK((q * q - RatFun(1)) / (q - RatFun(1)) == q + RatFun(1));
  CHECK((q / q) == RatFun(1));
  CHECK(RatFun(IntPoly{2, 4}, IntPoly{-6}) == RatFun(IntPoly{-1, -2}, IntPoly{3}));
  CHECK(RatFun(IntPoly{0, 2}, IntPoly{0, 0, 4}).str() == "1/(2*q)");
  CHECK((q - RatFun(1)).str() == "q - 1");
  CHECK(RatFun(Rational(3, 4)).str() == "3/4");
  CHECK((RatFun(1) - q.pow(2)).str() == "-q^2 + 1");
  CHECK(q.pow(-2) * q.pow(2) == RatFun(1));
  CHECK_THROWS_AS(RatFun(0).inverse(), MathError);
}

TEST_CASE("field axioms on samples") {
  const RatFun q = RatFun::q();
  const std::vector<RatFun> xs{RatFun(2), q, q + RatFun(3), (q * q + RatFun(1)) / (q - RatFun(2)),
                               RatFun(Rational(-1, 3)) / (q * q)};
  for (const auto& a : xs)
    for (const auto& b : xs)
      for (const auto& c : xs) {
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a - a == RatFun(0));
        CHECK(a * a.inverse() == RatFun(1));
      }
}

TEST_CASE("evaluation and gcd") {
  const RatFun q = RatFun::q();
  CHECK(((q + RatFun(1)) / (q - RatFun(1))).evaluate(3) == 2);
  CHECK_THROWS_AS((RatFun(1) / (q - RatFun(1))).evaluate(1), MathError);
  CHECK(poly_gcd({-1, 0, 1}, {1, 2, 1}) == IntPoly{1, 1});
  CHECK(poly_gcd({2, 4}, {3}) == IntPoly{1});
}
