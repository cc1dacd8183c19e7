#include "doctest.h"
#include "gainarr/error.hpp"
#include "gainarr/int_polynomial.hpp"

using namespace gainarr;

TEST_CASE("arithmetic") {
  IntPolynomial t({0, 1});
  IntPolynomial one = IntPolynomial::constant(1);
  CHECK((t - one) * (t - one) == IntPolynomial({1, -2, 1}));
  CHECK((t + one) - t == one);
  CHECK((t - t).is_zero());
  CHECK((t - t).degree() == -1);
  CHECK(IntPolynomial::power_of_linear(1, 3) == IntPolynomial({-1, 3, -3, 1}));
}

TEST_CASE("shift by binomial re-expansion") {
  // (t-1)^2 shifted by +1 is t^2.
  CHECK(IntPolynomial::power_of_linear(1, 2).shifted(1) == IntPolynomial({0, 0, 1}));
  IntPolynomial p({3, -3, 1, 0, 2});
  for (int s = -3; s <= 3; ++s) {
    for (int x = -4; x <= 4; ++x) CHECK(p.shifted(s).evaluate(x) == p.evaluate(x + s));
  }
}

TEST_CASE("division") {
  IntPolynomial p = IntPolynomial::from_roots({1, 2, 5});
  auto q = p.divide_exact(IntPolynomial::from_roots({2}));
  REQUIRE(q);
  CHECK(*q == IntPolynomial::from_roots({1, 5}));
  CHECK_FALSE(p.divide_exact(IntPolynomial::from_roots({3})));
  CHECK(p.divisible_by(IntPolynomial({-2, 2})));
  CHECK_FALSE(p.divisible_by(IntPolynomial({3, 0, 1})));
  CHECK_THROWS_AS(p.divide_exact(IntPolynomial()), Error);
}

TEST_CASE("integer roots") {
  CHECK(IntPolynomial::from_roots({4, 1}).integer_roots() == std::vector<std::int64_t>{1, 4});
  IntPolynomial rest;
  // t(t^2 - 3t + 3)
  auto r = IntPolynomial({0, 3, -3, 1}).integer_roots(&rest);
  CHECK(r == std::vector<std::int64_t>{0});
  CHECK(rest == IntPolynomial({3, -3, 1}));
  CHECK(IntPolynomial::from_roots({0, 0, -2, 6, 6}).integer_roots() == std::vector<std::int64_t>{-2, 0, 0, 6, 6});
}

TEST_CASE("strings") {
  CHECK(IntPolynomial({0, 3, -3, 1}).to_string() == "t^3 - 3*t^2 + 3*t");
  CHECK(IntPolynomial({0, 3, -3, 1}).to_factored_string() == "t*(t^2 - 3*t + 3)");
  CHECK(IntPolynomial::from_roots({1, 4, 1}).to_factored_string() == "(t - 1)^2*(t - 4)");
  CHECK(IntPolynomial::constant(-1).to_string() == "-1");
  CHECK(IntPolynomial().to_string() == "0");
}
