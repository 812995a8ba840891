#include <doctest.h>

#include "intersectlab/error.hpp"
#include "intersectlab/exactmath.hpp"

using namespace intersectlab;

TEST_CASE("binomial coefficients") {
  CHECK(binom(5, 2) == 10);
  CHECK(binom(4, 7) == 0);
  CHECK(binom(8, 3) == 56);
  CHECK(binom(7, -1) == 0);
  CHECK(binom(0, 0) == 1);
}

TEST_CASE("binomials satisfy the Pascal recurrence") {
  for (long n = 1; n <= 60; ++n) {
    for (long k = 1; k <= n; ++k) CHECK(binom(n, k) == binom(n - 1, k - 1) + binom(n - 1, k));
  }
}

TEST_CASE("nth root intervals") {
  const BigRational tol(1, 1000000);
  auto five = nth_root_interval(25, 2, tol);
  CHECK(five.contains(5));
  CHECK(five.width() <= tol);

  const BigRational fine(1, 1000000000);
  auto root5 = nth_root_interval(5, 2, fine);
  CHECK(root5.lo * root5.lo <= 5);
  CHECK(root5.hi * root5.hi >= 5);
  CHECK(root5.width() <= fine);

  auto one = nth_root_interval(1, 7, BigRational(1, 1000));
  CHECK(one.contains(1));

  auto cube = nth_root_interval(BigRational(27, 8), 3, fine);
  CHECK(cube.contains(BigRational(3, 2)));
}

TEST_CASE("root intervals bracket the exact root by bisection") {
  for (int x = 2; x <= 40; ++x) {
    for (unsigned d = 2; d <= 5; ++d) {
      const BigRational tol(1, 1u << 20);
      auto iv = nth_root_interval(x, d, tol);
      CHECK(pow(iv.lo, d) <= x);
      CHECK(pow(iv.hi, d) >= x);
      CHECK(iv.width() <= tol);
    }
  }
}

TEST_CASE("exp(-q) interval") {
  auto e1 = exp_neg_interval(1, BigRational(1, 1000000));
  CHECK(e1.lo <= from_double(0.36787944117144233));
  CHECK(e1.hi >= from_double(0.36787944117144233) - BigRational(1, 1000000000));
  CHECK(e1.width() <= BigRational(1, 1000000));
  CHECK(exp_neg_interval(0, BigRational(1, 1000)).contains(1));
}

TEST_CASE("certified comparison and floor") {
  auto sqrt2 = [](const BigRational& tol) { return nth_root_interval(2, 2, tol); };
  CHECK(certified_compare(sqrt2, BigRational(141, 100)) == 1);
  CHECK(certified_compare(sqrt2, BigRational(142, 100)) == -1);
  CHECK(certified_floor(sqrt2) == 1);
  auto exact = [](const BigRational&) { return RealInterval::point(BigRational(7, 2)); };
  CHECK(certified_compare(exact, BigRational(7, 2)) == 0);
  CHECK(certified_floor(exact) == 3);
}

TEST_CASE("an interval that keeps straddling an integer is undecidable") {
  auto straddle = [](const BigRational& tol) {
    return RealInterval{BigRational(3) - tol / 2, BigRational(3) + tol / 2};
  };
  CHECK_THROWS_AS(certified_floor(straddle), Error);
  CHECK_THROWS_AS(certified_compare(straddle, BigRational(3)), Error);
}

TEST_CASE("rational parsing and decimals") {
  CHECK(parse_rational("1/2") == BigRational(1, 2));
  CHECK(parse_rational("0.25") == BigRational(1, 4));
  CHECK(parse_rational("1e-3") == BigRational(1, 1000));
  CHECK(parse_rational("-3") == BigRational(-3));
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK(to_decimal(BigRational(1, 3), 5) == "0.33333");
}
