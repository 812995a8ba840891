#include <doctest.h>

#include <cmath>

#include "intersectlab/error.hpp"
#include "intersectlab/lattice.hpp"
#include "intersectlab/search.hpp"
#include "intersectlab/walks.hpp"

using namespace intersectlab;
using walks::WalkParams;

namespace {

const BigRational kTol(1, BigInt("1000000000000"));
const BigRational kHalf(1, 2);

}  // namespace

TEST_CASE("finite walk hitting probabilities") {
  CHECK(walks::f_finite(1, {3, 1, kHalf}) == kHalf);
  for (int n = 0; n <= 10; ++n) CHECK(walks::f_finite(n, {3, 0, kHalf}) == 1);
  CHECK(walks::f_finite(0, {3, 2, kHalf}) == 0);
  CHECK(walks::f_finite(2, {3, 2, kHalf}) == BigRational(1, 4));
}

TEST_CASE("finite probabilities match a count over all walks") {
  for (int r = 2; r <= 4; ++r) {
    for (int t = 1; t <= 3; ++t) {
      for (int n = 0; n <= 12; ++n) {
        BigRational p(1, 3);
        BigRational total = 0;
        for (int k = 0; k <= n; ++k) {
          total += BigRational(lattice::count_hitting_paths(n, k, lattice::LatticeLine(r, t))) *
                   pow(p, k) * pow(BigRational(1) - p, n - k);
        }
        CHECK(walks::f_finite(n, {r, t, p}) == total);
      }
    }
  }
}

TEST_CASE("finite probabilities increase with n and approach gamma^t") {
  for (int r = 3; r <= 4; ++r) {
    for (int t = 1; t <= 4; ++t) {
      const RealInterval gt = pow_nonneg(walks::alpha(r, kTol), t);
      BigRational prev = 0;
      for (int n = 0; n <= 200; n += 5) {
        BigRational f = walks::f_finite(n, {r, t, kHalf});
        CHECK(prev <= f);
        CHECK(f <= gt.hi);
        prev = f;
      }
      if (r == 3) CHECK(gt.lo - prev < BigRational(1, 1000000));
    }
  }
}

TEST_CASE("gamma roots") {
  RealInterval a3 = walks::gamma_root(3, kHalf, kTol);
  CHECK(a3.width() <= kTol);
  const BigRational golden = from_double((std::sqrt(5.0) - 1) / 2);
  CHECK(abs(a3.midpoint() - golden) < BigRational(1, BigInt("1000000000000")));
  CHECK(walks::gamma_root(2, kHalf, kTol).contains(1));
  RealInterval a4 = walks::gamma_root(4, kHalf, kTol);
  CHECK(a4.lo > kHalf);
  CHECK(a4.hi < kHalf + BigRational(1, 16));
  for (int r = 2; r <= 6; ++r) {
    for (BigRational p : {BigRational(1, 10), BigRational(1, 3), BigRational(1, 2)}) {
      if (p >= BigRational(r - 1, r)) continue;
      RealInterval g = walks::gamma_root(r, p, kTol);
      CHECK(g.lo < p + (1 - p) * pow(g.lo, r));
      CHECK(g.hi > p + (1 - p) * pow(g.hi, r));
    }
  }
  CHECK_THROWS_AS(walks::gamma_root(3, kHalf, 0), Error);
  CHECK_THROWS_AS(walks::alpha(2, kTol), Error);
}

TEST_CASE("alpha_r^r bounds") {
  RealInterval cube = pow_nonneg(walks::alpha(3, kTol), 3);
  CHECK(cube.lo > BigRational(1, 5));
  CHECK(cube.hi <= BigRational(1, 4));
  for (int r = 3; r <= 16; ++r) {
    RealInterval power = pow_nonneg(walks::alpha(r, BigRational(1, BigInt(1) << 80)), r);
    const BigInt two_r = BigInt(1) << r;
    CHECK(power.lo > BigRational(1, two_r - r));
    CHECK(power.hi <= BigRational(1, two_r - r - 1));
  }
}

TEST_CASE("uniform walk probabilities stay below alpha^t") {
  for (int t = 1; t <= 3; ++t) {
    const RealInterval at = pow_nonneg(walks::alpha(3, kTol), t);
    for (int k = 1; k <= 12; ++k) CHECK(lattice::g_uniform(2 * k, k, lattice::LatticeLine(3, t)) <= at.hi);
  }
}

TEST_CASE("probability bound on family size") {
  RealInterval b = walks::prob_bound_alpha(10, 5, 3, 3);
  CHECK(b.lo > BigRational(59));
  CHECK(b.hi < BigRational(60));
  CHECK(walks::prob_bound_alpha(10, 5, 3, 0).contains(252));
  CHECK_THROWS_AS(walks::prob_bound_alpha(9, 5, 3, 2), Error);
  auto report = search::max_uniform(8, 3, 3, 2, false);
  CHECK(BigRational(report.optimum) <= walks::prob_bound_alpha(8, 3, 3, 2).hi);
}

TEST_CASE("Chernoff lower tail") {
  RealInterval e = walks::chernoff_lower_tail(8, 4);
  const bool near = abs(e.midpoint() - from_double(std::exp(-1.0))) < BigRational(1, 1000000000);
  CHECK(near);
  CHECK(walks::chernoff_lower_tail(8, 0).contains(1));
  BigRational tail = walks::binomial_tail_below(16, kHalf, 4);
  CHECK(tail == BigRational(1 + 16 + 120 + 560, 65536));
  CHECK(tail <= e.lo);
  CHECK_THROWS_AS(walks::chernoff_lower_tail(0, 1), Error);
}

TEST_CASE("Monte Carlo estimates agree with exact probabilities") {
  for (int t = 1; t <= 3; ++t) {
    const double exact = to_double(walks::f_finite(30, {3, t, kHalf}));
    auto est = walks::monte_carlo_f(30, 3, t, 0.5, 100000, 1234 + t);
    CHECK(est.trials == 100000);
    CHECK(std::abs(est.mean - exact) <= 3 * est.stderr_);
  }
}
