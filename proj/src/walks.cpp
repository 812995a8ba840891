#include "intersectlab/walks.hpp"

#include <cmath>
#include <random>
#include <vector>

#include "intersectlab/error.hpp"

namespace intersectlab::walks {

BigRational f_finite(int n, const WalkParams& params) {
  require(n >= 0, "walk length must be non-negative");
  require(params.r >= 2, "r must be at least 2");
  require(params.p >= 0 && params.p <= 1, "p must lie in [0, 1]");
  const int r = params.r;
  const BigRational& p = params.p;
  const BigRational q = 1 - p;
  if (params.t <= 0) return 1;
  if (params.t > n) return 0;

  // level[g] = f(m, g) for gaps 1..m; gaps <= 0 are absorbed (value 1) and
  // gaps > m cannot be closed in the remaining steps (value 0).
  std::vector<BigRational> level(1);
  for (int m = 0; m < n; ++m) {
    auto at = [&](long gap) -> BigRational {
      if (gap <= 0) return 1;
      if (gap > m) return 0;
      return level[static_cast<std::size_t>(gap)];
    };
    std::vector<BigRational> next(static_cast<std::size_t>(m + 2));
    for (long gap = 1; gap <= m + 1; ++gap) {
      next[static_cast<std::size_t>(gap)] = p * at(gap - 1) + q * at(gap + r - 1);
    }
    level = std::move(next);
  }
  return level[static_cast<std::size_t>(params.t)];
}

namespace {

// Sign of h(x) = p + (1-p) x^r - x.
int fixed_point_sign(const BigRational& x, int r, const BigRational& p) {
  BigRational h = p + (1 - p) * pow(x, static_cast<unsigned>(r)) - x;
  return sgn(h);
}

}  // namespace

RealInterval gamma_root(int r, const BigRational& p, const BigRational& tol) {
  require(r >= 2, "r must be at least 2");
  require(p > 0 && p < 1, "gamma_root needs 0 < p < 1");
  require(tol > 0, "tolerance must be positive");
  // h(1) = 0 and h'(1) = (1-p) r - 1; an interior root needs h'(1) > 0.
  if (p * r >= r - 1) return RealInterval::point(1);

  BigRational lo = p;  // h(p) = (1-p) p^r > 0
  BigRational hi = BigRational(1, 2);
  while (fixed_point_sign(hi, r, p) >= 0 || hi <= lo) {
    hi = (hi + 1) / 2;
  }
  while (hi - lo > tol) {
    BigRational mid = (lo + hi) / 2;
    int s = fixed_point_sign(mid, r, p);
    if (s == 0) return RealInterval::point(mid);
    if (s > 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {lo, hi};
}

RealInterval alpha(int r, const BigRational& tol) {
  require(r >= 3, "alpha_r is defined here for r >= 3");
  return gamma_root(r, BigRational(1, 2), tol);
}

RealInterval prob_bound_alpha(int n, int k, int r, int t, const BigRational& tol) {
  require(k >= 0 && n >= 2 * k, "prob_bound_alpha needs n >= 2k");
  require(t >= 0, "t must be non-negative");
  const BigInt total = binom(n, k);
  if (t == 0) return RealInterval::point(total);
  // d/dx x^t C(n,k) <= t C(n,k) on [0,1].
  BigRational alpha_tol = tol / (BigRational(t) * (total == 0 ? BigInt(1) : total));
  RealInterval a = alpha(r, alpha_tol);
  return pow_nonneg(a, static_cast<unsigned>(t)) * BigRational(total);
}

RealInterval chernoff_lower_tail(const BigRational& lambda, const BigRational& a,
                                 const BigRational& tol) {
  require(lambda > 0, "lambda must be positive");
  require(a >= 0, "a must be non-negative");
  return exp_neg_interval(a * a / (2 * lambda), tol);
}

BigRational binomial_tail_below(int n, const BigRational& p, const BigRational& x) {
  require(n >= 0, "n must be non-negative");
  require(p >= 0 && p <= 1, "p must lie in [0, 1]");
  BigRational total = 0;
  const BigRational q = 1 - p;
  for (int j = 0; j <= n && BigRational(j) < x; ++j) {
    total += BigRational(binom(n, j)) * pow(p, static_cast<unsigned>(j)) *
             pow(q, static_cast<unsigned>(n - j));
  }
  return total;
}

MonteCarloEstimate monte_carlo_f(int n, int r, int t, double p, std::uint64_t trials,
                                 std::uint64_t seed) {
  require(trials > 0, "need at least one trial");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution up(p);
  std::uint64_t hits = 0;
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    long gap = t;
    bool hit = gap <= 0;
    for (int step = 0; step < n && !hit; ++step) {
      gap += up(rng) ? -1 : (r - 1);
      hit = gap == 0;
    }
    hits += hit ? 1 : 0;
  }
  MonteCarloEstimate est;
  est.trials = trials;
  est.mean = static_cast<double>(hits) / static_cast<double>(trials);
  est.stderr_ = std::sqrt(est.mean * (1 - est.mean) / static_cast<double>(trials));
  return est;
}

}  // namespace intersectlab::walks
