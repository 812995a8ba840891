#pragma once

#include <cstdint>

#include "intersectlab/exactmath.hpp"

namespace intersectlab::walks {

/// A p-random walk steps up with probability p and right with 1-p; the
/// barrier is y = (r-1)x + t.
struct WalkParams {
  int r = 2;
  int t = 1;
  BigRational p{1, 2};
};

/// Exact probability that a walk of length n touches the barrier, from
/// f(m+1, t) = p f(m, t-1) + (1-p) f(m, t+r-1) with f(., t <= 0) = 1 and
/// f(0, t >= 1) = 0.
BigRational f_finite(int n, const WalkParams& params);

/// Root of x = p + (1-p) x^r in (0,1) when p < (r-1)/r; the point
/// interval [1,1] when p >= (r-1)/r, where the walk hits almost surely.
RealInterval gamma_root(int r, const BigRational& p, const BigRational& tol);

/// gamma_root(r, 1/2, tol); r >= 3.
RealInterval alpha(int r, const BigRational& tol);

/// alpha_r^t * C(n, k), an upper bound on r-wise t-intersecting k-uniform
/// families for n >= 2k.
RealInterval prob_bound_alpha(int n, int k, int r, int t,
                              const BigRational& tol = default_refinement_cap());

/// Interval containing exp(-a^2 / (2 lambda)).
RealInterval chernoff_lower_tail(const BigRational& lambda, const BigRational& a,
                                 const BigRational& tol = default_refinement_cap());

/// Pr(X < x) for X ~ Bin(n, p), exactly.
BigRational binomial_tail_below(int n, const BigRational& p, const BigRational& x);

struct MonteCarloEstimate {
  double mean = 0;
  double stderr_ = 0;
  std::uint64_t trials = 0;
};

/// Sampled hit frequency; a sanity harness for f_finite, seeded for
/// reproducibility.
MonteCarloEstimate monte_carlo_f(int n, int r, int t, double p, std::uint64_t trials,
                                 std::uint64_t seed);

}  // namespace intersectlab::walks
