#pragma once

#include <optional>
#include <vector>

#include "intersectlab/exactmath.hpp"
#include "intersectlab/search.hpp"

namespace intersectlab::thresholds {

/// (2.5t)^(1/(r-1))(k-t) + k for r in {3,4}, (2t)^(1/(r-1))(k-t) + k for
/// r >= 5: the point from which the full t-star is optimal. Needs k >= t+r.
RealInterval n0_upper_bound(int k, int r, int t,
                            const BigRational& tol = default_refinement_cap());

/// ((t+r)/2)^(1/(r-1))(k-t), below n0 whenever t >= 2^r - r.
RealInterval n0_lower_bound(int k, int r, int t,
                            const BigRational& tol = default_refinement_cap());

/// floor(((t+r)/2)^(1/(r-1))(k-t-r+2) + t+r-2): an n at which A_1 beats the
/// full t-star when t >= 2^r - r and k >= t+r.
BigInt lower_bound_witness_n(int k, int r, int t);

/// (sqrt(4t+9)-1)/2, the ratio n/k at which A_1 and the star cross for r = 3.
RealInterval crossover_ratio(int t, const BigRational& tol = default_refinement_cap());

/// n >= ((sqrt(4t+9)-1)/2) k, decided as (2n+k)^2 >= (4t+9)k^2.
bool at_or_above_crossover(long n, long k, int t);

/// Least integer n with at_or_above_crossover(n, k, t).
long crossover_n(long k, int t);

/// floor(((sqrt(4t+9)-1)/2 - eps) k).
long below_crossover_n(long k, int t, const BigRational& eps);

/// k >= (t^2+2t)/(2 eps) and 0 < eps < 1/10: when A_1 provably wins below the
/// crossover.
bool lower_regime_applies(long k, int t, const BigRational& eps);

struct ScanRow {
  int n = 0;
  BigInt a1;
  BigInt star;
  BigInt max_frankl;
  int max_frankl_index = 0;
  /// sign(|A_1| - C(n-t,k-t)) and sign(max_i |A_i| - C(n-t,k-t)).
  int sign_a1 = 0;
  int sign_max = 0;
  /// Exact optimum when the search was feasible at this n.
  std::optional<BigInt> optimum;
};

struct ThresholdScan {
  int k = 0;
  int r = 0;
  int t = 0;
  int n_from = 0;
  int n_to = 0;
  std::vector<ScanRow> rows;
  /// Every sign is an exact integer comparison.
  bool certified = true;
  /// For r = 3: |A_1| < star at every scanned n at or above the crossover.
  std::optional<bool> upper_regime_holds;
};

/// Exact sizes of A_1 and the best A_i against the full t-star for n in
/// [n_from, n_to] with n >= t+r.
ThresholdScan star_vs_A1_scan(int k, int r, int t, int n_from, int n_to);

struct FranklVerdict {
  BigInt star;
  BigInt best_frankl;
  int best_index = 0;
  bool star_is_max = true;
  std::optional<BigInt> optimum;
  /// Whether the optimum equals max_i |A_i|; known when the search ran.
  std::optional<bool> optimum_is_max_frankl;
};

/// max_i |A_i(n,k,r,t)| against A_0, with the exact optimum when
/// C(n,k) <= options.cap.
FranklVerdict max_frankl_vs_star(int n, int k, int r, int t,
                                 const search::SearchOptions& options = {});

/// r = 3 scan of n within `span` of the crossover, with exact optima where
/// C(n,k) <= options.cap.
ThresholdScan crossover_scan(int k, int t, int span,
                             const search::SearchOptions& options = {});

}  // namespace intersectlab::thresholds
