#include "intersectlab/thresholds.hpp"

#include <algorithm>

#include "intersectlab/canonical.hpp"
#include "intersectlab/error.hpp"

namespace intersectlab::thresholds {

namespace {

int sign_of(const BigInt& a, const BigInt& b) {
  const int c = cmp(a, b);
  return (c > 0) - (c < 0);
}

// root * scale + shift with root = base^(1/d), scale >= 0.
RealInterval root_affine(const BigRational& base, int d, const BigRational& scale,
                         const BigRational& shift, const BigRational& tol) {
  BigRational root_tol = scale > 0 ? BigRational(tol / scale) : tol;
  return nth_root_interval(base, static_cast<unsigned>(d), root_tol) * scale + shift;
}

BigInt frankl_size(int n, int k, int r, int t, int i) {
  return canonical::size_frankl(canonical::FranklSpec{n, k, r, t, i});
}

bool search_feasible(int n, int k, const search::SearchOptions& options) {
  return binom(n, k) <= BigInt(static_cast<unsigned long>(options.cap));
}

ScanRow scan_row(int n, int k, int r, int t) {
  ScanRow row;
  row.n = n;
  row.star = binom(n - t, k - t);
  row.a1 = frankl_size(n, k, r, t, 1);
  row.max_frankl = row.star;
  const int last = *canonical::max_frankl_index(n, k, r, t);
  for (int i = 1; i <= last; ++i) {
    BigInt size = frankl_size(n, k, r, t, i);
    if (size > row.max_frankl) {
      row.max_frankl = size;
      row.max_frankl_index = i;
    }
  }
  row.sign_a1 = sign_of(row.a1, row.star);
  row.sign_max = sign_of(row.max_frankl, row.star);
  return row;
}

}  // namespace

RealInterval n0_upper_bound(int k, int r, int t, const BigRational& tol) {
  require(r >= 3, "the n0 bound needs r >= 3");
  require(t >= 1, "t must be at least 1");
  require(k >= t + r, "the n0 bound needs k >= t + r");
  const BigRational base = r <= 4 ? BigRational(5 * t, 2) : BigRational(2 * t);
  return root_affine(base, r - 1, BigRational(k - t), BigRational(k), tol);
}

RealInterval n0_lower_bound(int k, int r, int t, const BigRational& tol) {
  require(r >= 3, "the n0 bound needs r >= 3");
  require(t >= 1 && k >= t, "need t >= 1 and k >= t");
  return root_affine(BigRational(t + r, 2), r - 1, BigRational(k - t), BigRational(0), tol);
}

BigInt lower_bound_witness_n(int k, int r, int t) {
  require(r >= 3, "need r >= 3");
  require(t >= 1 && k >= t + r, "need t >= 1 and k >= t + r");
  return certified_floor([&](const BigRational& tol) {
    return root_affine(BigRational(t + r, 2), r - 1, BigRational(k - t - r + 2),
                       BigRational(t + r - 2), tol);
  });
}

RealInterval crossover_ratio(int t, const BigRational& tol) {
  require(t >= 1, "t must be at least 1");
  RealInterval root = nth_root_interval(BigRational(4 * t + 9), 2, tol * 2);
  return {(root.lo - 1) / 2, (root.hi - 1) / 2};
}

bool at_or_above_crossover(long n, long k, int t) {
  require(n >= 0 && k >= 1, "need n >= 0 and k >= 1");
  const BigInt lhs = BigInt(2 * n + k) * BigInt(2 * n + k);
  return lhs >= BigInt(4L * t + 9) * BigInt(k) * BigInt(k);
}

long crossover_n(long k, int t) {
  require(k >= 1 && t >= 1, "need k >= 1 and t >= 1");
  // Smallest q with q^2 >= (4t+9)k^2, then smallest n with 2n + k >= q.
  const BigInt target = BigInt(4L * t + 9) * BigInt(k) * BigInt(k);
  BigInt q;
  mpz_sqrt(q.get_mpz_t(), target.get_mpz_t());
  if (q * q < target) q += 1;
  BigInt diff = q - k;
  BigInt n;
  mpz_cdiv_q_ui(n.get_mpz_t(), diff.get_mpz_t(), 2);
  return n.get_si();
}

long below_crossover_n(long k, int t, const BigRational& eps) {
  require(k >= 1 && t >= 1, "need k >= 1 and t >= 1");
  return certified_floor([&](const BigRational& tol) {
           RealInterval ratio = crossover_ratio(t, tol / k);
           return RealInterval{ratio.lo - eps, ratio.hi - eps} * BigRational(k);
         })
      .get_si();
}

bool lower_regime_applies(long k, int t, const BigRational& eps) {
  if (eps <= 0 || eps >= BigRational(1, 10)) return false;
  return BigRational(k) >= BigRational(t * t + 2 * t) / (eps * 2);
}

ThresholdScan star_vs_A1_scan(int k, int r, int t, int n_from, int n_to) {
  require(r >= 2 && t >= 1, "need r >= 2 and t >= 1");
  require(k >= t, "need k >= t");
  require(n_from <= n_to, "empty scan range");
  ThresholdScan scan{k, r, t, n_from, n_to, {}, true, std::nullopt};
  bool upper_ok = true;
  bool upper_seen = false;
  for (int n = std::max({n_from, k, t + r}); n <= n_to; ++n) {
    ScanRow row = scan_row(n, k, r, t);
    if (r == 3 && at_or_above_crossover(n, k, t)) {
      upper_seen = true;
      upper_ok = upper_ok && row.sign_a1 < 0;
    }
    scan.rows.push_back(std::move(row));
  }
  if (r == 3 && upper_seen) scan.upper_regime_holds = upper_ok;
  return scan;
}

FranklVerdict max_frankl_vs_star(int n, int k, int r, int t,
                                 const search::SearchOptions& options) {
  require(r >= 2 && t >= 1, "need r >= 2 and t >= 1");
  require(t <= k && k <= n, "need t <= k <= n");
  FranklVerdict verdict;
  const ScanRow row = scan_row(n, k, r, t);
  verdict.star = row.star;
  verdict.best_frankl = row.max_frankl;
  verdict.best_index = row.max_frankl_index;
  verdict.star_is_max = row.sign_max <= 0;
  if (n <= kMaxGround && search_feasible(n, k, options)) {
    search::SearchOptions quick = options;
    quick.uniqueness_cap = 0;
    verdict.optimum = search::max_uniform(n, k, r, t, false, quick).optimum;
    verdict.optimum_is_max_frankl = *verdict.optimum == verdict.best_frankl;
  }
  return verdict;
}

ThresholdScan crossover_scan(int k, int t, int span, const search::SearchOptions& options) {
  require(k >= t && t >= 1, "need k >= t >= 1");
  require(span >= 0, "span must be non-negative");
  const long centre = crossover_n(k, t);
  const int from = static_cast<int>(std::max<long>(centre - span, k));
  const int to = static_cast<int>(centre + span);
  ThresholdScan scan = star_vs_A1_scan(k, 3, t, from, to);
  for (ScanRow& row : scan.rows) {
    if (row.n <= kMaxGround && search_feasible(row.n, k, options)) {
      search::SearchOptions quick = options;
      quick.uniqueness_cap = 0;
      row.optimum = search::max_uniform(row.n, k, 3, t, false, quick).optimum;
    }
  }
  return scan;
}

}  // namespace intersectlab::thresholds
