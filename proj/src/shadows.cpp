#include "intersectlab/shadows.hpp"

#include <unordered_set>

#include "intersectlab/error.hpp"

namespace intersectlab::shadows {

namespace {

int uniform_size(const Family& fam) {
  auto k = fam.member_size();
  require(k.has_value(), "shadow needs a uniform family with known k");
  return *k;
}

}  // namespace

Family lower_shadow(const Family& fam, int b) {
  const int k = uniform_size(fam);
  require(b >= 1 && b < k, "shadow order b must satisfy 1 <= b < k");
  const int keep = k - b;
  std::unordered_set<Mask> seen;
  std::vector<Mask> out;
  for (Mask m : fam) {
    // Choose `keep` positions among the k elements of m.
    const auto elems = elements_of(m);
    for_each_k_subset(k, keep, [&](Mask pick) {
      Mask sub = 0;
      for (Mask p = pick; p; p &= p - 1) {
        sub |= element_bit(elems[static_cast<std::size_t>(__builtin_ctzll(p))]);
      }
      if (seen.insert(sub).second) out.push_back(sub);
    });
  }
  return Family(fam.ground(), std::move(out), keep);
}

Family upper_shadow(const Family& fam) {
  const int n = fam.ground();
  auto k = fam.member_size();
  if (!k) {
    require(fam.empty(), "upper shadow needs a uniform family");
    return Family(n);
  }
  require(*k < n, "upper shadow needs k < n");
  std::unordered_set<Mask> seen;
  std::vector<Mask> out;
  const Mask all = prefix_mask(n);
  for (Mask m : fam) {
    for (Mask free = all & ~m; free; free &= free - 1) {
      Mask sup = m | (free & (~free + 1));
      if (seen.insert(sup).second) out.push_back(sup);
    }
  }
  return Family(n, std::move(out), *k + 1);
}

BigRational shadow_ratio_min(int k, int r, int t, int b) {
  require(r >= 2 && t >= 1, "need r >= 2 and t >= 1");
  require(b > 0 && b <= t, "shadow bound needs 0 < b <= t");
  require(k >= t, "shadow bound needs k >= t");
  std::optional<BigRational> best;
  for (int i = 0; (r - 1) * i <= k - t; ++i) {
    const int top = r * i + t;
    BigRational ratio = make_rational(binom(top, i + b), binom(top, i));
    if (!best || ratio < *best) best = ratio;
  }
  return *best;
}

BigRational shadow_lower_bound(const BigInt& family_size, int k, int r, int t, int b) {
  return BigRational(family_size) * shadow_ratio_min(k, r, t, b);
}

bool kruskal_katona_check(const Family& fam, int m) {
  const int k = uniform_size(fam);
  require(k >= 2, "the shadow needs k >= 2");
  require(k <= m && m <= fam.ground(), "need k <= m <= n");
  if (BigInt(static_cast<unsigned long>(fam.size())) <= binom(m, k)) return true;
  const Family shadow = lower_shadow(fam, 1);
  return BigInt(static_cast<unsigned long>(shadow.size())) > binom(m, k - 1);
}

ShadowReport shadow_report(const Family& fam, int b, int r, int t) {
  const int k = uniform_size(fam);
  const Family shadow = lower_shadow(fam, b);
  ShadowReport report;
  report.input_size = static_cast<unsigned long>(fam.size());
  report.output_size = static_cast<unsigned long>(shadow.size());
  if (r >= 2 && t >= 1 && b <= t && k >= t && is_rwise_t_intersecting(fam, r, t)) {
    report.bound = shadow_lower_bound(report.input_size, k, r, t, b);
    report.bound_satisfied = BigRational(report.output_size) >= *report.bound;
  }
  return report;
}

}  // namespace intersectlab::shadows
