#pragma once

#include <optional>

#include "intersectlab/exactmath.hpp"
#include "intersectlab/setfamilies.hpp"

namespace intersectlab::shadows {

/// All (k-b)-sets contained in some member; 1 <= b < k.
Family lower_shadow(const Family& fam, int b);

/// All (k+1)-subsets of [n] containing some member; k < n.
Family upper_shadow(const Family& fam);

/// min over 0 <= i <= (k-t)/(r-1) of C(ri+t, i+b) / C(ri+t, i); 0 < b <= t.
BigRational shadow_ratio_min(int k, int r, int t, int b);

/// |F| * shadow_ratio_min: a lower bound on |∂^(b) F| for r-wise
/// t-intersecting k-uniform F.
BigRational shadow_lower_bound(const BigInt& family_size, int k, int r, int t, int b);

/// If |F| > C(m, k) then |∂F| > C(m, k-1); returns whether the implication
/// holds on this family (vacuously true when |F| <= C(m, k)).
bool kruskal_katona_check(const Family& fam, int m);

struct ShadowReport {
  BigInt input_size;
  BigInt output_size;
  /// Lower bound on the output size; absent when the hypotheses of the
  /// bound do not hold for this input.
  std::optional<BigRational> bound;
  bool bound_satisfied = true;
};

/// b-th shadow with the r-wise t-intersecting lower bound attached when the
/// family is r-wise t-intersecting and b <= t.
ShadowReport shadow_report(const Family& fam, int b, int r, int t);

}  // namespace intersectlab::shadows
