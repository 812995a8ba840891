#pragma once

#include <optional>

#include "intersectlab/exactmath.hpp"
#include "intersectlab/setfamilies.hpp"

namespace intersectlab::canonical {

/// Parameters of the Frankl family A_i: sets missing at most i elements of
/// [t + r i]. Without k the family is the non-uniform one inside 2^[n].
struct FranklSpec {
  int n = 0;
  std::optional<int> k;
  int r = 2;
  int t = 1;
  int i = 0;
};

/// Explicit construction; n <= 64 when uniform, n <= 20 otherwise.
Family build_frankl(const FranklSpec& spec);

/// Cardinality by the deficiency sum; no bound on n.
BigInt size_frankl(const FranklSpec& spec);

/// Largest feasible i for given (n, k, r, t): t + r i <= n and
/// k - t - (r-1) i >= 0. Returns nullopt when even i = 0 is infeasible.
std::optional<int> max_frankl_index(int n, int k, int r, int t);

/// The family B(n,k,r,t): sets containing [t+r-2] and meeting [t+r-1, k+1],
/// together with [k+1] \ {j} for j <= t+r-2.
Family build_hmf(int n, int k, int r, int t);

/// All k-subsets of [n] containing [t].
Family build_full_star(int n, int k, int t);

}  // namespace intersectlab::canonical
