#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "intersectlab/exactmath.hpp"
#include "intersectlab/setfamilies.hpp"

namespace intersectlab::search {

struct SearchOptions {
  /// Largest C(n,k) a uniform search accepts.
  std::uint64_t cap = 300;
  /// Node budget for the optimum search itself; 0 means unlimited.
  /// Exceeding it raises a CapExceeded error.
  std::uint64_t node_budget = 0;
  /// Restrict the plain optimum search to shifted families.
  bool shift_reduction = true;
  /// Largest C(n,k) for which all_optima_are_t_stars is decided.
  std::uint64_t uniqueness_cap = 300;
  /// Node budget for deciding all_optima_are_t_stars; 0 means unlimited.
  std::uint64_t uniqueness_node_budget = 50'000'000;
};

struct SearchReport {
  BigInt optimum;
  Family witness;
  /// Unknown when the uniqueness search was skipped or ran out of budget.
  std::optional<bool> all_optima_are_t_stars;
  std::uint64_t nodes_explored = 0;
  /// The optimum is attained only by the empty family.
  bool empty = false;
  /// k < t, so no k-set qualifies.
  bool infeasible = false;
  double wall_seconds = 0;
};

/// m(n,k,r,t), or m*(n,k,r,t) when `nontrivial` is set.
SearchReport max_uniform(int n, int k, int r, int t, bool nontrivial,
                         const SearchOptions& options = {});

/// m(n,r,t) or m*(n,r,t) over families in 2^[n]; n <= 6.
SearchReport max_nonuniform(int n, int r, int t, bool nontrivial);

/// m(n,k,r,t) <= m(n-1,k,r,t) + m(n-1,k-1,r,t); requires (r-1)n > rk-t.
bool verify_deletion_recursion(int n, int k, int r, int t,
                               const SearchOptions& options = {});

/// Every r-wise t-intersecting family of k-sets that is not a t-star has
/// k >= t+r, or k = t+r-1 and all members inside one (k+1)-set.
bool check_small_k_dichotomy(int n, int k, int r, int t,
                             const SearchOptions& options = {});

/// Visits every shifted r-wise t-intersecting family of k-subsets of [n],
/// the empty family included. Returns the number of families visited.
std::uint64_t for_each_shifted_family(
    int n, int k, int r, int t,
    const std::function<void(const std::vector<Mask>&)>& visit,
    const SearchOptions& options = {});

}  // namespace intersectlab::search
