#pragma once

#include <string>
#include <vector>

#include "intersectlab/exactmath.hpp"
#include "intersectlab/setfamilies.hpp"

namespace intersectlab::lattice {

/// The line y = (r-1)x + t.
struct LatticeLine {
  int r = 2;
  int t = 1;

  LatticeLine(int r_, int t_);
  /// Lattice points on the line satisfy y - (r-1)x == t.
  bool on_line(long x, long y) const { return y - static_cast<long>(r - 1) * x == t; }
};

enum class Step : char { Up = 'U', Right = 'R' };

/// Monotone lattice path from the origin: step l is Up iff l ∈ F.
using Path = std::vector<Step>;

Path path_of_set(const Subset& f, int n);
Subset set_of_path(const Path& path);
std::string to_string(const Path& path);

/// Via the prefix-count condition |F ∩ [t+ri]| >= t+(r-1)i.
bool hits_line(const Subset& f, int n, const LatticeLine& line);
/// Same question answered by walking the path point by point.
bool hits_line_by_walk(const Subset& f, int n, const LatticeLine& line);

/// Paths from (0,0) to (n-k, k) touching the line, by first-touch DP.
BigInt count_hitting_paths(int n, int k, const LatticeLine& line);

/// Paths from (x0,y0) to (x1,y1) touching y = x + c (slope one), by DP.
BigInt count_paths_touching_diagonal(long x0, long y0, long x1, long y1, long c);

/// Probability that a uniform path to (n-i, i) hits the line.
BigRational g_uniform(int n, int i, const LatticeLine& line);

/// ell(t, i), i = 0..i_max: paths to (i, (r-1)i + t) whose first contact
/// with the line is that endpoint.
std::vector<BigInt> first_hit_counts(const LatticeLine& line, int i_max);

/// C(n-t, k-t-(r-1)i): paths from (i, t-i) to (n-k, k) touching
/// y = x + (r-2)i + t, by reflection. Requires r >= 3.
BigInt reflection_count(int n, int k, int i, const LatticeLine& line);

/// Upper bound sum_{0<=i<=t} C(t,i) C(n-t, k-t-(r-1)i) on r-wise
/// t-intersecting families, valid for r >= 3 and n >= 2k - t.
BigInt path_bound_all(int n, int k, int r, int t);
/// The i >= 1 part of path_bound_all, which bounds the members outside F_0.
BigInt path_bound_tail(int n, int k, int r, int t);
/// path_bound_all - C(n-t-1, k-t): the bound for families that are not t-stars.
BigInt path_bound_nonstar(int n, int k, int r, int t);

}  // namespace intersectlab::lattice
