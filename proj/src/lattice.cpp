#include "intersectlab/lattice.hpp"

#include <string>

#include "intersectlab/error.hpp"

namespace intersectlab::lattice {

LatticeLine::LatticeLine(int r_, int t_) : r(r_), t(t_) {
  require(r >= 2, "line needs r >= 2");
  require(t >= 1, "line needs t >= 1");
}

Path path_of_set(const Subset& f, int n) {
  require(n >= 0 && n <= kMaxGround, "path length must lie in [0, 64]");
  require((f.bits() & ~prefix_mask(n)) == 0, "set is not inside [n]");
  Path path;
  path.reserve(static_cast<std::size_t>(n));
  for (int e = 1; e <= n; ++e) path.push_back(f.contains(e) ? Step::Up : Step::Right);
  return path;
}

Subset set_of_path(const Path& path) {
  const int n = static_cast<int>(path.size());
  Mask bits = 0;
  for (int e = 1; e <= n; ++e) {
    if (path[static_cast<std::size_t>(e - 1)] == Step::Up) bits |= element_bit(e);
  }
  return Subset(n, bits);
}

std::string to_string(const Path& path) {
  std::string s;
  for (Step st : path) s.push_back(static_cast<char>(st));
  return s;
}

bool hits_line(const Subset& f, int n, const LatticeLine& line) {
  require((f.bits() & ~prefix_mask(n)) == 0, "set is not inside [n]");
  for (int i = 0; line.t + line.r * i <= n; ++i) {
    if (popcount(f.bits() & prefix_mask(line.t + line.r * i)) >= line.t + (line.r - 1) * i) {
      return true;
    }
  }
  return false;
}

bool hits_line_by_walk(const Subset& f, int n, const LatticeLine& line) {
  long x = 0, y = 0;
  if (line.on_line(x, y)) return true;
  for (Step st : path_of_set(f, n)) {
    if (st == Step::Up) {
      ++y;
    } else {
      ++x;
    }
    if (line.on_line(x, y)) return true;
  }
  return false;
}

namespace {

// First-touch table over the box [0,w] x [0,h], shifted by (x0, y0):
// entry (x, y) counts paths from the box origin whose earlier points all
// avoid the barrier. Barrier points absorb and do not propagate.
template <class OnBarrier>
std::vector<std::vector<BigInt>> first_touch_table(long w, long h, OnBarrier on_barrier) {
  std::vector<std::vector<BigInt>> a(static_cast<std::size_t>(w + 1),
                                     std::vector<BigInt>(static_cast<std::size_t>(h + 1)));
  for (long x = 0; x <= w; ++x) {
    for (long y = 0; y <= h; ++y) {
      BigInt& cell = a[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
      if (x == 0 && y == 0) {
        cell = 1;
        continue;
      }
      if (x > 0 && !on_barrier(x - 1, y)) cell += a[static_cast<std::size_t>(x - 1)][static_cast<std::size_t>(y)];
      if (y > 0 && !on_barrier(x, y - 1)) cell += a[static_cast<std::size_t>(x)][static_cast<std::size_t>(y - 1)];
    }
  }
  return a;
}

template <class OnBarrier>
BigInt count_touching(long w, long h, OnBarrier on_barrier) {
  if (w < 0 || h < 0) return 0;
  auto a = first_touch_table(w, h, on_barrier);
  BigInt total = 0;
  for (long x = 0; x <= w; ++x) {
    for (long y = 0; y <= h; ++y) {
      if (!on_barrier(x, y)) continue;
      total += a[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] *
               binom((w - x) + (h - y), h - y);
    }
  }
  return total;
}

}  // namespace

BigInt count_hitting_paths(int n, int k, const LatticeLine& line) {
  require(k >= 0 && k <= n, "count_hitting_paths needs 0 <= k <= n");
  return count_touching(n - k, k, [&](long x, long y) { return line.on_line(x, y); });
}

BigInt count_paths_touching_diagonal(long x0, long y0, long x1, long y1, long c) {
  return count_touching(x1 - x0, y1 - y0,
                        [&](long x, long y) { return (y + y0) - (x + x0) == c; });
}

BigRational g_uniform(int n, int i, const LatticeLine& line) {
  require(i >= 0 && i <= n, "g_uniform needs 0 <= i <= n");
  return make_rational(count_hitting_paths(n, i, line), binom(n, i));
}

std::vector<BigInt> first_hit_counts(const LatticeLine& line, int i_max) {
  require(i_max >= 0, "i_max must be non-negative");
  const long h = static_cast<long>(line.r - 1) * i_max + line.t;
  auto a = first_touch_table(i_max, h, [&](long x, long y) { return line.on_line(x, y); });
  std::vector<BigInt> out;
  for (int i = 0; i <= i_max; ++i) {
    out.push_back(a[static_cast<std::size_t>(i)][static_cast<std::size_t>((line.r - 1) * i + line.t)]);
  }
  return out;
}

BigInt reflection_count(int n, int k, int i, const LatticeLine& line) {
  require(line.r >= 3, "reflection_count needs r >= 3");
  require(i >= 0, "i must be non-negative");
  if (n < line.t) return 0;
  return binom(n - line.t, k - line.t - (line.r - 1) * i);
}

namespace {

void check_bound_args(int n, int k, int r, int t) {
  require(r >= 3, "path bounds need r >= 3");
  require(t >= 1, "path bounds need t >= 1");
  require(k >= 0 && n >= t && n >= 2 * k - t, "path bounds need n >= 2k - t");
}

}  // namespace

BigInt path_bound_tail(int n, int k, int r, int t) {
  check_bound_args(n, k, r, t);
  BigInt total = 0;
  for (int i = 1; i <= t; ++i) total += binom(t, i) * binom(n - t, k - t - (r - 1) * i);
  return total;
}

BigInt path_bound_all(int n, int k, int r, int t) {
  return binom(n - t, k - t) + path_bound_tail(n, k, r, t);
}

BigInt path_bound_nonstar(int n, int k, int r, int t) {
  check_bound_args(n, k, r, t);
  BigInt star_part = n - t - 1 >= 0 ? binom(n - t - 1, k - t) : BigInt(0);
  return path_bound_all(n, k, r, t) - star_part;
}

}  // namespace intersectlab::lattice
