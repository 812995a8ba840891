#include "intersectlab/canonical.hpp"

#include <string>

#include "intersectlab/error.hpp"

namespace intersectlab::canonical {

namespace {

void validate(const FranklSpec& s) {
  require(s.r >= 2, "r must be at least 2");
  require(s.t >= 1, "t must be at least 1");
  require(s.i >= 0, "i must be non-negative");
  require(s.n >= 0, "n must be non-negative");
  require(s.t + s.r * s.i <= s.n,
          "t + r*i = " + std::to_string(s.t + s.r * s.i) + " exceeds n = " + std::to_string(s.n));
  if (s.k) require(*s.k >= 0 && *s.k <= s.n, "k must lie in [0, n]");
}

}  // namespace

Family build_frankl(const FranklSpec& spec) {
  validate(spec);
  const int width = spec.t + spec.r * spec.i;
  const int need = spec.t + (spec.r - 1) * spec.i;
  const Mask window = prefix_mask(width);
  std::vector<Mask> members;
  if (spec.k) {
    if (spec.n > kMaxGround) fail(ErrorCode::CapExceeded, "explicit construction needs n <= 64");
    for_each_k_subset(spec.n, *spec.k, [&](Mask m) {
      if (popcount(m & window) >= need) members.push_back(m);
    });
    return Family(spec.n, std::move(members), spec.k);
  }
  if (spec.n > 20) fail(ErrorCode::CapExceeded, "non-uniform construction needs n <= 20");
  const Mask total = Mask{1} << spec.n;
  for (Mask m = 0; m < total; ++m) {
    if (popcount(m & window) >= need) members.push_back(m);
  }
  return Family(spec.n, std::move(members));
}

BigInt size_frankl(const FranklSpec& spec) {
  validate(spec);
  const int width = spec.t + spec.r * spec.i;
  const int rest = spec.n - width;
  BigInt total = 0;
  // j = number of elements of [t + r i] left out, at most i.
  for (int j = 0; j <= spec.i; ++j) {
    if (spec.k) {
      total += binom(width, j) * binom(rest, *spec.k - (width - j));
    } else {
      total += binom(width, j);
    }
  }
  if (!spec.k) total *= pow(BigInt(2), static_cast<unsigned>(rest));
  return total;
}

std::optional<int> max_frankl_index(int n, int k, int r, int t) {
  if (t > n || k < t) return std::nullopt;
  int i = 0;
  while (t + r * (i + 1) <= n && k - t - (r - 1) * (i + 1) >= 0) ++i;
  return i;
}

Family build_hmf(int n, int k, int r, int t) {
  require(r >= 2 && t >= 1, "need r >= 2 and t >= 1");
  const int core = t + r - 2;
  require(core < k, "B(n,k,r,t) needs k > t + r - 2");
  require(k + 1 <= n, "B(n,k,r,t) needs n >= k + 1");
  require(n <= kMaxGround, "explicit construction needs n <= 64");
  const Mask core_mask = prefix_mask(core);
  const Mask window = prefix_mask(k + 1) & ~core_mask;  // [t+r-1, k+1]
  std::vector<Mask> members;
  for_each_k_subset(n, k, [&](Mask m) {
    if ((m & core_mask) == core_mask && (m & window) != 0) members.push_back(m);
  });
  for (int j = 1; j <= core; ++j) {
    members.push_back(prefix_mask(k + 1) & ~element_bit(j));
  }
  return Family(n, std::move(members), k);
}

Family build_full_star(int n, int k, int t) {
  require(t >= 0 && t <= k && k <= n, "full star needs t <= k <= n");
  require(n <= kMaxGround, "explicit construction needs n <= 64");
  const Mask center = prefix_mask(t);
  std::vector<Mask> members;
  for_each_k_subset(n, k, [&](Mask m) {
    if ((m & center) == center) members.push_back(m);
  });
  return Family(n, std::move(members), k);
}

}  // namespace intersectlab::canonical
