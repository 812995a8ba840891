#include "intersectlab/shifting.hpp"

#include <algorithm>
#include <string>

#include "intersectlab/error.hpp"

namespace intersectlab::shifting {

namespace {

void check_step(const Family& fam, ShiftStep step) {
  require(step.i >= 1 && step.i < step.j && step.j <= fam.ground(),
          "shift needs 1 <= i < j <= n, got (" + std::to_string(step.i) + "," +
              std::to_string(step.j) + ")");
}

Mask shifted_member(const Family& fam, Mask m, Mask bi, Mask bj) {
  if ((m & bj) && !(m & bi)) {
    Mask moved = (m & ~bj) | bi;
    if (!fam.contains(moved)) return moved;
  }
  return m;
}

}  // namespace

Family shift(const Family& fam, ShiftStep step) {
  check_step(fam, step);
  const Mask bi = element_bit(step.i), bj = element_bit(step.j);
  std::vector<Mask> out;
  out.reserve(fam.size());
  for (Mask m : fam) out.push_back(shifted_member(fam, m, bi, bj));
  return Family(fam.ground(), std::move(out), fam.uniform_k());
}

Family shift_to_fixpoint(const Family& fam) {
  Family current = fam;
  const int n = fam.ground();
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 1; i <= n && !changed; ++i) {
      for (int j = i + 1; j <= n && !changed; ++j) {
        Family next = shift(current, {i, j});
        if (next != current) {
          current = std::move(next);
          changed = true;
        }
      }
    }
  }
  return current;
}

bool precedes(Mask a, Mask b) {
  require(popcount(a) == popcount(b), "precedes needs sets of equal size");
  // a_l <= b_l for all l  <=>  |A ∩ [s]| >= |B ∩ [s]| for all s.
  while (a || b) {
    int ea = __builtin_ctzll(a), eb = __builtin_ctzll(b);
    if (ea > eb) return false;
    a &= a - 1;
    b &= b - 1;
  }
  return true;
}

bool precedes(const Subset& a, const Subset& b) { return precedes(a.bits(), b.bits()); }

bool is_shifted(const Family& fam) {
  for (Mask m : fam) {
    for (Mask rest = m; rest; rest &= rest - 1) {
      Mask bit = rest & (~rest + 1);
      if (bit == 1) continue;
      Mask lower = bit >> 1;
      if (m & lower) continue;
      if (!fam.contains((m & ~bit) | lower)) return false;
    }
  }
  return true;
}

bool is_fixed_by_all_shifts(const Family& fam) {
  const int n = fam.ground();
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const Mask bi = element_bit(i), bj = element_bit(j);
      for (Mask m : fam) {
        if (shifted_member(fam, m, bi, bj) != m) return false;
      }
    }
  }
  return true;
}

std::optional<int> witness_s(std::span<const Mask> sets, int ground_n, int t) {
  require(!sets.empty(), "witness_s needs at least one set");
  const long r = static_cast<long>(sets.size());
  for (int s = 1; s <= ground_n; ++s) {
    const Mask window = prefix_mask(s);
    long total = 0;
    for (Mask m : sets) total += popcount(m & window);
    const long target = (r - 1) * s + t;
    if (total >= target) {
      // One step earlier the sum was short, and a step adds at most r.
      if (total != target) fail(ErrorCode::Precondition, "witness_s: minimal s without equality");
      return s;
    }
  }
  return std::nullopt;
}

std::optional<int> witness_s(std::span<const Subset> sets, int t) {
  std::vector<Mask> masks;
  int n = 0;
  for (const auto& s : sets) {
    masks.push_back(s.bits());
    n = std::max(n, s.ground());
  }
  return witness_s(masks, n, t);
}

std::optional<int> min_hit_index(Mask f, int ground_n, int r, int t) {
  for (int i = 0; t + r * i <= ground_n; ++i) {
    if (popcount(f & prefix_mask(t + r * i)) == t + (r - 1) * i) return i;
  }
  return std::nullopt;
}

std::optional<int> min_hit_index(const Subset& f, int r, int t) {
  return min_hit_index(f.bits(), f.ground(), r, t);
}

std::vector<Family> partition_by_hit(const Family& fam, int r, int t) {
  require(r >= 2 && t >= 1, "need r >= 2 and t >= 1");
  auto k = fam.member_size();
  if (!k) {
    require(fam.empty(), "partition_by_hit needs a uniform family");
    return {};
  }
  const int parts = *k >= t ? (*k - t) / (r - 1) + 1 : 0;
  std::vector<std::vector<Mask>> buckets(static_cast<std::size_t>(parts));
  for (Mask m : fam) {
    auto i = min_hit_index(m, fam.ground(), r, t);
    if (!i || *i >= parts) {
      fail(ErrorCode::Precondition,
           "member without a hit index: family is not shifted r-wise t-intersecting");
    }
    buckets[static_cast<std::size_t>(*i)].push_back(m);
  }
  std::vector<Family> out;
  for (auto& b : buckets) out.emplace_back(fam.ground(), std::move(b), k);
  return out;
}

Family saturate(const Family& fam, int r, int t) {
  auto k = fam.member_size();
  require(k.has_value(), "saturate needs a uniform family with known k");
  if (!is_rwise_t_intersecting(fam, r, t)) {
    fail(ErrorCode::Precondition, "saturate needs an r-wise t-intersecting family");
  }
  IntersectionClosure closure(r);
  std::vector<Mask> members(fam.begin(), fam.end());
  for (Mask m : members) closure.add(m);
  for_each_k_subset(fam.ground(), *k, [&](Mask c) {
    if (fam.contains(c)) return;
    if (closure.admits(c, t)) {
      closure.add(c);
      members.push_back(c);
    }
  });
  return Family(fam.ground(), std::move(members), k);
}

bool is_saturated(const Family& fam, int r, int t) {
  auto k = fam.member_size();
  require(k.has_value(), "is_saturated needs a uniform family with known k");
  IntersectionClosure closure(r);
  for (Mask m : fam) closure.add(m);
  bool saturated = true;
  for_each_k_subset(fam.ground(), *k, [&](Mask c) {
    if (saturated && !fam.contains(c) && closure.admits(c, t)) saturated = false;
  });
  return saturated;
}

bool links_coincide(const Family& fam, int r, int t) {
  if (is_t_star(fam, t)) fail(ErrorCode::Precondition, "family is a t-star");
  if (!is_rwise_t_intersecting(fam, r, t)) {
    fail(ErrorCode::Precondition, "family is not r-wise t-intersecting");
  }
  if (!is_shifted(fam)) fail(ErrorCode::Precondition, "family is not shifted");
  if (!is_saturated(fam, r, t)) fail(ErrorCode::Precondition, "family is not saturated");
  require(t + 1 <= fam.ground(), "need t + 1 <= n");
  const Mask window = prefix_mask(t + 1);
  const Subset q(fam.ground(), window);
  const Family first = restrict(fam, Subset(fam.ground(), window & ~element_bit(1)), q);
  for (int i = 2; i <= t; ++i) {
    if (restrict(fam, Subset(fam.ground(), window & ~element_bit(i)), q) != first) return false;
  }
  return true;
}

}  // namespace intersectlab::shifting
