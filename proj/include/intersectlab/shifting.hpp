#pragma once

#include <optional>
#include <span>
#include <vector>

#include "intersectlab/setfamilies.hpp"

namespace intersectlab::shifting {

/// The shift S_ij, replacing j by i. Requires 1 <= i < j.
struct ShiftStep {
  int i = 1;
  int j = 2;
};

Family shift(const Family& fam, ShiftStep step);

/// Applies S_ij for (i, j) in lexicographic order, restarting the sweep after
/// every step that changes the family, until no step does.
Family shift_to_fixpoint(const Family& fam);

/// Coordinatewise order on equal-size sets: a_l <= b_l for every position l.
bool precedes(const Subset& a, const Subset& b);
bool precedes(Mask a, Mask b);

/// Down-set test under the shifting order, via the cover relation.
bool is_shifted(const Family& fam);
/// Same property checked as S_ij(F) == F for every i < j.
bool is_fixed_by_all_shifts(const Family& fam);

/// Smallest s with sum |F_l ∩ [s]| >= (r-1)s + t, where r is the number of
/// sets given. Absent when no s up to the ground size qualifies.
std::optional<int> witness_s(std::span<const Subset> sets, int t);
std::optional<int> witness_s(std::span<const Mask> sets, int ground_n, int t);

/// i(F): least i >= 0 with |F ∩ [t+ri]| = t + (r-1)i and t + ri <= n.
std::optional<int> min_hit_index(const Subset& f, int r, int t);
std::optional<int> min_hit_index(Mask f, int ground_n, int r, int t);

/// F_0, ..., F_floor((k-t)/(r-1)) by hit index. Throws Error(Precondition)
/// when some member has no hit index.
std::vector<Family> partition_by_hit(const Family& fam, int r, int t);

/// Greedy completion in colex order to a maximal r-wise t-intersecting
/// k-uniform family.
Family saturate(const Family& fam, int r, int t);

/// True when no further k-set can be added without breaking the property.
bool is_saturated(const Family& fam, int r, int t);

/// For a shifted saturated family that is not a t-star, checks that the
/// families G_i = F([t+1] \ {i}, [t+1]), i = 1..t, all coincide.
bool links_coincide(const Family& fam, int r, int t);

}  // namespace intersectlab::shifting
