#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace intersectlab {

/// Membership word of a subset of [n]; element e lives in bit e-1.
using Mask = std::uint64_t;

/// Searchable core works on one machine word per subset.
inline constexpr int kMaxGround = 64;

inline int popcount(Mask m) { return __builtin_popcountll(m); }

/// Mask of [s] = {1, ..., s}.
inline Mask prefix_mask(int s) {
  return s >= 64 ? ~Mask{0} : ((Mask{1} << s) - 1);
}

inline Mask element_bit(int e) { return Mask{1} << (e - 1); }

class Subset {
 public:
  Subset() = default;
  Subset(int ground_n, Mask bits);

  static Subset of(int ground_n, std::initializer_list<int> elements);
  static Subset from_elements(int ground_n, std::span<const int> elements);

  int ground() const { return ground_n_; }
  Mask bits() const { return bits_; }
  int size() const { return popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  bool contains(int e) const { return e >= 1 && e <= 64 && (bits_ & element_bit(e)); }
  /// Elements in increasing order.
  std::vector<int> elements() const;

  friend bool operator==(const Subset&, const Subset&) = default;

 private:
  int ground_n_ = 0;
  Mask bits_ = 0;
};

std::vector<int> elements_of(Mask m);
Mask mask_of(std::initializer_list<int> elements);

/// A duplicate-free family of subsets of [n]. Members are stored in colex
/// order, which for masks is plain integer order, so two families are equal
/// exactly when their member vectors are.
class Family {
 public:
  Family() = default;
  explicit Family(int ground_n, std::optional<int> uniform_k = std::nullopt);
  Family(int ground_n, std::vector<Mask> members,
         std::optional<int> uniform_k = std::nullopt);

  /// Builds a family from element lists, e.g. {{1,2,3},{1,2,4}}.
  static Family of(int ground_n, std::initializer_list<std::initializer_list<int>> members,
                   std::optional<int> uniform_k = std::nullopt);

  int ground() const { return ground_n_; }
  std::optional<int> uniform_k() const { return uniform_k_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const std::vector<Mask>& masks() const { return members_; }
  Subset member(std::size_t i) const { return Subset(ground_n_, members_[i]); }
  bool contains(Mask m) const;

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  /// uniform_k if declared, otherwise the common member size if there is one.
  std::optional<int> member_size() const;

  friend bool operator==(const Family&, const Family&) = default;

 private:
  int ground_n_ = 0;
  std::optional<int> uniform_k_;
  std::vector<Mask> members_;
};

/// Distinct intersections of up to r-1 members (repetition allowed) of a
/// growing family. A candidate set c can join an r-wise t-intersecting family
/// exactly when |c| >= t and |c ∩ M| >= t for every tracked intersection M.
class IntersectionClosure {
 public:
  explicit IntersectionClosure(int r);

  void add(Mask member);
  bool admits(Mask candidate, int t) const;
  /// Intersections of exactly `arity` members (with repetition), 1 <= arity < r.
  const std::vector<Mask>& level(int arity) const { return levels_[arity - 1]; }

 private:
  int r_;
  std::vector<std::vector<Mask>> levels_;
  std::vector<std::unordered_set<Mask>> seen_;
};

bool is_rwise_t_intersecting(const Family& fam, int r, int t);

/// Intersection of all members. Throws on an empty family.
Subset common_intersection(const Family& fam);

/// |∩F| >= t; the empty family counts as a t-star.
bool is_t_star(const Family& fam, int t);

/// F(P,Q) = {F \ Q : F ∩ Q = P}, kept over the same ground set.
Family restrict(const Family& fam, const Subset& p, const Subset& q);
/// F(i) = {F \ {i} : i ∈ F}.
Family restrict_with(const Family& fam, int i);
/// F(ī) = {F : i ∉ F}.
Family restrict_without(const Family& fam, int i);

/// Header `n=<n> k=<k|*>` followed by one member per line as
/// comma-separated elements. The empty set is written as an empty line.
std::string to_text(const Family& fam);
Family parse_family(std::string_view text);

/// Visits every k-subset of [n] in colex order.
template <class Visit>
void for_each_k_subset(int n, int k, Visit&& visit) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    visit(Mask{0});
    return;
  }
  Mask m = prefix_mask(k);
  const Mask limit = n >= 64 ? 0 : (Mask{1} << n);
  for (;;) {
    visit(m);
    // Gosper's hack: next mask with the same popcount.
    Mask low = m & (~m + 1);
    Mask ripple = m + low;
    if (ripple == 0) return;
    Mask next = (((ripple ^ m) >> 2) / low) | ripple;
    if (limit != 0 && next >= limit) return;
    m = next;
  }
}

}  // namespace intersectlab
