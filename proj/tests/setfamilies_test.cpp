#include <doctest.h>

#include <random>

#include "intersectlab/error.hpp"
#include "intersectlab/exactmath.hpp"
#include "intersectlab/setfamilies.hpp"

using namespace intersectlab;

namespace {

// Checks every r-tuple of members with repetition by direct enumeration.
bool rwise_by_tuples(const Family& fam, int r, int t) {
  const auto& ms = fam.masks();
  std::vector<std::size_t> idx(r, 0);
  if (ms.empty()) return true;
  for (;;) {
    Mask meet = ~Mask{0};
    for (auto i : idx) meet &= ms[i];
    if (popcount(meet) < t) return false;
    int pos = r - 1;
    while (pos >= 0 && ++idx[pos] == ms.size()) idx[pos--] = 0;
    if (pos < 0) return true;
  }
}

Family random_family(std::mt19937_64& rng, int n, int k, double density) {
  std::vector<Mask> members;
  std::bernoulli_distribution keep(density);
  for_each_k_subset(n, k, [&](Mask m) {
    if (keep(rng)) members.push_back(m);
  });
  return Family(n, members, k);
}

}  // namespace

TEST_CASE("r-wise t-intersecting predicate examples") {
  CHECK(is_rwise_t_intersecting(Family::of(5, {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}}), 3, 2));
  CHECK_FALSE(is_rwise_t_intersecting(Family::of(4, {{1, 2}, {3, 4}}), 2, 1));
  CHECK(is_rwise_t_intersecting(Family::of(4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}), 2, 1));
  CHECK(is_rwise_t_intersecting(Family::of(4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}), 3, 1));
  CHECK_FALSE(is_rwise_t_intersecting(Family::of(4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}), 4, 1));
  CHECK(is_rwise_t_intersecting(Family(6), 3, 2));
}

TEST_CASE("predicate agrees with tuple enumeration on random families") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 5);
    const int k = 2 + static_cast<int>(rng() % (n - 2));
    const int r = 2 + static_cast<int>(rng() % 3);
    const int t = 1 + static_cast<int>(rng() % 2);
    Family fam = random_family(rng, n, k, 0.15);
    CHECK(is_rwise_t_intersecting(fam, r, t) == rwise_by_tuples(fam, r, t));
  }
}

TEST_CASE("common intersection and t-stars") {
  CHECK(common_intersection(Family::of(4, {{1, 2, 3}, {1, 2, 4}})).bits() == mask_of({1, 2}));
  CHECK(common_intersection(Family::of(2, {{1}, {2}})).empty());
  CHECK(common_intersection(Family::of(5, {{2, 5}})).bits() == mask_of({2, 5}));
  CHECK(is_t_star(Family::of(5, {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}}), 2));
  CHECK_FALSE(is_t_star(Family::of(4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}}), 2));
  CHECK(is_t_star(Family::of(3, {{1, 2, 3}}), 3));
  CHECK(is_t_star(Family(5), 2));
}

TEST_CASE("restriction to a trace") {
  Family f = Family::of(4, {{1, 2, 3}, {2, 3, 4}});
  CHECK(restrict(f, Subset::of(4, {2}), Subset::of(4, {1, 2})).masks() == std::vector<Mask>{mask_of({3, 4})});
  CHECK(restrict(f, Subset(4, 0), Subset(4, 0)) == f);
  CHECK(restrict(Family::of(3, {{1, 2, 3}}), Subset(3, 0), Subset::of(3, {1})).empty());
  CHECK_THROWS_AS(restrict(f, Subset::of(4, {3}), Subset::of(4, {1})), Error);
}

TEST_CASE("text round trip") {
  Family f = Family::of(6, {{1, 2, 3}, {1, 2, 6}, {2, 4, 5}}, 3);
  CHECK(parse_family(to_text(f)) == f);
  Family mixed = Family::of(5, {{1}, {1, 2}, {3, 4, 5}});
  CHECK(parse_family(to_text(mixed)) == mixed);
  Family empty(7, 3);
  CHECK(parse_family(to_text(empty)) == empty);
  CHECK_THROWS_AS(parse_family("1,2,3\n"), Error);
  CHECK_THROWS_AS(parse_family("n=3 k=2\n1,4\n"), Error);
  CHECK_THROWS_AS(parse_family("n=3 k=2\n1,2,3\n"), Error);
}

TEST_CASE("k-subset enumeration visits each subset once in colex order") {
  for (int n = 0; n <= 12; ++n) {
    for (int k = 0; k <= n; ++k) {
      std::uint64_t count = 0;
      Mask prev = 0;
      bool ordered = true;
      for_each_k_subset(n, k, [&](Mask m) {
        if (count > 0 && m <= prev) ordered = false;
        if (popcount(m) != k || (n < 64 && (m >> n) != 0)) ordered = false;
        prev = m;
        ++count;
      });
      CHECK(ordered);
      CHECK(count == binom(n, k).get_ui());
    }
  }
}

TEST_CASE("intersection closure admits exactly the r-wise compatible sets") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 7, k = 4;
    const int r = 2 + static_cast<int>(rng() % 3);
    const int t = 1 + static_cast<int>(rng() % 2);
    IntersectionClosure closure(r);
    std::vector<Mask> members;
    for_each_k_subset(n, k, [&](Mask m) {
      if (rng() % 3 != 0) return;
      std::vector<Mask> trial_members = members;
      trial_members.push_back(m);
      const bool ok = rwise_by_tuples(Family(n, trial_members, k), r, t);
      CHECK(closure.admits(m, t) == ok);
      if (ok) {
        closure.add(m);
        members.push_back(m);
      }
    });
  }
}
