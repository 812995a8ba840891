#include <doctest.h>

#include <random>

#include "intersectlab/canonical.hpp"
#include "intersectlab/error.hpp"
#include "intersectlab/search.hpp"
#include "intersectlab/setfamilies.hpp"
#include "intersectlab/shifting.hpp"

using namespace intersectlab;
using shifting::ShiftStep;

TEST_CASE("single shifts") {
  CHECK(shifting::shift(Family::of(3, {{2, 3}}), {1, 2}) == Family::of(3, {{1, 3}}));
  Family both = Family::of(3, {{1, 3}, {2, 3}});
  CHECK(shifting::shift(both, {1, 2}) == both);
  Family pair = Family::of(4, {{2, 4}, {1, 4}});
  CHECK(shifting::shift(pair, {1, 2}) == Family::of(4, {{1, 4}, {2, 4}}));
  CHECK_THROWS_AS(shifting::shift(pair, {2, 2}), Error);
  CHECK_THROWS_AS(shifting::shift(pair, {3, 2}), Error);
}

TEST_CASE("shifting to a fixpoint") {
  CHECK(shifting::shift_to_fixpoint(Family::of(5, {{4, 5}})) == Family::of(5, {{1, 2}}));
  Family star = canonical::build_full_star(6, 3, 2);
  CHECK(shifting::shift_to_fixpoint(star) == star);
  CHECK(shifting::shift_to_fixpoint(Family(5, 2)).empty());
}

TEST_CASE("shifted order") {
  CHECK(shifting::precedes(Subset::of(3, {1, 3}), Subset::of(3, {2, 3})));
  CHECK_FALSE(shifting::precedes(Subset::of(4, {1, 4}), Subset::of(4, {2, 3})));
  CHECK(shifting::precedes(Subset::of(4, {2, 4}), Subset::of(4, {2, 4})));
  CHECK(shifting::is_shifted(Family::of(3, {{1, 2}, {1, 3}})));
  CHECK_FALSE(shifting::is_shifted(Family::of(3, {{2, 3}})));
}

TEST_CASE("shifted means fixed by every S_ij") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 5 + static_cast<int>(rng() % 3);
    const int k = 2 + static_cast<int>(rng() % 3);
    std::vector<Mask> ms;
    for_each_k_subset(n, k, [&](Mask m) {
      if (rng() % 2) ms.push_back(m);
    });
    Family fam(n, ms, k);
    CHECK(shifting::is_shifted(fam) == shifting::is_fixed_by_all_shifts(fam));
    Family fix = shifting::shift_to_fixpoint(fam);
    CHECK(shifting::is_shifted(fix));
    CHECK(shifting::is_fixed_by_all_shifts(fix));
    CHECK(fix.size() == fam.size());
  }
}

TEST_CASE("witness index for r-tuples") {
  const Mask f = mask_of({1, 2, 5});
  std::vector<Mask> triple{f, f, f};
  CHECK(shifting::witness_s(triple, 5, 2) == 2);
  std::vector<Mask> diag{prefix_mask(4), prefix_mask(4), prefix_mask(4)};
  CHECK(shifting::witness_s(diag, 6, 4) == 4);
  std::vector<Mask> cyclic{mask_of({1, 2}), mask_of({1, 3}), mask_of({2, 3})};
  CHECK_FALSE(shifting::witness_s(cyclic, 3, 1).has_value());
}

TEST_CASE("minimum hit index") {
  CHECK(shifting::min_hit_index(mask_of({1, 2, 5}), 5, 3, 2) == 0);
  CHECK(shifting::min_hit_index(mask_of({1, 3, 4}), 6, 3, 1) == 0);
  CHECK(shifting::min_hit_index(mask_of({2, 3, 4}), 6, 3, 1) == 1);
  CHECK_FALSE(shifting::min_hit_index(mask_of({2, 3}), 4, 3, 1).has_value());
}

TEST_CASE("partition by first hit") {
  Family star = canonical::build_full_star(7, 3, 2);
  auto parts = shifting::partition_by_hit(star, 3, 2);
  REQUIRE(!parts.empty());
  CHECK(parts[0] == star);
  for (std::size_t i = 1; i < parts.size(); ++i) CHECK(parts[i].empty());

  Family a1 = canonical::build_frankl({6, 4, 3, 1, 1});
  parts = shifting::partition_by_hit(a1, 3, 1);
  REQUIRE(parts.size() >= 2);
  for (Mask m : parts[0]) CHECK((m & 1) != 0);
  for (Mask m : parts[1]) CHECK((m & 1) == 0);
  CHECK(parts[0].size() + parts[1].size() == a1.size());

  for (const auto& part : shifting::partition_by_hit(Family(6, 3), 3, 1)) CHECK(part.empty());
}

TEST_CASE("saturation") {
  Family star = canonical::build_full_star(9, 3, 1);
  CHECK(shifting::saturate(star, 2, 1) == star);
  Family all = shifting::saturate(Family::of(4, {{1, 2, 3}}, 3), 3, 1);
  CHECK(all.size() == 4);
  CHECK(is_rwise_t_intersecting(all, 3, 1));
  Family greedy = shifting::saturate(Family(7, 3), 3, 2);
  CHECK(is_rwise_t_intersecting(greedy, 3, 2));
  CHECK(shifting::is_saturated(greedy, 3, 2));
  CHECK_FALSE(greedy.empty());
  CHECK_THROWS_AS(shifting::saturate(Family::of(4, {{1, 2}, {3, 4}}, 2), 2, 1), Error);
}

TEST_CASE("saturated shifted non-star families have coinciding links") {
  for (auto [n, k] : {std::pair{7, 3}, std::pair{7, 4}}) {
    std::uint64_t checked = 0;
    search::for_each_shifted_family(n, k, 3, 2, [&](const std::vector<Mask>& ms) {
      Family fam(n, ms, k);
      if (is_t_star(fam, 2) || !shifting::is_saturated(fam, 3, 2)) return;
      CHECK(shifting::links_coincide(fam, 3, 2));
      ++checked;
    });
    if (k == 4) CHECK(checked > 0);
  }
  CHECK(shifting::links_coincide(canonical::build_frankl({7, 3, 3, 1, 1}), 3, 1));
  CHECK_THROWS_AS(shifting::links_coincide(canonical::build_full_star(7, 4, 2), 3, 2), Error);
}
