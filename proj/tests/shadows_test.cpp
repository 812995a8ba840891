#include <doctest.h>

#include <random>
#include <set>

#include "intersectlab/canonical.hpp"
#include "intersectlab/error.hpp"
#include "intersectlab/search.hpp"
#include "intersectlab/shadows.hpp"

using namespace intersectlab;

namespace {

std::set<Mask> shadow_by_removal(const Family& fam, int b) {
  std::set<Mask> out;
  for (Mask m : fam) {
    const int k = popcount(m);
    for_each_k_subset(fam.ground(), k - b, [&](Mask s) {
      if ((s & ~m) == 0) out.insert(s);
    });
  }
  return out;
}

}  // namespace

TEST_CASE("lower shadows") {
  Family single = Family::of(3, {{1, 2, 3}}, 3);
  CHECK(shadows::lower_shadow(single, 1) == Family::of(3, {{1, 2}, {1, 3}, {2, 3}}, 2));
  CHECK(shadows::lower_shadow(single, 2) == Family::of(3, {{1}, {2}, {3}}, 1));
  Family star = canonical::build_full_star(6, 3, 2);
  CHECK(shadows::lower_shadow(star, 1).size() == 9);
  CHECK_THROWS_AS(shadows::lower_shadow(single, 3), Error);
}

TEST_CASE("lower shadows agree with subset enumeration") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 5 + static_cast<int>(rng() % 5);
    const int k = 2 + static_cast<int>(rng() % 3);
    std::vector<Mask> ms;
    for_each_k_subset(n, k, [&](Mask m) {
      if (rng() % 4 == 0) ms.push_back(m);
    });
    Family fam(n, ms, k);
    for (int b = 1; b < k; ++b) {
      auto expected = shadow_by_removal(fam, b);
      Family got = shadows::lower_shadow(fam, b);
      CHECK(std::vector<Mask>(expected.begin(), expected.end()) == got.masks());
    }
  }
}

TEST_CASE("upper shadows") {
  CHECK(shadows::upper_shadow(Family::of(3, {{1}}, 1)) == Family::of(3, {{1, 2}, {1, 3}}, 2));
  CHECK(shadows::upper_shadow(Family(4, 2)).empty());
}

TEST_CASE("shadow ratio minima") {
  CHECK(shadows::shadow_ratio_min(40, 3, 4, 2) > 4);
  CHECK(shadows::shadow_ratio_min(4, 3, 4, 2) == 6);
  CHECK(shadows::shadow_ratio_min(60, 3, 7, 4) > 16);
  CHECK(shadows::shadow_ratio_min(5, 3, 5, 5) == 1);
  for (int t = 1; t <= 6; ++t) {
    for (int k = t; k <= 20; ++k) {
      BigRational brute;
      bool first = true;
      for (int i = 0; 2 * i <= k - t; ++i) {
        BigRational ratio = BigRational(binom(3 * i + t, i + 1)) / BigRational(binom(3 * i + t, i));
        if (first || ratio < brute) brute = ratio;
        first = false;
      }
      CHECK(shadows::shadow_ratio_min(k, 3, t, 1) == brute);
    }
  }
  CHECK_THROWS_AS(shadows::shadow_ratio_min(10, 3, 2, 3), Error);
}

TEST_CASE("Kruskal-Katona lower bound") {
  Family complete(5, {}, 3);
  std::vector<Mask> all;
  for_each_k_subset(5, 3, [&](Mask m) { all.push_back(m); });
  complete = Family(5, all, 3);
  CHECK(shadows::kruskal_katona_check(complete, 4));
  CHECK(shadows::kruskal_katona_check(Family::of(6, {{2, 4, 6}}, 3), 3));
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 5 + static_cast<int>(rng() % 8);
    const int k = 2 + static_cast<int>(rng() % 3);
    std::vector<Mask> ms;
    for_each_k_subset(n, k, [&](Mask m) {
      if (rng() % 3 == 0) ms.push_back(m);
    });
    if (ms.empty()) continue;
    Family fam(n, ms, k);
    for (int m = k; m <= n; ++m) CHECK(shadows::kruskal_katona_check(fam, m));
  }
}

TEST_CASE("shadow report on extremal families") {
  for (auto [n, k, r, t] : {std::array{8, 4, 3, 2}, std::array{9, 5, 3, 3}, std::array{7, 3, 2, 1}}) {
    auto found = search::max_uniform(n, k, r, t, false);
    for (int b = 1; b <= t && b < k; ++b) {
      auto report = shadows::shadow_report(found.witness, b, r, t);
      REQUIRE(report.bound.has_value());
      CHECK(report.bound_satisfied);
      CHECK(report.input_size == found.optimum);
    }
  }
  auto loose = shadows::shadow_report(Family::of(4, {{1, 2}, {3, 4}}, 2), 1, 2, 1);
  CHECK_FALSE(loose.bound.has_value());
}
