#include <doctest.h>

#include "intersectlab/canonical.hpp"
#include "intersectlab/error.hpp"
#include "intersectlab/lattice.hpp"
#include "intersectlab/search.hpp"
#include "intersectlab/setfamilies.hpp"
#include "intersectlab/shifting.hpp"

using namespace intersectlab;
using search::SearchOptions;

namespace {

bool tuples_ok(const std::vector<Mask>& ms, int r, int t) {
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

// Include/exclude over all k-sets with a full tuple check at every step.
void brute(const std::vector<Mask>& all, std::size_t next, std::vector<Mask>& chosen, int r, int t,
           bool nontrivial, std::size_t& best) {
  if (chosen.size() + (all.size() - next) <= best) return;
  if (next == all.size()) {
    if (nontrivial) {
      Mask meet = ~Mask{0};
      for (Mask m : chosen) meet &= m;
      if (popcount(meet) >= t) return;
    }
    best = chosen.size();
    return;
  }
  chosen.push_back(all[next]);
  if (tuples_ok(chosen, r, t)) brute(all, next + 1, chosen, r, t, nontrivial, best);
  chosen.pop_back();
  brute(all, next + 1, chosen, r, t, nontrivial, best);
}

std::size_t brute_optimum(int n, int k, int r, int t, bool nontrivial) {
  std::vector<Mask> all;
  for_each_k_subset(n, k, [&](Mask m) { all.push_back(m); });
  std::vector<Mask> chosen;
  std::size_t best = 0;
  brute(all, 0, chosen, r, t, nontrivial, best);
  return best;
}

}  // namespace

TEST_CASE("small optima") {
  CHECK(search::max_uniform(6, 2, 2, 1, false).optimum == 5);
  auto seven = search::max_uniform(7, 3, 3, 2, false);
  CHECK(seven.optimum == 5);
  CHECK(seven.all_optima_are_t_stars == true);
  CHECK(is_rwise_t_intersecting(seven.witness, 3, 2));
  CHECK(seven.witness.size() == 5);
  for (int r = 2; r <= 4; ++r) {
    for (int k = 2; k <= 4; ++k) {
      for (int n = k; (r - 1) * n < r * k; ++n) CHECK(search::max_uniform(n, k, r, 1, false).optimum == binom(n, k));
    }
  }
}

TEST_CASE("degenerate parameters") {
  auto none = search::max_uniform(6, 2, 3, 3, false);
  CHECK(none.optimum == 0);
  CHECK(none.infeasible);
  auto one = search::max_uniform(6, 3, 3, 3, false);
  CHECK(one.optimum == 1);
  CHECK_THROWS_AS(search::max_uniform(6, 3, 1, 1, false), Error);
  CHECK_THROWS_AS(search::max_uniform(70, 3, 3, 1, false), Error);
}

TEST_CASE("cap and node budget") {
  SearchOptions tight;
  tight.cap = 10;
  try {
    search::max_uniform(7, 3, 3, 2, false, tight);
    FAIL("expected a cap error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CapExceeded);
  }
  SearchOptions budget;
  budget.node_budget = 5;
  budget.cap = 1000;
  CHECK_THROWS_AS(search::max_uniform(10, 5, 2, 1, true, budget), Error);
}

TEST_CASE("search agrees with a brute-force oracle") {
  for (int r = 2; r <= 4; ++r) {
    for (int t = 1; t <= 2; ++t) {
      for (int n = 4; n <= 7; ++n) {
        for (int k = t + 1; k < n; ++k) {
          if (binom(n, k) > 21) continue;
          for (bool nontrivial : {false, true}) {
            CAPTURE(n);
            CAPTURE(k);
            CAPTURE(r);
            CAPTURE(t);
            CAPTURE(nontrivial);
            auto report = search::max_uniform(n, k, r, t, nontrivial);
            CHECK(report.optimum == static_cast<unsigned long>(brute_optimum(n, k, r, t, nontrivial)));
          }
        }
      }
    }
  }
}

TEST_CASE("shift reduction does not change the optimum") {
  SearchOptions plain;
  plain.shift_reduction = false;
  for (int r = 2; r <= 4; ++r) {
    for (int t = 1; t <= 3; ++t) {
      for (int n = 4; n <= 9; ++n) {
        for (int k = t; k < n; ++k) {
          if (binom(n, k) > 60) continue;
          auto shifted = search::max_uniform(n, k, r, t, false);
          auto full = search::max_uniform(n, k, r, t, false, plain);
          CHECK(shifted.optimum == full.optimum);
          CHECK(is_rwise_t_intersecting(full.witness, r, t));
          CHECK(is_rwise_t_intersecting(shifted.witness, r, t));
        }
      }
    }
  }
}

TEST_CASE("nontrivial witnesses have an empty enough common intersection") {
  auto hm = search::max_uniform(8, 3, 2, 1, true);
  CHECK(hm.optimum == 16);
  CHECK(common_intersection(hm.witness).empty());
  CHECK(search::max_uniform(9, 3, 2, 1, true).optimum == 19);
  auto t2 = search::max_uniform(8, 4, 3, 2, true);
  CHECK(common_intersection(t2.witness).size() < 2);
  CHECK(is_rwise_t_intersecting(t2.witness, 3, 2));
}

TEST_CASE("full stars are the unique optima above the threshold") {
  for (int n = 7; n <= 9; ++n) {
    auto report = search::max_uniform(n, 3, 3, 2, false);
    CHECK(report.optimum == binom(n - 2, 1));
    CHECK(report.all_optima_are_t_stars == true);
    CHECK(is_t_star(report.witness, 2));
  }
  CHECK(search::max_uniform(9, 4, 2, 2, false).all_optima_are_t_stars == false);
}

TEST_CASE("non-uniform optima") {
  CHECK(search::max_nonuniform(5, 3, 2, false).optimum == 8);
  CHECK(search::max_nonuniform(4, 2, 1, false).optimum == 8);
  CHECK(search::max_nonuniform(5, 3, 1, true).optimum == 10);
  auto report = search::max_nonuniform(5, 3, 2, false);
  CHECK(is_rwise_t_intersecting(report.witness, 3, 2));
  CHECK_THROWS_AS(search::max_nonuniform(7, 3, 1, false), Error);
}

TEST_CASE("deletion recursion") {
  CHECK(search::verify_deletion_recursion(7, 3, 3, 2));
  CHECK(search::verify_deletion_recursion(8, 3, 2, 1));
  try {
    search::verify_deletion_recursion(3, 3, 3, 2);
    FAIL("expected a precondition error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Precondition);
  }
}

TEST_CASE("small-k dichotomy") {
  CHECK(search::check_small_k_dichotomy(6, 3, 3, 1));
  CHECK(search::check_small_k_dichotomy(6, 2, 3, 1));
  CHECK(search::check_small_k_dichotomy(9, 5, 3, 2));
}

TEST_CASE("shifted family enumeration yields shifted r-wise t-intersecting families") {
  std::uint64_t count = 0;
  bool star_seen = false;
  search::for_each_shifted_family(6, 3, 3, 1, [&](const std::vector<Mask>& ms) {
    Family fam(6, ms, 3);
    CHECK(shifting::is_shifted(fam));
    CHECK(is_rwise_t_intersecting(fam, 3, 1));
    star_seen = star_seen || fam == canonical::build_full_star(6, 3, 1);
    ++count;
  });
  CHECK(count > 0);
  CHECK(star_seen);
}

TEST_CASE("optima respect the lattice path bounds") {
  for (int r = 3; r <= 4; ++r) {
    for (int t = 1; t <= 3; ++t) {
      for (int n = 4; n <= 10; ++n) {
        for (int k = t; k < n; ++k) {
          if (binom(n, k) > 210) continue;
          auto report = search::max_uniform(n, k, r, t, false);
          CHECK(report.optimum <= lattice::count_hitting_paths(n, k, lattice::LatticeLine(r, t)));
          if (n >= 2 * k - t) CHECK(report.optimum <= lattice::path_bound_all(n, k, r, t));
        }
      }
    }
  }
}
