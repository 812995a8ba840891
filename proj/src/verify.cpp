#include "intersectlab/verify.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "intersectlab/canonical.hpp"
#include "intersectlab/error.hpp"
#include "intersectlab/lattice.hpp"
#include "intersectlab/search.hpp"
#include "intersectlab/shadows.hpp"
#include "intersectlab/shifting.hpp"
#include "intersectlab/thresholds.hpp"
#include "intersectlab/walks.hpp"

namespace intersectlab::verify {

namespace {

class Recorder {
 public:
  explicit Recorder(SuiteResult& result) : result_(result) {}

  void check(bool ok, const std::function<std::string()>& describe) {
    ++result_.checks;
    if (ok) return;
    ++result_.failure_count;
    if (result_.failures.size() < 10) result_.failures.push_back(describe());
  }

  void note(std::string text) { result_.notes.push_back(std::move(text)); }

 private:
  SuiteResult& result_;
};

template <class... Parts>
std::string cat(const Parts&... parts) {
  std::ostringstream out;
  (out << ... << parts);
  return out.str();
}

std::string str(const BigInt& x) { return x.get_str(); }
std::string str(const BigRational& x) { return x.get_str(); }

void star_3_2(Recorder& rec) {
  std::uint64_t nodes = 0;
  for (int k = 2; k <= 5; ++k) {
    for (int n = 2 * k + 1; n <= 10; ++n) {
      const auto report = search::max_uniform(n, k, 3, 2, false);
      nodes += report.nodes_explored;
      const BigInt expected = binom(n - 2, k - 2);
      rec.check(report.optimum == expected, [&] {
        return cat("m(", n, ",", k, ",3,2) = ", str(report.optimum), ", expected ", str(expected));
      });
      rec.check(report.all_optima_are_t_stars == std::optional<bool>(true), [&] {
        return cat("(", n, ",", k, "): optima not all full 2-stars or undecided");
      });
    }
  }
  rec.note(cat("nodes=", nodes));
}

void t1_exact(Recorder& rec) {
  search::SearchOptions options;
  options.uniqueness_cap = 0;
  for (int r = 2; r <= 4; ++r) {
    for (int k = 1; k <= 4; ++k) {
      for (int n = std::max(4, k); n <= 10; ++n) {
        const auto report = search::max_uniform(n, k, r, 1, false, options);
        const bool large = static_cast<long>(r - 1) * n >= static_cast<long>(r) * k;
        const BigInt expected = large ? binom(n - 1, k - 1) : binom(n, k);
        rec.check(report.optimum == expected, [&] {
          return cat("m(", n, ",", k, ",", r, ",1) = ", str(report.optimum), ", expected ",
                     str(expected));
        });
      }
    }
  }
}

void r4_t3_half(Recorder& rec) {
  search::SearchOptions options;
  options.cap = 3432;
  options.uniqueness_cap = 0;
  for (int k = 4; k <= 7; ++k) {
    const auto report = search::max_uniform(2 * k, k, 4, 3, false, options);
    const BigInt expected = binom(2 * k - 3, k - 3);
    rec.check(report.optimum == expected, [&] {
      return cat("m(", 2 * k, ",", k, ",4,3) = ", str(report.optimum), ", expected ", str(expected));
    });
    rec.note(cat("k=", k, " optimum=", str(report.optimum), " nodes=", report.nodes_explored));
  }
}

void paths_dp(Recorder& rec) {
  for (int n = 0; n <= 14; ++n) {
    for (int k = 0; k <= n; ++k) {
      for (int r = 3; r <= 5; ++r) {
        for (int t = 1; t <= 4; ++t) {
          const lattice::LatticeLine line(r, t);
          long brute = 0;
          for_each_k_subset(n, k, [&](Mask m) {
            if (lattice::hits_line(Subset(n, m), n, line)) ++brute;
          });
          const BigInt dp = lattice::count_hitting_paths(n, k, line);
          rec.check(dp == brute, [&] {
            return cat("count_hitting_paths(", n, ",", k, ",r=", r, ",t=", t, ") = ", str(dp),
                       ", enumeration gives ", brute);
          });
        }
      }
    }
  }
}

void uniform_walk_monotone(Recorder& rec) {
  for (int r = 2; r <= 5; ++r) {
    for (int t = 1; t <= 4; ++t) {
      const lattice::LatticeLine line(r, t);
      for (int n = 0; n <= 20; ++n) {
        for (int i = 0; i < n; ++i) {
          const BigRational a = lattice::g_uniform(n, i, line);
          const BigRational b = lattice::g_uniform(n, i + 1, line);
          rec.check(a <= b, [&] {
            return cat("g(", n, ",", i, ",", r, ",", t, ") > g(", n, ",", i + 1, ")");
          });
        }
        for (int k = 0; k <= n; ++k) {
          const BigRational a = lattice::g_uniform(n + 1, k, line);
          const BigRational b = lattice::g_uniform(n, k, line);
          rec.check(a <= b, [&] {
            return cat("g(", n + 1, ",", k, ",", r, ",", t, ") > g(", n, ",", k, ")");
          });
        }
      }
    }
  }
  for (int r = 3; r <= 5; ++r) {
    for (int t = 2; t <= 4; ++t) {
      const lattice::LatticeLine line(r, t);
      for (int k = 1; k <= 12; ++k) {
        const BigRational a = lattice::g_uniform(2 * k, k, line);
        const BigRational b = lattice::g_uniform(2 * k + 2, k + 1, line);
        rec.check(a <= b, [&] {
          return cat("g(", 2 * k, ",", k, ",", r, ",", t, ") > g(", 2 * k + 2, ",", k + 1, ")");
        });
      }
    }
  }
}

void walk_roots(Recorder& rec) {
  const BigRational width_cap = make_rational(1, pow(BigInt(10), 12));
  const RealInterval gamma = walks::gamma_root(3, BigRational(1, 2), width_cap / 10);
  rec.check(gamma.width() <= width_cap, [&] { return cat("gamma width ", to_decimal(gamma.width())); });
  // lo <= (sqrt5 - 1)/2 <= hi, squared exactly.
  const BigRational lo = 2 * gamma.lo + 1;
  const BigRational hi = 2 * gamma.hi + 1;
  rec.check(lo >= 0 && lo * lo <= 5 && hi * hi >= 5,
            [&] { return cat("gamma interval misses (sqrt5-1)/2: [", to_decimal(gamma.lo), ", ",
                             to_decimal(gamma.hi), "]"); });
  rec.note(cat("gamma(3,1/2) in [", to_decimal(gamma.lo, 15), ", ", to_decimal(gamma.hi, 15), "]"));
  for (int r = 3; r <= 16; ++r) {
    auto power = [r](const BigRational& w) {
      // A width-w root gives a power of width at most r*w since alpha < 1.
      return pow_nonneg(walks::alpha(r, w / r), static_cast<unsigned>(r));
    };
    const BigInt two_r = pow(BigInt(2), static_cast<unsigned>(r));
    const BigRational lower = make_rational(1, two_r - r);
    const BigRational upper = make_rational(1, two_r - r - 1);
    int below = 0;
    int above = 0;
    try {
      below = certified_compare(power, lower);
      above = certified_compare(power, upper);
    } catch (const Error& e) {
      rec.check(false, [&] { return cat("r=", r, ": ", e.what()); });
      continue;
    }
    rec.check(below > 0, [&] { return cat("alpha_", r, "^", r, " <= 1/(2^r - r)"); });
    rec.check(above <= 0, [&] { return cat("alpha_", r, "^", r, " > 1/(2^r - r - 1)"); });
  }
}

void total_probability(Recorder& rec) {
  for (int n = 0; n <= 16; ++n) {
    for (int r = 3; r <= 4; ++r) {
      for (int t = 1; t <= 3; ++t) {
        const lattice::LatticeLine line(r, t);
        const BigRational f = walks::f_finite(n, walks::WalkParams{r, t, BigRational(1, 2)});
        BigInt hits = 0;
        for (int k = 0; k <= n; ++k) hits += lattice::count_hitting_paths(n, k, line);
        const BigRational mixed = make_rational(hits, pow(BigInt(2), static_cast<unsigned>(n)));
        rec.check(f == mixed, [&] {
          return cat("f(", n, ",", r, ",", t, ",1/2) = ", str(f), " but the path mixture is ",
                     str(mixed));
        });
      }
    }
  }
}

void a1_vs_star(Recorder& rec) {
  // Above (t+1)(k-t+1) every 2-wise t-intersecting family other than the
  // full t-star is strictly smaller, so the scan can stop there.
  for (int t = 2; t <= 4; ++t) {
    for (int k = t; k <= 40; ++k) {
      const int from = static_cast<int>(thresholds::crossover_n(k, t));
      const int to = std::max(from, (t + 1) * (k - t + 1));
      const auto scan = thresholds::star_vs_A1_scan(k, 3, t, from, to);
      for (const auto& row : scan.rows) {
        rec.check(row.sign_a1 < 0, [&] {
          return cat("|A_1(", row.n, ",", k, ",3,", t, ")| = ", str(row.a1), " >= ", str(row.star));
        });
      }
    }
  }
  {
    // The fact's argument needs t >= 2; t = 1 has counterexamples.
    const auto scan = thresholds::star_vs_A1_scan(6, 3, 1, 8, 8);
    const bool counterexample = !scan.rows.empty() && scan.rows[0].sign_a1 > 0;
    rec.check(thresholds::at_or_above_crossover(8, 6, 1) && counterexample,
              [] { return std::string("expected |A_1(8,6,3,1)| > C(7,5) at t = 1"); });
    rec.note("t=1 is outside the t>=2 hypothesis: |A_1(8,6,3,1)|=22 > C(7,5)=21");
  }
  const BigRational eps(1, 20);
  const int t = 2;
  const int k = 80;
  const long n = thresholds::below_crossover_n(k, t, eps);
  const BigRational decimal_ratio = parse_rational("1.5616") - eps;
  const BigRational decimal_n = decimal_ratio * k;
  const BigInt decimal_floor = decimal_n.get_num() / decimal_n.get_den();
  rec.check(decimal_floor == n, [&] {
    return cat("floor((1.5616-0.05)*80) = ", str(decimal_floor), " but the exact floor is ", n);
  });
  rec.check(thresholds::lower_regime_applies(k, t, eps), [] {
    return std::string("k = 80 below (t^2+2t)/(2 eps)");
  });
  const auto scan = thresholds::star_vs_A1_scan(k, 3, t, static_cast<int>(n), static_cast<int>(n));
  const bool a1_wins = !scan.rows.empty() && scan.rows[0].sign_a1 > 0;
  rec.check(a1_wins, [&] { return cat("|A_1(", n, ",80,3,2)| <= C(", n - 2, ",78)"); });
  rec.note(cat("lower regime n=", n));
}

void nonuniform(Recorder& rec) {
  struct Case {
    int n, r, t;
    bool nontrivial;
    BigInt expected;
  };
  const Case cases[] = {
      {5, 3, 2, false, pow(BigInt(2), 3)},
      {4, 2, 1, false, pow(BigInt(2), 3)},
      {5, 3, 1, true, BigInt(1 + 3 + 1) * pow(BigInt(2), 5 - 1 - 3)},
  };
  for (const Case& c : cases) {
    const auto report = search::max_nonuniform(c.n, c.r, c.t, c.nontrivial);
    rec.check(report.optimum == c.expected, [&] {
      return cat(c.nontrivial ? "m*(" : "m(", c.n, ",", c.r, ",", c.t, ") = ", str(report.optimum),
                 ", expected ", str(c.expected));
    });
    rec.check(is_rwise_t_intersecting(report.witness, c.r, c.t) &&
                  BigInt(static_cast<unsigned long>(report.witness.size())) == report.optimum,
              [&] { return cat("witness for (", c.n, ",", c.r, ",", c.t, ") invalid"); });
  }
}

void shadow_bounds(Recorder& rec) {
  std::uint64_t families = 0;
  std::uint64_t over_budget = 0;
  search::SearchOptions options;
  options.uniqueness_cap = 0;
  options.node_budget = 2'000'000;
  for (int n = 2; n <= 9; ++n) {
    for (int k = 2; k <= n; ++k) {
      for (int r = 2; r <= 4; ++r) {
        for (int t = 1; t <= std::min(4, k); ++t) {
          for (bool nontrivial : {false, true}) {
            search::SearchReport report;
            try {
              report = search::max_uniform(n, k, r, t, nontrivial, options);
            } catch (const Error& e) {
              if (e.code() != ErrorCode::CapExceeded) throw;
              ++over_budget;
              continue;
            }
            if (report.witness.empty()) continue;
            ++families;
            const Family& fam = report.witness;
            const BigInt size = static_cast<unsigned long>(fam.size());
            for (int b = 1; b <= t && b < k; ++b) {
              const Family shadow = shadows::lower_shadow(fam, b);
              const BigRational bound = shadows::shadow_lower_bound(size, k, r, t, b);
              rec.check(BigRational(static_cast<unsigned long>(shadow.size())) >= bound, [&] {
                return cat("(", n, ",", k, ",", r, ",", t, ") b=", b, ": shadow ", shadow.size(),
                           " < bound ", to_decimal(bound, 6));
              });
            }
            if (r == 3 && t == 4) {
              const Family shadow = shadows::lower_shadow(fam, 2);
              rec.check(shadow.size() > 4 * fam.size(), [&] {
                return cat("(", n, ",", k, ",3,4): second shadow ", shadow.size(), " <= 4*", fam.size());
              });
            }
          }
        }
      }
    }
  }
  rec.note(cat("families=", families, " searches over the node budget=", over_budget));
}

Family random_family(std::mt19937_64& rng, int n, int k, int r, int t, bool intersecting) {
  std::vector<Mask> all;
  for_each_k_subset(n, k, [&](Mask m) { all.push_back(m); });
  std::shuffle(all.begin(), all.end(), rng);
  const std::size_t limit =
      std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(all.size(), 20))(rng);
  std::vector<Mask> chosen;
  IntersectionClosure closure(r);
  for (Mask m : all) {
    if (chosen.size() == limit) break;
    if (intersecting) {
      if (!closure.admits(m, t)) continue;
      closure.add(m);
    }
    chosen.push_back(m);
  }
  return Family(n, std::move(chosen), k);
}

void shifting_suite(Recorder& rec) {
  std::mt19937_64 rng(20240521);
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = std::uniform_int_distribution<int>(3, 10)(rng);
    const int k = std::uniform_int_distribution<int>(1, n - 1)(rng);
    const int r = std::uniform_int_distribution<int>(2, 3)(rng);
    const int t = std::uniform_int_distribution<int>(1, std::min(k, 3))(rng);
    const bool intersecting = trial % 2 == 0;
    const Family fam = random_family(rng, n, k, r, t, intersecting);
    const bool property = is_rwise_t_intersecting(fam, r, t);

    const int i = std::uniform_int_distribution<int>(1, n - 1)(rng);
    const int j = std::uniform_int_distribution<int>(i + 1, n)(rng);
    const Family once = shifting::shift(fam, {i, j});
    rec.check(once.size() == fam.size(), [&] { return cat("trial ", trial, ": S_ij changed size"); });
    rec.check(!property || is_rwise_t_intersecting(once, r, t),
              [&] { return cat("trial ", trial, ": S_ij broke the property"); });

    const Family fixed = shifting::shift_to_fixpoint(fam);
    rec.check(fixed.size() == fam.size(), [&] { return cat("trial ", trial, ": fixpoint changed size"); });
    rec.check(!property || is_rwise_t_intersecting(fixed, r, t),
              [&] { return cat("trial ", trial, ": fixpoint broke the property"); });
    rec.check(shifting::is_shifted(fixed) && shifting::is_fixed_by_all_shifts(fixed),
              [&] { return cat("trial ", trial, ": fixpoint is not shifted"); });

    // For shifted families, 3-wise t-intersection is decided tuple by tuple
    // by the existence of s with sum |F_i ∩ [s]| >= 2s + t.
    const auto& m = fixed.masks();
    bool every_tuple = true;
    for (std::size_t a = 0; a < m.size() && every_tuple; ++a) {
      for (std::size_t b = a; b < m.size() && every_tuple; ++b) {
        for (std::size_t c = b; c < m.size() && every_tuple; ++c) {
          const Mask tuple[] = {m[a], m[b], m[c]};
          every_tuple = shifting::witness_s(tuple, n, t).has_value();
        }
      }
    }
    const bool three_wise = is_rwise_t_intersecting(fixed, 3, t);
    rec.check(every_tuple == three_wise, [&] {
      return cat("trial ", trial, ": tuple criterion ", every_tuple, " vs 3-wise check ", three_wise);
    });
  }
}

void deletion_recursion(Recorder& rec) {
  std::uint64_t points = 0;
  for (int r = 2; r <= 4; ++r) {
    for (int t = 1; t <= 3; ++t) {
      for (int n = 2; n <= kMaxGround; ++n) {
        for (int k = 1; k <= n; ++k) {
          if (binom(n, k) > 120) continue;
          if (static_cast<long>(r - 1) * n <= static_cast<long>(r) * k - t) continue;
          ++points;
          const bool holds = search::verify_deletion_recursion(n, k, r, t);
          rec.check(holds, [&] {
            return cat("m(", n, ",", k, ",", r, ",", t, ") exceeds the deletion recursion");
          });
        }
      }
    }
  }
  rec.note(cat("grid points=", points));
}

struct SuiteDef {
  const char* name;
  const char* title;
  void (*run)(Recorder&);
};

const SuiteDef kSuites[] = {
    {"star-3-2", "m(n,k,3,2) = C(n-2,k-2) with unique full 2-star optima, 2k < n <= 10", star_3_2},
    {"t1-exact", "m(n,k,r,1) threshold formula, r in {2,3,4}, k <= 4, 4 <= n <= 10", t1_exact},
    {"r4-t3-half", "m(2k,k,4,3) = C(2k-3,k-3) up to k = 7", r4_t3_half},
    {"paths-dp", "hitting-path DP equals subset enumeration, n <= 14", paths_dp},
    {"uniform-walk-monotone", "uniform walk hitting probability monotonicity", uniform_walk_monotone},
    {"walk-roots", "gamma(3,1/2) bracket and alpha_r^r bounds for r = 3..16", walk_roots},
    {"total-probability", "f(n,r,t,1/2) equals the mixture of uniform walks, n <= 16", total_probability},
    {"a1-vs-star", "A_1 against the full t-star on both sides of the crossover", a1_vs_star},
    {"nonuniform", "non-uniform optima m(5,3,2), m(4,2,1), m*(5,3,1)", nonuniform},
    {"shadow-bounds", "shadow lower bounds on searched families, n <= 9", shadow_bounds},
    {"shifting", "randomized shifting properties on 10^4 families", shifting_suite},
    {"deletion-recursion", "m(n,k) <= m(n-1,k) + m(n-1,k-1) where C(n,k) <= 120", deletion_recursion},
};

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& suite : kSuites) out.emplace_back(suite.name);
    return out;
  }();
  return names;
}

SuiteResult run_suite(const std::string& name) {
  for (const auto& suite : kSuites) {
    if (name != suite.name) continue;
    SuiteResult result;
    result.name = suite.name;
    result.title = suite.title;
    Recorder rec(result);
    const auto start = std::chrono::steady_clock::now();
    try {
      suite.run(rec);
    } catch (const Error& e) {
      rec.check(false, [&] { return cat("error: ", e.what()); });
    }
    result.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
  }
  fail(ErrorCode::InvalidArgument, "unknown suite: " + name);
}

std::vector<SuiteResult> run_suites(const std::string& name) {
  std::vector<SuiteResult> out;
  if (name == "all") {
    for (const auto& suite : suite_names()) out.push_back(run_suite(suite));
  } else {
    out.push_back(run_suite(name));
  }
  return out;
}

}  // namespace intersectlab::verify
