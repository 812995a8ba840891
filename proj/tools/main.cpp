// intersectlab command-line front end. Talks to the library only through the
// C interface in intersectlab.h.
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "intersectlab.h"

namespace {

constexpr int kExitFailedCheck = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;
constexpr int kExitError = 4;

struct Failure {
  il_status status;
  std::string message;
};

struct UsageError {
  std::string message;
};

void check(il_status status) {
  if (status != IL_OK) throw Failure{status, il_last_error()};
}

std::string take(char* s) {
  std::string out = s ? s : "";
  il_string_free(s);
  return out;
}

struct FamilyDeleter {
  void operator()(il_family* f) const { il_family_free(f); }
};
using FamilyPtr = std::unique_ptr<il_family, FamilyDeleter>;

struct ReportDeleter {
  void operator()(il_search_report* r) const { il_search_report_free(r); }
};
using ReportPtr = std::unique_ptr<il_search_report, ReportDeleter>;

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw UsageError{"cannot read " + path};
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError{"cannot write " + path};
  out << text;
}

FamilyPtr load_family(const std::string& path) {
  il_family* raw = nullptr;
  check(il_family_parse(read_input(path).c_str(), &raw));
  return FamilyPtr(raw);
}

std::string family_text(const il_family* fam) {
  char* text = nullptr;
  check(il_family_to_text(fam, &text));
  return take(text);
}

std::string rational_text(const nlohmann::json& q) {
  return q["num"].get<std::string>() + "/" + q["den"].get<std::string>() + " ~ " +
         q["decimal"].get<std::string>();
}

std::string interval_text(const nlohmann::json& iv) {
  return "[" + iv["lo"]["decimal"].get<std::string>() + ", " +
         iv["hi"]["decimal"].get<std::string>() + "]";
}

std::uint64_t resolve_cap(std::optional<std::uint64_t> flag, std::uint64_t fallback) {
  if (flag) return *flag;
  if (const char* env = std::getenv("INTERSECTLAB_CAP")) {
    try {
      std::size_t used = 0;
      const unsigned long long value = std::stoull(env, &used);
      if (used == std::string(env).size() && value > 0) return value;
    } catch (const std::exception&) {
    }
    throw UsageError{std::string("INTERSECTLAB_CAP must be a positive integer, got '") + env + "'"};
  }
  return fallback;
}

void print_scan_csv(const nlohmann::json& scan, bool with_optimum) {
  std::cout << "n,a1,star,sign" << (with_optimum ? ",max_frankl,optimum" : "") << "\n";
  for (const auto& row : scan["rows"]) {
    std::cout << row["n"].get<int>() << "," << row["a1"].get<std::string>() << ","
              << row["star"].get<std::string>() << "," << row["sign_a1"].get<int>();
    if (with_optimum) {
      std::cout << "," << row["max_frankl"].get<std::string>() << ","
                << (row["optimum"].is_null() ? std::string() : row["optimum"].get<std::string>());
    }
    std::cout << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computation for r-wise t-intersecting families of k-subsets"};
  app.require_subcommand(1);
  std::function<int()> action;

  // family
  auto* family = app.add_subcommand("family", "Build or inspect families");
  family->require_subcommand(1);
  struct {
    std::string type, k = "*", out = "-", in = "-";
    int n = 0, r = 2, t = 1, i = 0;
  } fam;
  auto* build = family->add_subcommand("build", "Build a canonical family");
  build->add_option("--type", fam.type, "frankl | hmf | star")
      ->required()
      ->check(CLI::IsMember({"frankl", "hmf", "star"}));
  build->add_option("--n", fam.n, "ground set size")->required();
  build->add_option("--k", fam.k, "member size, or * for all sizes (frankl only)");
  build->add_option("--r", fam.r, "arity r");
  build->add_option("--t", fam.t, "intersection size t");
  build->add_option("--i", fam.i, "Frankl index i");
  build->add_option("-o,--out", fam.out, "output file, - for stdout");
  build->callback([&] {
    action = [&] {
      int k = -1;
      if (fam.k != "*") {
        try {
          k = std::stoi(fam.k);
        } catch (const std::exception&) {
          throw UsageError{"--k must be an integer or *"};
        }
      } else if (fam.type != "frankl") {
        throw UsageError{"--k is required for " + fam.type};
      }
      il_family* raw = nullptr;
      check(il_family_build(fam.type.c_str(), fam.n, k, fam.r, fam.t, fam.i, &raw));
      FamilyPtr built(raw);
      write_output(fam.out, family_text(built.get()));
      return 0;
    };
  });
  auto* inspect = family->add_subcommand("check", "Report the properties of a family file");
  inspect->add_option("--in,--family-file", fam.in, "family file, - for stdin");
  inspect->add_option("--r", fam.r, "arity r");
  inspect->add_option("--t", fam.t, "intersection size t");
  inspect->callback([&] {
    action = [&] {
      FamilyPtr f = load_family(fam.in);
      int rwise = 0, shifted = 0, star = 0;
      check(il_family_is_rwise(f.get(), fam.r, fam.t, &rwise));
      check(il_family_is_shifted(f.get(), &shifted));
      check(il_family_is_t_star(f.get(), fam.t, &star));
      nlohmann::ordered_json j{{"ground", il_family_ground(f.get())},
                               {"size", il_family_size(f.get())},
                               {"rwise_t_intersecting", rwise != 0},
                               {"shifted", shifted != 0},
                               {"t_star", star != 0}};
      std::cout << j.dump() << "\n";
      return 0;
    };
  });

  // shift
  struct {
    std::string in = "-", out = "-";
    int i = 0, j = 0;
    bool fixpoint = false;
  } sh;
  auto* shift = app.add_subcommand("shift", "Apply S_ij or shift to a fixpoint");
  shift->add_option("--in,--family-file", sh.in, "family file, - for stdin");
  shift->add_option("-o,--out", sh.out, "output file, - for stdout");
  auto* opt_i = shift->add_option("--i", sh.i, "target element i < j");
  auto* opt_j = shift->add_option("--j", sh.j, "source element j");
  auto* opt_fix = shift->add_flag("--fixpoint", sh.fixpoint, "shift until no S_ij changes the family");
  opt_i->needs(opt_j);
  opt_j->needs(opt_i);
  opt_fix->excludes(opt_i)->excludes(opt_j);
  shift->callback([&] {
    action = [&] {
      if (!sh.fixpoint && sh.i == 0) throw UsageError{"give --i and --j, or --fixpoint"};
      FamilyPtr f = load_family(sh.in);
      il_family* raw = nullptr;
      if (sh.fixpoint) {
        check(il_family_shift_fixpoint(f.get(), &raw));
      } else {
        check(il_family_shift(f.get(), sh.i, sh.j, &raw));
      }
      FamilyPtr shifted(raw);
      write_output(sh.out, family_text(shifted.get()));
      return 0;
    };
  });

  // saturate
  struct {
    std::string in = "-", out = "-";
    int r = 2, t = 1;
  } sat;
  auto* saturate = app.add_subcommand("saturate", "Extend greedily in colex order until maximal");
  saturate->add_option("--in,--family-file", sat.in, "family file, - for stdin");
  saturate->add_option("-o,--out", sat.out, "output file, - for stdout");
  saturate->add_option("--r", sat.r, "arity r")->required();
  saturate->add_option("--t", sat.t, "intersection size t")->required();
  saturate->callback([&] {
    action = [&] {
      FamilyPtr f = load_family(sat.in);
      il_family* raw = nullptr;
      check(il_family_saturate(f.get(), sat.r, sat.t, &raw));
      FamilyPtr full(raw);
      write_output(sat.out, family_text(full.get()));
      return 0;
    };
  });

  // paths
  struct {
    int n = 0, k = 0, r = 3, t = 1, i_max = 0;
    bool json = false;
    std::string plot;
  } pa;
  auto* paths = app.add_subcommand("paths", "Lattice paths hitting y = (r-1)x + t");
  paths->require_subcommand(1);
  auto* count = paths->add_subcommand("count", "Number of k-sets whose path hits the line");
  auto* g = paths->add_subcommand("g", "Hitting probability of a uniform path to (n-i, i)");
  auto* ell = paths->add_subcommand("ell", "First-touch counts l(t, i) for i = 0..i_max");
  for (auto* sub : {count, g, ell}) {
    sub->add_option("--r", pa.r, "arity r")->required();
    sub->add_option("--t", pa.t, "intersection size t")->required();
    sub->add_flag("--json", pa.json, "print JSON");
  }
  count->add_option("--n", pa.n)->required();
  count->add_option("--k", pa.k)->required();
  g->add_option("--n", pa.n)->required();
  g->add_option("--i", pa.k, "number of up-steps")->required();
  g->add_option("--emit-plot", pa.plot, "write m,g(m,i) for m = i..n as CSV to this file");
  ell->add_option("--i-max", pa.i_max)->required();
  count->callback([&] {
    action = [&] {
      char* out = nullptr;
      check(il_paths_count_json(pa.n, pa.k, pa.r, pa.t, &out));
      const auto j = nlohmann::json::parse(take(out));
      std::cout << (pa.json ? j.dump() : j["count"].get<std::string>()) << "\n";
      return 0;
    };
  });
  g->callback([&] {
    action = [&] {
      char* out = nullptr;
      check(il_paths_g_json(pa.n, pa.k, pa.r, pa.t, &out));
      const auto j = nlohmann::json::parse(take(out));
      std::cout << (pa.json ? j.dump() : rational_text(j["g"])) << "\n";
      if (!pa.plot.empty()) {
        std::ostringstream csv;
        csv << "n,g\n";
        for (int m = pa.k; m <= pa.n; ++m) {
          char* point = nullptr;
          check(il_paths_g_json(m, pa.k, pa.r, pa.t, &point));
          const auto p = nlohmann::json::parse(take(point));
          csv << m << "," << p["g"]["decimal"].get<std::string>() << "\n";
        }
        write_output(pa.plot, csv.str());
      }
      return 0;
    };
  });
  ell->callback([&] {
    action = [&] {
      char* out = nullptr;
      check(il_paths_ell_json(pa.r, pa.t, pa.i_max, &out));
      const auto j = nlohmann::json::parse(take(out));
      if (pa.json) {
        std::cout << j.dump() << "\n";
      } else {
        for (const auto& v : j["ell"]) std::cout << v.get<std::string>() << "\n";
      }
      return 0;
    };
  });

  // walk
  struct {
    int n = 0, r = 3, t = 1;
    std::string p = "1/2", tol = "1e-12";
    bool json = false;
  } wa;
  auto* walk = app.add_subcommand("walk", "Biased random walks against y = (r-1)x + t");
  walk->require_subcommand(1);
  auto* wf = walk->add_subcommand("f", "Exact probability that a length-n p-walk hits the line");
  auto* wgamma = walk->add_subcommand("gamma", "Root of x = p + (1-p) x^r in (0,1)");
  auto* walpha = walk->add_subcommand("alpha", "gamma at p = 1/2");
  for (auto* sub : {wf, wgamma, walpha}) {
    sub->add_option("--r", wa.r, "arity r")->required();
    sub->add_flag("--json", wa.json, "print JSON");
  }
  wf->add_option("--n", wa.n)->required();
  wf->add_option("--t", wa.t)->required();
  wf->add_option("--p", wa.p, "up-step probability");
  wgamma->add_option("--p", wa.p, "up-step probability");
  wgamma->add_option("--tol", wa.tol, "interval width");
  walpha->add_option("--tol", wa.tol, "interval width");
  wf->callback([&] {
    action = [&] {
      char* out = nullptr;
      check(il_walk_f_json(wa.n, wa.r, wa.t, wa.p.c_str(), &out));
      const auto j = nlohmann::json::parse(take(out));
      std::cout << (wa.json ? j.dump() : rational_text(j["f"])) << "\n";
      return 0;
    };
  });
  auto print_root = [&](const nlohmann::json& j, const char* key) {
    if (wa.json) {
      std::cout << j.dump() << "\n";
    } else {
      std::cout << j[key]["lo"]["decimal"].get<std::string>() << " " << interval_text(j[key])
                << "\n";
    }
  };
  wgamma->callback([&] {
    action = [&] {
      char* out = nullptr;
      check(il_walk_gamma_json(wa.r, wa.p.c_str(), wa.tol.c_str(), &out));
      print_root(nlohmann::json::parse(take(out)), "gamma");
      return 0;
    };
  });
  walpha->callback([&] {
    action = [&] {
      char* out = nullptr;
      check(il_walk_alpha_json(wa.r, wa.tol.c_str(), &out));
      print_root(nlohmann::json::parse(take(out)), "alpha");
      return 0;
    };
  });

  // shadow
  struct {
    std::string in = "-", out = "-";
    int b = 1, r = 2, t = 1;
    bool report = false;
  } sd;
  auto* shadow = app.add_subcommand("shadow", "b-th lower shadow of a uniform family");
  shadow->add_option("--in,--family-file", sd.in, "family file, - for stdin");
  shadow->add_option("-o,--out", sd.out, "output file, - for stdout");
  shadow->add_option("--b", sd.b, "shadow order")->required();
  shadow->add_flag("--report", sd.report, "print sizes and the r-wise t-intersecting bound as JSON");
  shadow->add_option("--r", sd.r, "arity r for --report");
  shadow->add_option("--t", sd.t, "intersection size t for --report");
  shadow->callback([&] {
    action = [&] {
      FamilyPtr f = load_family(sd.in);
      if (sd.report) {
        char* out = nullptr;
        check(il_family_shadow_report_json(f.get(), sd.b, sd.r, sd.t, &out));
        write_output(sd.out, take(out) + "\n");
      } else {
        il_family* raw = nullptr;
        check(il_family_shadow(f.get(), sd.b, &raw));
        FamilyPtr result(raw);
        write_output(sd.out, family_text(result.get()));
      }
      return 0;
    };
  });

  // search
  struct {
    int n = 0, k = 0, r = 2, t = 1;
    bool nontrivial = false, no_shift = false, nonuniform = false, json = false, timing = false;
    std::optional<std::uint64_t> cap;
    std::uint64_t node_budget = 0;
  } se;
  auto* search = app.add_subcommand("search", "Exhaustive extremal search");
  search->require_subcommand(1);
  auto* smax = search->add_subcommand("max", "Largest r-wise t-intersecting family");
  smax->add_option("--n", se.n)->required();
  auto* opt_k = smax->add_option("--k", se.k, "member size");
  smax->add_option("--r", se.r)->required();
  smax->add_option("--t", se.t)->required();
  smax->add_flag("--nontrivial", se.nontrivial, "only families with empty common intersection");
  smax->add_flag("--no-shift-reduction", se.no_shift, "search all families, not only shifted ones");
  auto* opt_nonuniform =
      smax->add_flag("--nonuniform", se.nonuniform, "families of arbitrary subsets (n <= 6)");
  smax->add_option("--cap", se.cap, "largest C(n,k) searched (default 300 or $INTERSECTLAB_CAP)");
  smax->add_option("--node-budget", se.node_budget, "stop after this many nodes (0 = no limit)");
  smax->add_flag("--json", se.json, "print the report as JSON");
  smax->add_flag("--timing", se.timing, "include wall_time in the report");
  opt_nonuniform->excludes(opt_k);
  smax->callback([&] {
    action = [&] {
      il_search_report* raw = nullptr;
      if (se.nonuniform) {
        check(il_search_max_nonuniform(se.n, se.r, se.t, se.nontrivial ? 1 : 0, &raw));
      } else {
        if (opt_k->count() == 0) throw UsageError{"--k is required unless --nonuniform is given"};
        il_search_options options;
        il_search_options_default(&options);
        options.cap = resolve_cap(se.cap, options.cap);
        options.shift_reduction = se.no_shift ? 0 : 1;
        options.node_budget = se.node_budget;
        check(il_search_max(se.n, se.k, se.r, se.t, se.nontrivial ? 1 : 0, &options, &raw));
      }
      ReportPtr report(raw);
      char* out = nullptr;
      check(il_search_report_json(report.get(), se.timing ? 1 : 0, &out));
      const auto j = nlohmann::ordered_json::parse(take(out));
      if (se.json) {
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "optimum " << j["optimum"].get<std::string>() << "\n";
        std::cout << "all_optima_are_t_stars "
                  << (j["all_optima_are_t_stars"].is_null() ? "unknown"
                                                            : j["all_optima_are_t_stars"].dump())
                  << "\n";
        std::cout << "nodes_explored " << j["nodes_explored"].get<std::uint64_t>() << "\n";
        if (se.timing) std::cout << "wall_time " << j["wall_time"].get<double>() << "\n";
        std::cout << j["witness"].get<std::string>();
      }
      return 0;
    };
  });

  // threshold
  struct {
    int k = 0, r = 3, t = 1, from = 0, to = 0, span = 3;
    std::string tol = "1e-12";
    bool csv = false;
    std::optional<std::uint64_t> cap;
  } th;
  auto* threshold = app.add_subcommand("threshold", "Threshold formulas and A_1 against the star");
  threshold->require_subcommand(1);
  auto* n0 = threshold->add_subcommand("n0", "Bounds on the n from which the full t-star wins");
  n0->add_option("--k", th.k)->required();
  n0->add_option("--r", th.r)->required();
  n0->add_option("--t", th.t)->required();
  n0->add_option("--tol", th.tol, "interval width");
  auto* scan_a1 = threshold->add_subcommand("scan-a1", "Exact |A_1| and max |A_i| against C(n-t,k-t)");
  scan_a1->add_option("--k", th.k)->required();
  scan_a1->add_option("--r", th.r)->required();
  scan_a1->add_option("--t", th.t)->required();
  scan_a1->add_option("--from", th.from, "first n")->required();
  scan_a1->add_option("--to", th.to, "last n")->required();
  scan_a1->add_flag("--csv", th.csv, "print n,a1,star,sign rows");
  auto* scan_c = threshold->add_subcommand(
      "scan-conj82", "r = 3 scan around n = ((sqrt(4t+9)-1)/2) k with exact optima where feasible");
  scan_c->add_option("--k", th.k)->required();
  scan_c->add_option("--t", th.t)->required();
  scan_c->add_option("--span", th.span, "scan this many n on each side of the crossover");
  scan_c->add_option("--cap", th.cap, "largest C(n,k) searched");
  scan_c->add_flag("--csv", th.csv, "print n,a1,star,sign,max_frankl,optimum rows");
  n0->callback([&] {
    action = [&] {
      char* out = nullptr;
      check(il_threshold_n0_json(th.k, th.r, th.t, th.tol.c_str(), &out));
      std::cout << take(out) << "\n";
      return 0;
    };
  });
  scan_a1->callback([&] {
    action = [&] {
      char* out = nullptr;
      check(il_threshold_scan_a1_json(th.k, th.r, th.t, th.from, th.to, &out));
      const auto j = nlohmann::ordered_json::parse(take(out));
      if (th.csv) {
        print_scan_csv(j, false);
      } else {
        std::cout << j.dump() << "\n";
      }
      return 0;
    };
  });
  scan_c->callback([&] {
    action = [&] {
      il_search_options defaults;
      il_search_options_default(&defaults);
      char* out = nullptr;
      check(il_threshold_crossover_json(th.k, th.t, th.span, resolve_cap(th.cap, defaults.cap), &out));
      const auto j = nlohmann::ordered_json::parse(take(out));
      if (th.csv) {
        print_scan_csv(j, true);
      } else {
        std::cout << j.dump() << "\n";
      }
      return 0;
    };
  });

  // verify
  struct {
    std::string suite = "all";
    bool list = false, json = false;
  } ve;
  auto* verify = app.add_subcommand("verify", "Run acceptance suites");
  verify->add_option("--suite", ve.suite, "suite name or all");
  verify->add_flag("--list", ve.list, "list suite names");
  verify->add_flag("--json", ve.json, "print results as JSON");
  verify->callback([&] {
    action = [&] {
      if (ve.list) {
        char* names = nullptr;
        check(il_verify_suite_names(&names));
        std::cout << take(names);
        return 0;
      }
      int passed = 0;
      char* out = nullptr;
      check(il_verify_run_json(ve.suite.c_str(), &passed, &out));
      const auto j = nlohmann::ordered_json::parse(take(out));
      if (ve.json) {
        std::cout << j.dump() << "\n";
      } else {
        for (const auto& s : j["suites"]) {
          std::cout << (s["passed"].get<bool>() ? "PASS " : "FAIL ") << s["suite"].get<std::string>()
                    << " (" << s["checks"].get<std::uint64_t>() << " checks): "
                    << s["title"].get<std::string>() << "\n";
          for (const auto& f : s["failure_samples"]) std::cout << "  failed: " << f.get<std::string>() << "\n";
          for (const auto& n : s["notes"]) std::cout << "  " << n.get<std::string>() << "\n";
        }
      }
      return passed ? 0 : kExitFailedCheck;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    return action ? action() : kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kExitUsage;
  } catch (const Failure& f) {
    switch (f.status) {
      case IL_CAP_EXCEEDED: {
        nlohmann::ordered_json j{{"error", il_status_name(f.status)}, {"message", f.message}};
        std::cerr << j.dump() << "\n";
        return kExitCap;
      }
      case IL_INVALID_ARGUMENT:
      case IL_PARSE_ERROR:
      case IL_PRECONDITION:
        std::cerr << "error: " << f.message << "\n";
        return kExitUsage;
      default:
        std::cerr << "error (" << il_status_name(f.status) << "): " << f.message << "\n";
        return kExitError;
    }
  }
}
