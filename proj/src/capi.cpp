#include "intersectlab.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include <json.hpp>

#include "intersectlab/canonical.hpp"
#include "intersectlab/error.hpp"
#include "intersectlab/lattice.hpp"
#include "intersectlab/search.hpp"
#include "intersectlab/shadows.hpp"
#include "intersectlab/shifting.hpp"
#include "intersectlab/thresholds.hpp"
#include "intersectlab/verify.hpp"
#include "intersectlab/walks.hpp"

using nlohmann::ordered_json;
using namespace intersectlab;

struct il_family {
  Family fam;
};

struct il_search_report {
  search::SearchReport report;
};

namespace {

thread_local std::string last_error;

il_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return IL_INVALID_ARGUMENT;
    case ErrorCode::CapExceeded: return IL_CAP_EXCEEDED;
    case ErrorCode::Parse: return IL_PARSE_ERROR;
    case ErrorCode::Precondition: return IL_PRECONDITION;
    case ErrorCode::Undecidable: return IL_UNDECIDABLE;
  }
  return IL_INTERNAL;
}

template <class Body>
il_status guarded(Body&& body) {
  try {
    body();
    last_error.clear();
    return IL_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return IL_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return IL_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  if (p == nullptr) fail(ErrorCode::InvalidArgument, std::string(what) + " must not be null");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(const ordered_json& j, char** out) {
  need(out, "output pointer");
  *out = dup_string(j.dump());
}

void hand_out(Family fam, il_family** out) {
  need(out, "output pointer");
  *out = new il_family{std::move(fam)};
}

ordered_json rational_json(const BigRational& q) {
  return {{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()},
          {"decimal", to_decimal(q)}};
}

ordered_json interval_json(const RealInterval& iv) {
  return {{"lo", rational_json(iv.lo)}, {"hi", rational_json(iv.hi)}};
}

BigRational rational_arg(const char* text, const char* what) {
  need(text, what);
  return parse_rational(text);
}

ordered_json scan_json(const thresholds::ThresholdScan& scan) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : scan.rows) {
    ordered_json j{{"n", row.n},
                   {"a1", row.a1.get_str()},
                   {"star", row.star.get_str()},
                   {"sign_a1", row.sign_a1},
                   {"max_frankl", row.max_frankl.get_str()},
                   {"max_frankl_index", row.max_frankl_index},
                   {"sign_max", row.sign_max}};
    j["optimum"] = row.optimum ? ordered_json(row.optimum->get_str()) : ordered_json(nullptr);
    rows.push_back(std::move(j));
  }
  ordered_json j{{"k", scan.k},           {"r", scan.r},          {"t", scan.t},
                 {"n_from", scan.n_from}, {"n_to", scan.n_to},    {"certified", scan.certified}};
  j["upper_regime_holds"] =
      scan.upper_regime_holds ? ordered_json(*scan.upper_regime_holds) : ordered_json(nullptr);
  j["rows"] = std::move(rows);
  return j;
}

search::SearchOptions to_options(const il_search_options* options) {
  search::SearchOptions out;
  if (options != nullptr) {
    out.cap = options->cap;
    out.shift_reduction = options->shift_reduction != 0;
    out.uniqueness_cap = options->uniqueness_cap;
    out.uniqueness_node_budget = options->uniqueness_node_budget;
    out.node_budget = options->node_budget;
  }
  return out;
}

}  // namespace

extern "C" {

const char* il_last_error(void) { return last_error.c_str(); }

const char* il_status_name(il_status status) {
  switch (status) {
    case IL_OK: return "ok";
    case IL_INVALID_ARGUMENT: return "invalid_argument";
    case IL_CAP_EXCEEDED: return "cap_exceeded";
    case IL_PARSE_ERROR: return "parse_error";
    case IL_PRECONDITION: return "precondition";
    case IL_UNDECIDABLE: return "undecidable";
    case IL_INTERNAL: return "internal";
  }
  return "unknown";
}

void il_string_free(char* s) { std::free(s); }

il_status il_family_parse(const char* text, il_family** out) {
  return guarded([&] {
    need(text, "text");
    hand_out(parse_family(text), out);
  });
}

void il_family_free(il_family* fam) { delete fam; }

il_status il_family_to_text(const il_family* fam, char** out) {
  return guarded([&] {
    need(fam, "family");
    need(out, "output pointer");
    *out = dup_string(to_text(fam->fam));
  });
}

size_t il_family_size(const il_family* fam) { return fam ? fam->fam.size() : 0; }

int il_family_ground(const il_family* fam) { return fam ? fam->fam.ground() : 0; }

il_status il_family_build(const char* kind, int n, int k, int r, int t, int i, il_family** out) {
  return guarded([&] {
    need(kind, "kind");
    const std::string which = kind;
    if (which == "frankl") {
      canonical::FranklSpec spec{n, k < 0 ? std::nullopt : std::optional<int>(k), r, t, i};
      hand_out(canonical::build_frankl(spec), out);
    } else if (which == "hmf") {
      hand_out(canonical::build_hmf(n, k, r, t), out);
    } else if (which == "star") {
      hand_out(canonical::build_full_star(n, k, t), out);
    } else {
      fail(ErrorCode::InvalidArgument, "unknown family type: " + which);
    }
  });
}

il_status il_family_is_rwise(const il_family* fam, int r, int t, int* out) {
  return guarded([&] {
    need(fam, "family");
    need(out, "output pointer");
    *out = is_rwise_t_intersecting(fam->fam, r, t) ? 1 : 0;
  });
}

il_status il_family_is_shifted(const il_family* fam, int* out) {
  return guarded([&] {
    need(fam, "family");
    need(out, "output pointer");
    *out = shifting::is_shifted(fam->fam) ? 1 : 0;
  });
}

il_status il_family_is_t_star(const il_family* fam, int t, int* out) {
  return guarded([&] {
    need(fam, "family");
    need(out, "output pointer");
    *out = is_t_star(fam->fam, t) ? 1 : 0;
  });
}

il_status il_family_shift(const il_family* fam, int i, int j, il_family** out) {
  return guarded([&] {
    need(fam, "family");
    hand_out(shifting::shift(fam->fam, {i, j}), out);
  });
}

il_status il_family_shift_fixpoint(const il_family* fam, il_family** out) {
  return guarded([&] {
    need(fam, "family");
    hand_out(shifting::shift_to_fixpoint(fam->fam), out);
  });
}

il_status il_family_saturate(const il_family* fam, int r, int t, il_family** out) {
  return guarded([&] {
    need(fam, "family");
    hand_out(shifting::saturate(fam->fam, r, t), out);
  });
}

il_status il_family_shadow(const il_family* fam, int b, il_family** out) {
  return guarded([&] {
    need(fam, "family");
    hand_out(shadows::lower_shadow(fam->fam, b), out);
  });
}

il_status il_family_shadow_report_json(const il_family* fam, int b, int r, int t, char** out) {
  return guarded([&] {
    need(fam, "family");
    const auto report = shadows::shadow_report(fam->fam, b, r, t);
    ordered_json j{{"b", b},
                   {"input_size", report.input_size.get_str()},
                   {"output_size", report.output_size.get_str()}};
    j["bound"] = report.bound ? rational_json(*report.bound) : ordered_json(nullptr);
    j["bound_satisfied"] = report.bound_satisfied;
    emit(j, out);
  });
}

il_status il_paths_count_json(int n, int k, int r, int t, char** out) {
  return guarded([&] {
    const lattice::LatticeLine line(r, t);
    require(n >= 0 && k >= 0 && k <= n, "need 0 <= k <= n");
    emit({{"n", n}, {"k", k}, {"r", r}, {"t", t},
          {"count", lattice::count_hitting_paths(n, k, line).get_str()},
          {"total", binom(n, k).get_str()}},
         out);
  });
}

il_status il_paths_g_json(int n, int i, int r, int t, char** out) {
  return guarded([&] {
    const lattice::LatticeLine line(r, t);
    require(n >= 0 && i >= 0 && i <= n, "need 0 <= i <= n");
    emit({{"n", n}, {"i", i}, {"r", r}, {"t", t},
          {"g", rational_json(lattice::g_uniform(n, i, line))}},
         out);
  });
}

il_status il_paths_ell_json(int r, int t, int i_max, char** out) {
  return guarded([&] {
    const lattice::LatticeLine line(r, t);
    require(i_max >= 0, "i_max must be non-negative");
    ordered_json values = ordered_json::array();
    for (const BigInt& v : lattice::first_hit_counts(line, i_max)) values.push_back(v.get_str());
    emit({{"r", r}, {"t", t}, {"ell", values}}, out);
  });
}

il_status il_walk_f_json(int n, int r, int t, const char* p, char** out) {
  return guarded([&] {
    const BigRational prob = rational_arg(p, "p");
    emit({{"n", n}, {"r", r}, {"t", t}, {"p", rational_json(prob)},
          {"f", rational_json(walks::f_finite(n, walks::WalkParams{r, t, prob}))}},
         out);
  });
}

il_status il_walk_gamma_json(int r, const char* p, const char* tol, char** out) {
  return guarded([&] {
    const BigRational prob = rational_arg(p, "p");
    const BigRational width = rational_arg(tol, "tol");
    emit({{"r", r}, {"p", rational_json(prob)},
          {"gamma", interval_json(walks::gamma_root(r, prob, width))}},
         out);
  });
}

il_status il_walk_alpha_json(int r, const char* tol, char** out) {
  return guarded([&] {
    const BigRational width = rational_arg(tol, "tol");
    emit({{"r", r}, {"alpha", interval_json(walks::alpha(r, width))}}, out);
  });
}

il_status il_threshold_n0_json(int k, int r, int t, const char* tol, char** out) {
  return guarded([&] {
    const BigRational width = rational_arg(tol, "tol");
    ordered_json j{{"k", k}, {"r", r}, {"t", t},
                   {"upper", interval_json(thresholds::n0_upper_bound(k, r, t, width))},
                   {"lower", interval_json(thresholds::n0_lower_bound(k, r, t, width))}};
    j["lower_applies"] = t >= (1 << r) - r;
    emit(j, out);
  });
}

il_status il_threshold_scan_a1_json(int k, int r, int t, int n_from, int n_to, char** out) {
  return guarded([&] { emit(scan_json(thresholds::star_vs_A1_scan(k, r, t, n_from, n_to)), out); });
}

il_status il_threshold_crossover_json(int k, int t, int span, uint64_t cap, char** out) {
  return guarded([&] {
    search::SearchOptions options;
    options.cap = cap;
    ordered_json j = scan_json(thresholds::crossover_scan(k, t, span, options));
    j["ratio"] = interval_json(thresholds::crossover_ratio(t, make_rational(1, pow(BigInt(10), 12))));
    j["crossover_n"] = thresholds::crossover_n(k, t);
    emit(j, out);
  });
}

void il_search_options_default(il_search_options* options) {
  if (options == nullptr) return;
  const search::SearchOptions defaults;
  options->cap = defaults.cap;
  options->shift_reduction = defaults.shift_reduction ? 1 : 0;
  options->uniqueness_cap = defaults.uniqueness_cap;
  options->uniqueness_node_budget = defaults.uniqueness_node_budget;
  options->node_budget = defaults.node_budget;
}

il_status il_search_max(int n, int k, int r, int t, int nontrivial,
                        const il_search_options* options, il_search_report** out) {
  return guarded([&] {
    need(out, "output pointer");
    auto report = search::max_uniform(n, k, r, t, nontrivial != 0, to_options(options));
    *out = new il_search_report{std::move(report)};
  });
}

il_status il_search_max_nonuniform(int n, int r, int t, int nontrivial, il_search_report** out) {
  return guarded([&] {
    need(out, "output pointer");
    auto report = search::max_nonuniform(n, r, t, nontrivial != 0);
    *out = new il_search_report{std::move(report)};
  });
}

void il_search_report_free(il_search_report* report) { delete report; }

il_status il_search_report_optimum(const il_search_report* report, char** out) {
  return guarded([&] {
    need(report, "report");
    need(out, "output pointer");
    *out = dup_string(report->report.optimum.get_str());
  });
}

uint64_t il_search_report_nodes(const il_search_report* report) {
  return report ? report->report.nodes_explored : 0;
}

int il_search_report_all_optima_are_t_stars(const il_search_report* report) {
  if (report == nullptr || !report->report.all_optima_are_t_stars) return -1;
  return *report->report.all_optima_are_t_stars ? 1 : 0;
}

il_status il_search_report_witness(const il_search_report* report, il_family** out) {
  return guarded([&] {
    need(report, "report");
    hand_out(report->report.witness, out);
  });
}

il_status il_search_report_json(const il_search_report* report, int with_timing, char** out) {
  return guarded([&] {
    need(report, "report");
    const auto& rep = report->report;
    ordered_json j{{"optimum", rep.optimum.get_str()}, {"witness", to_text(rep.witness)}};
    j["all_optima_are_t_stars"] = rep.all_optima_are_t_stars
                                      ? ordered_json(*rep.all_optima_are_t_stars)
                                      : ordered_json(nullptr);
    j["nodes_explored"] = rep.nodes_explored;
    j["empty"] = rep.empty;
    j["infeasible"] = rep.infeasible;
    if (with_timing != 0) j["wall_time"] = rep.wall_seconds;
    emit(j, out);
  });
}

il_status il_verify_suite_names(char** out) {
  return guarded([&] {
    need(out, "output pointer");
    std::string names;
    for (const auto& name : verify::suite_names()) names += name + "\n";
    *out = dup_string(names);
  });
}

il_status il_verify_run_json(const char* suite, int* passed, char** out) {
  return guarded([&] {
    need(suite, "suite");
    need(passed, "passed");
    const auto results = verify::run_suites(suite);
    ordered_json arr = ordered_json::array();
    bool all = true;
    for (const auto& r : results) {
      all = all && r.passed();
      arr.push_back({{"suite", r.name},
                     {"title", r.title},
                     {"passed", r.passed()},
                     {"checks", r.checks},
                     {"failures", r.failure_count},
                     {"failure_samples", r.failures},
                     {"notes", r.notes}});
    }
    *passed = all ? 1 : 0;
    emit({{"passed", all}, {"suites", arr}}, out);
  });
}

}  // extern "C"
