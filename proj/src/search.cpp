#include "intersectlab/search.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <unordered_set>

#include "intersectlab/error.hpp"
#include "intersectlab/lattice.hpp"
#include "intersectlab/walks.hpp"

namespace intersectlab::search {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t n) : words_((n + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i >> 6] |= Mask{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(Mask{1} << (i & 63)); }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

  std::size_t count() const {
    std::size_t c = 0;
    for (Mask w : words_) c += static_cast<std::size_t>(popcount(w));
    return c;
  }

  /// First set bit at or after i, or kNone.
  std::size_t next(std::size_t i) const {
    std::size_t w = i >> 6;
    if (w >= words_.size()) return kNone;
    Mask cur = words_[w] & (~Mask{0} << (i & 63));
    while (cur == 0) {
      if (++w == words_.size()) return kNone;
      cur = words_[w];
    }
    return (w << 6) + static_cast<std::size_t>(__builtin_ctzll(cur));
  }
  std::size_t first() const { return next(0); }
  bool any() const { return first() != kNone; }

  Bits& operator&=(const Bits& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
    return *this;
  }
  Bits& and_not(const Bits& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~o.words_[w];
    return *this;
  }

 private:
  std::vector<Mask> words_;
};

// Distinct intersections of at most j members for j = 1..r-1, with an undo
// log. A candidate joins only if it meets every tracked set of level j in at
// least need[j-1] elements.
class LayeredClosure {
 public:
  LayeredClosure(int r, std::vector<int> need)
      : need_(std::move(need)),
        levels_(static_cast<std::size_t>(r - 1)),
        seen_(static_cast<std::size_t>(r - 1)) {
    uniform_need_ = std::all_of(need_.begin(), need_.end(),
                                [&](int x) { return x == need_.front(); });
  }

  bool admits(Mask c) const {
    if (uniform_need_) {
      // Levels are nested, so the top one carries every constraint.
      const int need = need_.front();
      for (Mask m : levels_.back()) {
        if (popcount(c & m) < need) return false;
      }
      return true;
    }
    for (std::size_t j = 0; j < levels_.size(); ++j) {
      for (Mask m : levels_[j]) {
        if (popcount(c & m) < need_[j]) return false;
      }
    }
    return true;
  }

  void push(Mask member) {
    std::vector<std::size_t> sizes;
    for (const auto& level : levels_) sizes.push_back(level.size());
    log_.push_back(std::move(sizes));
    std::vector<Mask> fresh{member};
    for (std::size_t j = 0; j < levels_.size(); ++j) {
      if (j > 0) {
        const auto& below = levels_[j - 1];
        for (Mask m : below) fresh.push_back(member & m);
      }
      std::vector<Mask> added;
      for (Mask m : fresh) {
        if (seen_[j].insert(m).second) {
          levels_[j].push_back(m);
          added.push_back(m);
        }
      }
      fresh = std::move(added);
    }
  }

  std::size_t depth() const { return levels_.size(); }
  bool uniform_need() const { return uniform_need_; }
  int need(std::size_t j) const { return need_[j]; }
  const std::vector<Mask>& level(std::size_t j) const { return levels_[j]; }
  /// Entries of level j added by the most recent push.
  std::size_t fresh_from(std::size_t j) const { return log_.empty() ? 0 : log_.back()[j]; }

  void pop() {
    const auto sizes = std::move(log_.back());
    log_.pop_back();
    for (std::size_t j = 0; j < levels_.size(); ++j) {
      auto& level = levels_[j];
      for (std::size_t i = sizes[j]; i < level.size(); ++i) seen_[j].erase(level[i]);
      level.resize(sizes[j]);
    }
  }

 private:
  std::vector<int> need_;
  bool uniform_need_ = true;
  std::vector<std::vector<Mask>> levels_;
  std::vector<std::unordered_set<Mask>> seen_;
  std::vector<std::vector<std::size_t>> log_;
};

std::vector<int> plain_need(int r, int t) { return std::vector<int>(static_cast<std::size_t>(r - 1), t); }

// A family that is r-wise t-intersecting but not a t-star is s-wise
// (t+r-s)-intersecting for 2 <= s <= r.
std::vector<int> nonstar_need(int r, int t) {
  std::vector<int> need;
  for (int j = 1; j < r; ++j) need.push_back(t + r - (j + 1));
  return need;
}

std::size_t to_size(const BigInt& x) {
  if (!x.fits_ulong_p()) return kNone;
  return static_cast<std::size_t>(x.get_ui());
}

// Certified upper bound on m(n,k,r,t) from the walk and path arguments.
std::size_t root_ceiling(int n, int k, int r, int t) {
  std::size_t ceiling = to_size(binom(n, k));
  if (r >= 3 && n >= 2 * k) {
    RealInterval bound = walks::prob_bound_alpha(n, k, r, t, BigRational(1, 1000000));
    BigInt floor_hi = bound.hi.get_num() / bound.hi.get_den();
    ceiling = std::min(ceiling, to_size(floor_hi));
  }
  if (r >= 3 && n >= 2 * k - t) {
    ceiling = std::min(ceiling, to_size(lattice::path_bound_all(n, k, r, t)));
  }
  return ceiling;
}

// ---------------------------------------------------------------------------
// Shifted families: down-sets of line-hitting k-sets under the shifting order.

struct ShiftedSpace {
  std::vector<Mask> candidates;
  std::vector<Bits> strictly_above;
};

ShiftedSpace build_shifted_space(int n, int k, int r, int t) {
  const lattice::LatticeLine line(r, t);
  std::vector<Mask> cand;
  for_each_k_subset(n, k, [&](Mask m) {
    if (lattice::hits_line(Subset(n, m), n, line)) cand.push_back(m);
  });
  auto weight = [](Mask m) {
    int s = 0;
    for (Mask x = m; x; x &= x - 1) s += __builtin_ctzll(x) + 1;
    return s;
  };
  std::stable_sort(cand.begin(), cand.end(),
                   [&](Mask a, Mask b) { return weight(a) < weight(b); });
  std::vector<std::vector<int>> elems;
  for (Mask m : cand) elems.push_back(elements_of(m));
  ShiftedSpace space{cand, std::vector<Bits>(cand.size(), Bits(cand.size()))};
  for (std::size_t i = 0; i < cand.size(); ++i) {
    for (std::size_t j = i + 1; j < cand.size(); ++j) {
      bool below = true;
      for (std::size_t e = 0; e < elems[i].size() && below; ++e) below = elems[i][e] <= elems[j][e];
      if (below) space.strictly_above[i].set(j);
    }
  }
  return space;
}

class ShiftedSearch {
 public:
  ShiftedSearch(const ShiftedSpace& space, int r, int t)
      : space_(space), closure_(r, plain_need(r, t)) {}

  std::size_t best = 0;
  std::vector<Mask> best_family;
  std::uint64_t nodes = 0;
  std::size_t ceiling = kNone;
  std::uint64_t budget = 0;
  bool aborted = false;
  const std::function<void(const std::vector<Mask>&)>* visit = nullptr;

  void run() {
    Bits alive(space_.candidates.size());
    for (std::size_t i = 0; i < space_.candidates.size(); ++i) alive.set(i);
    dfs(alive);
  }

 private:
  void dfs(Bits alive) {
    ++nodes;
    if (budget != 0 && nodes > budget) {
      aborted = done_ = true;
      return;
    }
    if (!visit && chosen_.size() > best) {
      best = chosen_.size();
      best_family = chosen_;
      if (best >= ceiling) done_ = true;
    }
    if (done_) return;
    const std::size_t idx = alive.first();
    if (idx == kNone) {
      if (visit) (*visit)(chosen_);
      return;
    }
    if (!visit && chosen_.size() + alive.count() <= best) return;
    const Mask c = space_.candidates[idx];
    alive.reset(idx);
    if (closure_.admits(c)) {
      closure_.push(c);
      chosen_.push_back(c);
      Bits next = alive;
      // Closure only grows, so a rejected set stays rejected and its up-set
      // can never complete a down-set.
      for (std::size_t j = alive.first(); j != kNone; j = alive.next(j + 1)) {
        if (next.test(j) && !closure_.admits(space_.candidates[j])) {
          next.reset(j);
          next.and_not(space_.strictly_above[j]);
        }
      }
      dfs(std::move(next));
      chosen_.pop_back();
      closure_.pop();
      if (done_) return;
    }
    alive.and_not(space_.strictly_above[idx]);
    dfs(std::move(alive));
  }

  const ShiftedSpace& space_;
  LayeredClosure closure_;
  std::vector<Mask> chosen_;
  bool done_ = false;
};

// ---------------------------------------------------------------------------
// Unreduced search: a clique-style branch and bound over all k-sets.

struct Goal {
  enum class Kind { Any, NonStar, Nontrivial };
  Kind kind = Kind::Any;
  int t = 1;
  /// Minimum size of the union of members; 0 disables the requirement.
  int min_union = 0;

  bool met(Mask meet, Mask join) const {
    return intersection_ok(meet) && popcount(join) >= min_union;
  }
  // Both requirements only get easier as members are added, so a branch can
  // be cut once even every remaining candidate would not satisfy them.
  bool reachable(Mask smallest_meet, Mask largest_join) const { return met(smallest_meet, largest_join); }

 private:
  bool intersection_ok(Mask meet) const {
    switch (kind) {
      case Kind::Any: return true;
      case Kind::NonStar: return popcount(meet) < t;
      case Kind::Nontrivial: return meet == 0;
    }
    return true;
  }
};

class CliqueSearch {
 public:
  /// Families containing every member of `fixed` whose members pairwise
  /// share at least `pair_min` elements.
  CliqueSearch(int n, int k, int r, const std::vector<int>& need, Goal goal,
               std::vector<Mask> fixed, int pair_min)
      : goal_(goal), closure_(r, need), fixed_(std::move(fixed)) {
    const int pair_need = std::max(need.front(), pair_min);
    for (Mask f : fixed_) {
      valid_ = valid_ && closure_.admits(f);
      closure_.push(f);
    }
    if (!valid_) return;
    for_each_k_subset(n, k, [&](Mask m) {
      if (std::find(fixed_.begin(), fixed_.end(), m) != fixed_.end()) return;
      for (Mask f : fixed_) {
        if (popcount(m & f) < pair_need) return;
      }
      if (closure_.admits(m)) verts_.push_back(m);
    });
    adj_.assign(verts_.size(), Bits(verts_.size()));
    for (std::size_t i = 0; i < verts_.size(); ++i) {
      for (std::size_t j = i + 1; j < verts_.size(); ++j) {
        if (popcount(verts_[i] & verts_[j]) >= pair_need) {
          adj_[i].set(j);
          adj_[j].set(i);
        }
      }
    }
  }

  std::size_t best = 0;
  std::vector<Mask> best_family;
  std::uint64_t nodes = 0;
  std::uint64_t budget = 0;
  std::size_t ceiling = kNone;
  bool aborted = false;
  bool done = false;
  bool stop_at_best = false;

  /// Searches for families larger than `floor`; stops at the first one when
  /// stop_at_best is set.
  void run(std::size_t floor) {
    best = floor;
    if (!valid_) return;
    chosen_ = fixed_;
    Mask meet = ~Mask{0};
    Mask join = 0;
    for (Mask f : fixed_) {
      meet &= f;
      join |= f;
    }
    Bits all(verts_.size());
    for (std::size_t i = 0; i < verts_.size(); ++i) all.set(i);
    std::vector<Bits> adj = adj_;
    for (std::size_t j = 0; j + 1 < closure_.depth(); ++j) {
      for (Mask m : closure_.level(j)) cut_pairs(all, adj, m, closure_.need(j + 1));
    }
    expand(all, meet, join, adj);
  }

 private:
  // With r >= 3, two candidates can clash only through chosen members: drop
  // the edge u-v when u, v and the members behind m share fewer than `need`.
  void cut_pairs(const Bits& cand, std::vector<Bits>& adj, Mask m, int need) const {
    for (std::size_t u = cand.first(); u != kNone; u = cand.next(u + 1)) {
      const Mask um = verts_[u] & m;
      for (std::size_t v = cand.next(u + 1); v != kNone; v = cand.next(v + 1)) {
        if (popcount(um & verts_[v]) < need) {
          adj[u].reset(v);
          adj[v].reset(u);
        }
      }
    }
  }

  void expand(Bits cand, Mask meet, Mask join, const std::vector<Bits>& adj) {
    ++nodes;
    if (budget != 0 && nodes > budget) {
      aborted = true;
      return;
    }
    if (chosen_.size() > best && goal_.met(meet, join)) {
      best = chosen_.size();
      best_family = chosen_;
      if (stop_at_best || best >= ceiling) done = true;
    }
    if (done) return;
    Mask cand_meet = ~Mask{0};
    Mask cand_join = 0;
    for (std::size_t v = cand.first(); v != kNone; v = cand.next(v + 1)) {
      cand_meet &= verts_[v];
      cand_join |= verts_[v];
    }
    if (!goal_.reachable(meet & cand_meet, join | cand_join)) return;

    std::vector<std::size_t> order;
    std::vector<std::size_t> colour;
    Bits uncoloured = cand;
    std::size_t colours = 0;
    while (uncoloured.any()) {
      ++colours;
      Bits cls = uncoloured;
      for (std::size_t v = cls.first(); v != kNone; v = cls.first()) {
        cls.reset(v);
        cls.and_not(adj[v]);
        uncoloured.reset(v);
        order.push_back(v);
        colour.push_back(colours);
      }
    }
    for (std::size_t i = order.size(); i-- > 0;) {
      if (chosen_.size() + colour[i] <= best) return;
      const std::size_t v = order[i];
      const Mask m = verts_[v];
      closure_.push(m);
      chosen_.push_back(m);
      Bits next = cand;
      next &= adj[v];
      for (std::size_t u = next.first(); u != kNone; u = next.next(u + 1)) {
        if (!closure_.admits(verts_[u])) next.reset(u);
      }
      const std::size_t pair_levels = closure_.depth() - 1;
      if (pair_levels == 0) {
        expand(std::move(next), meet & m, join | m, adj);
        chosen_.pop_back();
        closure_.pop();
        if (done || aborted) return;
        cand.reset(v);
        continue;
      }
      std::vector<Bits> next_adj = adj;
      for (std::size_t j = closure_.uniform_need() && pair_levels > 0 ? pair_levels - 1 : 0;
           j < pair_levels; ++j) {
        const auto& level = closure_.level(j);
        for (std::size_t e = closure_.fresh_from(j); e < level.size(); ++e) {
          cut_pairs(next, next_adj, level[e], closure_.need(j + 1));
        }
      }
      expand(std::move(next), meet & m, join | m, next_adj);
      chosen_.pop_back();
      closure_.pop();
      if (done || aborted) return;
      cand.reset(v);
    }
  }

  Goal goal_;
  LayeredClosure closure_;
  std::vector<Mask> fixed_;
  bool valid_ = true;
  std::vector<Mask> verts_;
  std::vector<Bits> adj_;
  std::vector<Mask> chosen_;
};

struct CliqueOutcome {
  std::vector<Mask> family;
  std::uint64_t nodes = 0;
  bool aborted = false;
};

// Largest family meeting `goal` with more than `floor` members, or the first
// one found when stop_at_first is set. Any family with two or more members
// can be relabelled so that a pair with the smallest intersection a becomes
// [k] and [a] ∪ {k+1, ..., 2k-a}; each a is a separate subproblem in which
// all pairs share at least a elements.
CliqueOutcome clique_search(int n, int k, int r, const std::vector<int>& need, Goal goal,
                            std::size_t floor, bool stop_at_first, std::size_t ceiling,
                            std::uint64_t budget) {
  CliqueOutcome out;
  std::size_t best = floor;
  const Mask first = prefix_mask(k);
  if (best < 1 && goal.met(first, first)) {
    best = 1;
    out.family = {first};
    if (stop_at_first || best >= ceiling) return out;
  }
  for (int a = k - 1; a >= std::max(need.front(), 2 * k - n); --a) {
    const Mask second = prefix_mask(a) | (prefix_mask(2 * k - a) & ~prefix_mask(k));
    CliqueSearch search(n, k, r, need, goal, {first, second}, a);
    search.ceiling = ceiling;
    search.stop_at_best = stop_at_first;
    search.budget = budget == 0 ? 0 : (budget > out.nodes ? budget - out.nodes : 1);
    search.run(best);
    out.nodes += search.nodes;
    if (!search.best_family.empty()) {
      best = search.best;
      out.family = search.best_family;
    }
    if (search.aborted) {
      out.aborted = true;
      return out;
    }
    if (search.done) return out;
  }
  return out;
}

void validate_uniform(int n, int k, int r, int t) {
  require(n >= 1 && n <= kMaxGround, "n must lie in [1, 64]");
  require(k >= 0 && k <= n, "k must lie in [0, n]");
  require(r >= 2, "r must be at least 2");
  require(t >= 1, "t must be at least 1");
}

void check_cap(int n, int k, std::uint64_t cap) {
  const BigInt total = binom(n, k);
  if (total > BigInt(static_cast<unsigned long>(cap))) {
    fail(ErrorCode::CapExceeded, "C(" + std::to_string(n) + "," + std::to_string(k) + ") = " +
                                     total.get_str() + " exceeds the search cap " +
                                     std::to_string(cap));
  }
}

[[noreturn]] void budget_exceeded(std::uint64_t budget) {
  fail(ErrorCode::CapExceeded, "search exceeded its node budget of " + std::to_string(budget));
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Whether some r-wise t-intersecting non-t-star family has at least `target`
// members; nullopt when the node budget ran out.
std::optional<bool> nonstar_family_exists(int n, int k, int r, int t, std::size_t target,
                                          std::uint64_t budget, std::uint64_t& nodes,
                                          int min_union = 0) {
  const CliqueOutcome outcome =
      clique_search(n, k, r, nonstar_need(r, t), Goal{Goal::Kind::NonStar, t, min_union},
                    target - 1, true, kNone, budget);
  nodes += outcome.nodes;
  if (!outcome.family.empty()) return true;
  if (outcome.aborted) return std::nullopt;
  return false;
}

}  // namespace

SearchReport max_uniform(int n, int k, int r, int t, bool nontrivial,
                         const SearchOptions& options) {
  validate_uniform(n, k, r, t);
  check_cap(n, k, options.cap);
  const auto start = std::chrono::steady_clock::now();
  SearchReport report;
  report.witness = Family(n, k);
  if (k < t) {
    report.optimum = 0;
    report.infeasible = true;
    report.empty = true;
    report.wall_seconds = seconds_since(start);
    return report;
  }
  const std::size_t ceiling = root_ceiling(n, k, r, t);

  std::vector<Mask> witness;
  if (nontrivial) {
    const CliqueOutcome outcome = clique_search(n, k, r, nonstar_need(r, t),
                                                Goal{Goal::Kind::Nontrivial, t, 0}, 0, false,
                                                ceiling, options.node_budget);
    report.nodes_explored = outcome.nodes;
    if (outcome.aborted) budget_exceeded(options.node_budget);
    witness = outcome.family;
  } else if (options.shift_reduction) {
    const ShiftedSpace space = build_shifted_space(n, k, r, t);
    ShiftedSearch search(space, r, t);
    search.ceiling = ceiling;
    search.budget = options.node_budget;
    search.run();
    report.nodes_explored = search.nodes;
    if (search.aborted) budget_exceeded(options.node_budget);
    witness = search.best_family;
  } else {
    const CliqueOutcome outcome = clique_search(n, k, r, plain_need(r, t),
                                                Goal{Goal::Kind::Any, t, 0}, 0, false, ceiling,
                                                options.node_budget);
    report.nodes_explored = outcome.nodes;
    if (outcome.aborted) budget_exceeded(options.node_budget);
    witness = outcome.family;
  }

  report.optimum = static_cast<unsigned long>(witness.size());
  report.empty = witness.empty();
  report.witness = Family(n, witness, k);
  if (nontrivial) {
    report.all_optima_are_t_stars = witness.empty();
  } else if (!is_t_star(report.witness, t)) {
    report.all_optima_are_t_stars = false;
  } else if (binom(n, k) <= BigInt(static_cast<unsigned long>(options.uniqueness_cap))) {
    auto exists = nonstar_family_exists(n, k, r, t, witness.size(), options.uniqueness_node_budget,
                                        report.nodes_explored);
    if (exists) report.all_optima_are_t_stars = !*exists;
  }
  report.wall_seconds = seconds_since(start);
  return report;
}

SearchReport max_nonuniform(int n, int r, int t, bool nontrivial) {
  require(n >= 1, "n must be positive");
  if (n > 6) fail(ErrorCode::CapExceeded, "non-uniform search supports n <= 6");
  require(r >= 2, "r must be at least 2");
  require(t >= 1, "t must be at least 1");
  const auto start = std::chrono::steady_clock::now();

  // Subsets of [n] are indexed by their mask; families of subsets are
  // 64-bit words over these indices.
  const int total = 1 << n;
  std::array<Mask, 64> up{}, down{}, good{};
  for (int a = 0; a < total; ++a) {
    for (int b = 0; b < total; ++b) {
      if ((a & b) == a) up[a] |= Mask{1} << b;
      if ((a & b) == b) down[a] |= Mask{1} << b;
      if (popcount(static_cast<Mask>(a & b)) >= t) good[a] |= Mask{1} << b;
    }
  }
  auto intersect_all = [](Mask family, int m) {
    Mask out = 0;
    for (Mask f = family; f; f &= f - 1) out |= Mask{1} << (__builtin_ctzll(f) & m);
    return out;
  };

  SearchReport report;
  Mask best_upset = 0;
  int best_size = 0;
  bool found = false;
  const Mask full = prefix_mask(n);
  const std::size_t depth = static_cast<std::size_t>(r - 1);

  // levels[j] holds the intersections of at most j+1 chosen minimal sets.
  std::function<void(int, Mask, Mask, Mask, std::vector<Mask>)> dfs =
      [&](int from, Mask blocked, Mask upset, Mask meet, std::vector<Mask> levels) {
        ++report.nodes_explored;
        const bool goal = !nontrivial || meet == 0;
        const int size = popcount(upset);
        if (goal && (!found || size > best_size)) {
          found = true;
          best_size = size;
          best_upset = upset;
        }
        for (int c = from; c < total; ++c) {
          if ((blocked >> c) & 1) continue;
          if (popcount(static_cast<Mask>(c)) < t) continue;
          if (levels.back() & ~good[c]) continue;
          std::vector<Mask> next(depth);
          Mask prev = 0;
          for (std::size_t j = 0; j < depth; ++j) {
            next[j] = levels[j] | (j == 0 ? Mask{1} << c : prev | intersect_all(prev, c));
            prev = next[j];
          }
          dfs(c + 1, blocked | up[c] | down[c], upset | up[c], meet & static_cast<Mask>(c),
              std::move(next));
        }
      };
  dfs(0, 0, 0, full, std::vector<Mask>(depth, 0));

  std::vector<Mask> members;
  for (Mask f = best_upset; f; f &= f - 1) members.push_back(static_cast<Mask>(__builtin_ctzll(f)));
  report.witness = Family(n, members);
  report.optimum = best_size;
  report.empty = members.empty();
  report.all_optima_are_t_stars = nontrivial ? std::optional<bool>(report.empty) : std::nullopt;
  report.wall_seconds = seconds_since(start);
  return report;
}

bool verify_deletion_recursion(int n, int k, int r, int t, const SearchOptions& options) {
  validate_uniform(n, k, r, t);
  require(k >= 1, "k must be positive");
  if (static_cast<long>(r - 1) * n <= static_cast<long>(r) * k - t) {
    fail(ErrorCode::Precondition, "the deletion recursion needs (r-1)n > rk-t");
  }
  SearchOptions quick = options;
  quick.uniqueness_cap = 0;
  auto m = [&](int nn, int kk) -> BigInt {
    if (kk < 0 || kk > nn) return 0;
    return max_uniform(nn, kk, r, t, false, quick).optimum;
  };
  return m(n, k) <= m(n - 1, k) + m(n - 1, k - 1);
}

bool check_small_k_dichotomy(int n, int k, int r, int t, const SearchOptions& options) {
  validate_uniform(n, k, r, t);
  if (k >= t + r) return true;
  check_cap(n, k, options.cap);
  if (k < t) return true;
  // A violation is a non-t-star family whose union exceeds k+1 members when
  // k = t+r-1, and any non-t-star family at all when k < t+r-1.
  const int min_union = k == t + r - 1 ? k + 2 : 0;
  std::uint64_t nodes = 0;
  auto exists = nonstar_family_exists(n, k, r, t, 1, 0, nodes, min_union);
  return !*exists;
}

std::uint64_t for_each_shifted_family(
    int n, int k, int r, int t,
    const std::function<void(const std::vector<Mask>&)>& visit,
    const SearchOptions& options) {
  validate_uniform(n, k, r, t);
  check_cap(n, k, options.cap);
  if (k < t) {
    visit({});
    return 1;
  }
  const ShiftedSpace space = build_shifted_space(n, k, r, t);
  ShiftedSearch search(space, r, t);
  std::uint64_t count = 0;
  const std::function<void(const std::vector<Mask>&)> counting =
      [&](const std::vector<Mask>& fam) {
        ++count;
        visit(fam);
      };
  search.visit = &counting;
  search.run();
  return count;
}

}  // namespace intersectlab::search
