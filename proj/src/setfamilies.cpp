#include "intersectlab/setfamilies.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "intersectlab/error.hpp"

namespace intersectlab {

namespace {

void check_ground(int ground_n) {
  require(ground_n >= 0 && ground_n <= kMaxGround,
          "ground set size must lie in [0, 64], got " + std::to_string(ground_n));
}

}  // namespace

Subset::Subset(int ground_n, Mask bits) : ground_n_(ground_n), bits_(bits) {
  check_ground(ground_n);
  require((bits & ~prefix_mask(ground_n)) == 0,
          "subset has elements outside [" + std::to_string(ground_n) + "]");
}

Subset Subset::of(int ground_n, std::initializer_list<int> elements) {
  return from_elements(ground_n, std::span<const int>(elements.begin(), elements.size()));
}

Subset Subset::from_elements(int ground_n, std::span<const int> elements) {
  check_ground(ground_n);
  Mask bits = 0;
  for (int e : elements) {
    require(e >= 1 && e <= ground_n,
            "element " + std::to_string(e) + " outside [" + std::to_string(ground_n) + "]");
    bits |= element_bit(e);
  }
  return Subset(ground_n, bits);
}

std::vector<int> Subset::elements() const { return elements_of(bits_); }

std::vector<int> elements_of(Mask m) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(popcount(m)));
  while (m) {
    out.push_back(__builtin_ctzll(m) + 1);
    m &= m - 1;
  }
  return out;
}

Mask mask_of(std::initializer_list<int> elements) {
  Mask m = 0;
  for (int e : elements) m |= element_bit(e);
  return m;
}

Family::Family(int ground_n, std::optional<int> uniform_k)
    : ground_n_(ground_n), uniform_k_(uniform_k) {
  check_ground(ground_n);
  if (uniform_k) {
    require(*uniform_k >= 0 && *uniform_k <= ground_n, "uniform size outside [0, n]");
  }
}

Family::Family(int ground_n, std::vector<Mask> members, std::optional<int> uniform_k)
    : Family(ground_n, uniform_k) {
  std::sort(members.begin(), members.end());
  require(std::adjacent_find(members.begin(), members.end()) == members.end(),
          "family has duplicate members");
  const Mask outside = ~prefix_mask(ground_n);
  for (Mask m : members) {
    require((m & outside) == 0, "member has elements outside the ground set");
    if (uniform_k) require(popcount(m) == *uniform_k, "member size differs from k");
  }
  members_ = std::move(members);
}

Family Family::of(int ground_n,
                  std::initializer_list<std::initializer_list<int>> members,
                  std::optional<int> uniform_k) {
  std::vector<Mask> masks;
  for (const auto& m : members) {
    masks.push_back(Subset::of(ground_n, m).bits());
  }
  return Family(ground_n, std::move(masks), uniform_k);
}

bool Family::contains(Mask m) const {
  return std::binary_search(members_.begin(), members_.end(), m);
}

std::optional<int> Family::member_size() const {
  if (uniform_k_) return uniform_k_;
  if (members_.empty()) return std::nullopt;
  int k = popcount(members_.front());
  for (Mask m : members_) {
    if (popcount(m) != k) return std::nullopt;
  }
  return k;
}

IntersectionClosure::IntersectionClosure(int r) : r_(r) {
  require(r >= 2, "r must be at least 2");
  levels_.resize(static_cast<std::size_t>(r - 1));
  seen_.resize(static_cast<std::size_t>(r - 1));
}

void IntersectionClosure::add(Mask member) {
  std::vector<Mask> fresh{member};
  for (int arity = 1; arity < r_; ++arity) {
    auto& level = levels_[arity - 1];
    auto& seen = seen_[arity - 1];
    if (arity > 1) {
      // Multisets of this arity that use the new member: member ∩ (one fewer).
      const auto& below = levels_[arity - 2];
      for (Mask m : below) fresh.push_back(member & m);
    }
    std::vector<Mask> added;
    for (Mask m : fresh) {
      if (seen.insert(m).second) {
        level.push_back(m);
        added.push_back(m);
      }
    }
    fresh = std::move(added);
  }
}

bool IntersectionClosure::admits(Mask candidate, int t) const {
  if (popcount(candidate) < t) return false;
  for (Mask m : levels_.back()) {
    if (popcount(candidate & m) < t) return false;
  }
  return true;
}

bool is_rwise_t_intersecting(const Family& fam, int r, int t) {
  require(r >= 2, "r must be at least 2");
  require(t >= 1, "t must be at least 1");
  IntersectionClosure closure(r);
  for (Mask m : fam) {
    if (!closure.admits(m, t)) return false;
    closure.add(m);
  }
  return true;
}

Subset common_intersection(const Family& fam) {
  require(!fam.empty(), "common intersection of an empty family");
  Mask acc = prefix_mask(fam.ground());
  for (Mask m : fam) acc &= m;
  return Subset(fam.ground(), acc);
}

bool is_t_star(const Family& fam, int t) {
  if (fam.empty()) return true;
  return common_intersection(fam).size() >= t;
}

Family restrict(const Family& fam, const Subset& p, const Subset& q) {
  require((p.bits() & ~q.bits()) == 0, "restrict requires P ⊆ Q");
  std::vector<Mask> out;
  for (Mask m : fam) {
    if ((m & q.bits()) == p.bits()) out.push_back(m & ~q.bits());
  }
  std::optional<int> k;
  if (auto size = fam.uniform_k()) k = *size - p.size();
  if (k && *k < 0) k.reset();
  return Family(fam.ground(), std::move(out), k);
}

Family restrict_with(const Family& fam, int i) {
  Subset single(fam.ground(), element_bit(i));
  return restrict(fam, single, single);
}

Family restrict_without(const Family& fam, int i) {
  return restrict(fam, Subset(fam.ground(), 0), Subset(fam.ground(), element_bit(i)));
}

std::string to_text(const Family& fam) {
  std::ostringstream out;
  out << "n=" << fam.ground() << " k=";
  if (fam.uniform_k()) {
    out << *fam.uniform_k();
  } else {
    out << '*';
  }
  out << '\n';
  for (Mask m : fam) {
    bool first = true;
    for (int e : elements_of(m)) {
      if (!first) out << ',';
      out << e;
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

namespace {

int parse_int(std::string_view s, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    fail(ErrorCode::Parse, std::string("bad ") + what + " '" + std::string(s) + "'");
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

Family parse_family(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  std::size_t idx = 0;
  while (idx < lines.size() && (trim(lines[idx]).empty() || trim(lines[idx]).front() == '#')) ++idx;
  if (idx == lines.size()) fail(ErrorCode::Parse, "missing header line 'n=<n> k=<k|*>'");

  std::string_view header = trim(lines[idx++]);
  auto space = header.find_first_of(" \t");
  if (space == std::string_view::npos || header.substr(0, 2) != "n=") {
    fail(ErrorCode::Parse, "header must read 'n=<n> k=<k|*>'");
  }
  int n = parse_int(header.substr(2, space - 2), "ground size");
  std::string_view kpart = trim(header.substr(space));
  if (kpart.substr(0, 2) != "k=") fail(ErrorCode::Parse, "header must read 'n=<n> k=<k|*>'");
  std::optional<int> k;
  if (kpart.substr(2) != "*") k = parse_int(kpart.substr(2), "uniform size");
  if (n < 0 || n > kMaxGround) fail(ErrorCode::Parse, "ground size outside [0, 64]");

  // A blank line is the empty set only where the empty set can be a member.
  const bool empty_allowed = !k || *k == 0;
  std::vector<Mask> members;
  for (; idx < lines.size(); ++idx) {
    std::string_view line = trim(lines[idx]);
    if (!line.empty() && line.front() == '#') continue;
    if (line.empty()) {
      if (empty_allowed) members.push_back(0);
      continue;
    }
    Mask m = 0;
    std::size_t pos = 0;
    while (pos <= line.size()) {
      auto comma = line.find(',', pos);
      auto token = trim(line.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
      int e = parse_int(token, "element");
      if (e < 1 || e > n) fail(ErrorCode::Parse, "element " + std::to_string(e) + " outside [n]");
      if (m & element_bit(e)) fail(ErrorCode::Parse, "repeated element in a member");
      m |= element_bit(e);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    members.push_back(m);
  }
  try {
    return Family(n, std::move(members), k);
  } catch (const Error& e) {
    fail(ErrorCode::Parse, e.what());
  }
}

}  // namespace intersectlab
