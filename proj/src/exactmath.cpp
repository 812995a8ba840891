#include "intersectlab/exactmath.hpp"

#include <cctype>
#include <cstdlib>

#include "intersectlab/error.hpp"

namespace intersectlab {

BigRational make_rational(const BigInt& num, const BigInt& den) {
  require(den != 0, "rational with zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

BigInt pow(const BigInt& base, unsigned exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

BigRational pow(const BigRational& base, unsigned exponent) {
  BigRational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  out.canonicalize();
  return out;
}

BigInt binom(long n, long k) {
  require(n >= 0, "binom: n must be non-negative");
  if (k < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

RealInterval operator*(const RealInterval& a, const BigRational& s) {
  require(s >= 0, "interval scaling by a negative factor");
  return {a.lo * s, a.hi * s};
}

RealInterval operator+(const RealInterval& a, const BigRational& s) {
  return {a.lo + s, a.hi + s};
}

RealInterval mul_nonneg(const RealInterval& a, const RealInterval& b) {
  require(a.lo >= 0 && b.lo >= 0, "mul_nonneg: negative endpoint");
  return {a.lo * b.lo, a.hi * b.hi};
}

RealInterval pow_nonneg(const RealInterval& a, unsigned exponent) {
  require(a.lo >= 0, "pow_nonneg: negative endpoint");
  return {pow(a.lo, exponent), pow(a.hi, exponent)};
}

namespace {

// Exact d-th root of a non-negative integer, if there is one.
bool exact_root(const BigInt& x, unsigned d, BigInt& root) {
  return mpz_root(root.get_mpz_t(), x.get_mpz_t(), d) != 0;
}

// Outward rounding to dyadic rationals with `bits` fractional bits keeps
// interval endpoints from growing without bound under repeated squaring.
BigRational round_down(const BigRational& x, unsigned bits) {
  BigInt scaled = x.get_num() << bits;
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), x.get_den_mpz_t());
  return make_rational(q, BigInt(1) << bits);
}

BigRational round_up(const BigRational& x, unsigned bits) {
  BigInt scaled = x.get_num() << bits;
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), x.get_den_mpz_t());
  return make_rational(q, BigInt(1) << bits);
}

// Number of bits b with 2^-b <= tol.
unsigned bits_for(const BigRational& tol) {
  unsigned b = 0;
  BigRational w = 1;
  while (w > tol) {
    w /= 2;
    ++b;
  }
  return b;
}

}  // namespace

RealInterval nth_root_interval(const BigRational& x, unsigned d,
                               const BigRational& tol) {
  require(tol > 0, "nth_root_interval: tolerance must be positive");
  require(d >= 1, "nth_root_interval: degree must be at least 1");
  require(x >= 0, "nth_root_interval: radicand must be non-negative");
  BigInt rn, rd;
  if (exact_root(x.get_num(), d, rn) && exact_root(x.get_den(), d, rd)) {
    return RealInterval::point(make_rational(rn, rd));
  }
  BigRational lo = 0;
  BigRational hi = x > 1 ? x : BigRational(1);
  while (hi - lo > tol) {
    BigRational mid = (lo + hi) / 2;
    if (pow(mid, d) <= x) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {lo, hi};
}

RealInterval exp_neg_interval(const BigRational& q, const BigRational& tol) {
  require(q >= 0, "exp_neg_interval: argument must be non-negative");
  require(tol > 0, "exp_neg_interval: tolerance must be positive");
  if (q == 0) return RealInterval::point(1);

  // e^-q = (e^-y)^(2^m) with y = q / 2^m <= 1/2.
  unsigned m = 0;
  BigRational y = q;
  while (y > BigRational(1, 2)) {
    y /= 2;
    ++m;
  }
  unsigned bits = bits_for(tol) + m + 16;
  for (unsigned terms = 8;; terms *= 2) {
    BigRational sum = 0, term = 1;
    for (unsigned j = 0; j <= terms; ++j) {
      sum += term;
      term = term * y / (j + 1);
    }
    // Tail of the series is at most 2 * y^(N+1)/(N+1)! because y <= 1/2.
    BigRational tail = 2 * term;
    RealInterval e{1 / (sum + tail), 1 / sum};
    e.lo = round_down(e.lo, bits);
    e.hi = round_up(e.hi, bits);
    for (unsigned s = 0; s < m; ++s) {
      e.lo = round_down(e.lo * e.lo, bits);
      e.hi = round_up(e.hi * e.hi, bits);
    }
    if (e.width() <= tol) return e;
    if (terms > 4096) {
      bits += 32;
    }
  }
}

BigRational default_refinement_cap() {
  return make_rational(1, pow(BigInt(10), 30));
}

int certified_compare(const std::function<RealInterval(const BigRational&)>& make,
                      const BigRational& q, const BigRational& cap) {
  BigRational width(1, 1 << 10);
  for (;;) {
    if (width < cap) width = cap;
    RealInterval iv = make(width);
    if (iv.hi < q) return -1;
    if (iv.lo > q) return 1;
    if (iv.lo == q && iv.hi == q) return 0;
    if (width == cap) {
      fail(ErrorCode::Undecidable,
           "comparison undecidable at tolerance " + to_decimal(cap, 32));
    }
    width /= BigRational(1 << 16);
  }
}

BigInt certified_floor(const std::function<RealInterval(const BigRational&)>& make,
                       const BigRational& cap) {
  auto floor_of = [](const BigRational& x) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
  };
  BigRational width(1, 1 << 10);
  for (;;) {
    if (width < cap) width = cap;
    RealInterval iv = make(width);
    BigInt lo = floor_of(iv.lo);
    if (lo == floor_of(iv.hi)) return lo;
    if (width == cap) {
      fail(ErrorCode::Undecidable, "floor undecidable at tolerance " + to_decimal(cap, 32));
    }
    width /= BigRational(1 << 16);
  }
}

namespace {

BigRational parse_decimal(std::string_view s) {
  require(!s.empty(), "empty number");
  bool negative = false;
  std::size_t pos = 0;
  if (s[pos] == '+' || s[pos] == '-') {
    negative = s[pos] == '-';
    ++pos;
  }
  std::string digits;
  long frac_digits = 0;
  bool seen_point = false, seen_digit = false;
  for (; pos < s.size(); ++pos) {
    char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      seen_digit = true;
      if (seen_point) ++frac_digits;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!seen_digit) fail(ErrorCode::Parse, "malformed number '" + std::string(s) + "'");
  long exponent = 0;
  if (pos < s.size()) {
    if (s[pos] != 'e' && s[pos] != 'E') {
      fail(ErrorCode::Parse, "malformed number '" + std::string(s) + "'");
    }
    std::string exp_text(s.substr(pos + 1));
    char* end = nullptr;
    exponent = std::strtol(exp_text.c_str(), &end, 10);
    if (exp_text.empty() || *end != '\0') {
      fail(ErrorCode::Parse, "malformed exponent in '" + std::string(s) + "'");
    }
  }
  BigInt mantissa(digits, 10);
  long shift = exponent - frac_digits;
  BigRational out = mantissa;
  if (shift >= 0) {
    out *= pow(BigInt(10), static_cast<unsigned>(shift));
  } else {
    out /= pow(BigInt(10), static_cast<unsigned>(-shift));
  }
  out.canonicalize();
  return negative ? BigRational(-out) : out;
}

}  // namespace

BigRational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_decimal(text);
  BigRational num = parse_decimal(text.substr(0, slash));
  BigRational den = parse_decimal(text.substr(slash + 1));
  if (den == 0) fail(ErrorCode::Parse, "zero denominator in '" + std::string(text) + "'");
  BigRational out = num / den;
  out.canonicalize();
  return out;
}

std::string to_decimal(const BigRational& x, int digits) {
  BigRational a = abs(x);
  BigInt scaled = a.get_num() * pow(BigInt(10), static_cast<unsigned>(digits));
  BigInt q;
  mpz_tdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), a.get_den_mpz_t());
  std::string s = q.get_str();
  if (digits > 0) {
    if (s.size() <= static_cast<std::size_t>(digits)) {
      s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    }
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  }
  if (x < 0 && q != 0) s.insert(0, "-");
  return s;
}

BigRational from_double(double x) {
  BigRational q(x);
  q.canonicalize();
  return q;
}

double to_double(const BigRational& x) { return x.get_d(); }

}  // namespace intersectlab
