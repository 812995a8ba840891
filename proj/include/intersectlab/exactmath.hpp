#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace intersectlab {

// Arbitrary precision integer and reduced rational (GMP). mpq_class keeps
// its value canonical (lowest terms, positive denominator) after every
// arithmetic operation; values built from raw parts go through make_rational.
using BigInt = mpz_class;
using BigRational = mpq_class;

BigRational make_rational(const BigInt& num, const BigInt& den);
BigRational pow(const BigRational& base, unsigned exponent);
BigInt pow(const BigInt& base, unsigned exponent);

/// C(n, k), with C(n, k) = 0 for k < 0 or k > n. Requires n >= 0.
BigInt binom(long n, long k);

/// Closed interval [lo, hi] with exact rational endpoints, used to house
/// irrational quantities.
struct RealInterval {
  BigRational lo;
  BigRational hi;

  static RealInterval point(const BigRational& x) { return {x, x}; }
  BigRational width() const { return hi - lo; }
  bool contains(const BigRational& x) const { return lo <= x && x <= hi; }
  BigRational midpoint() const { return (lo + hi) / 2; }
};

// Monotone images of intervals under operations with known sign.
RealInterval operator*(const RealInterval& a, const BigRational& s);  // s >= 0
RealInterval operator+(const RealInterval& a, const BigRational& s);
RealInterval mul_nonneg(const RealInterval& a, const RealInterval& b);
RealInterval pow_nonneg(const RealInterval& a, unsigned exponent);

/// Interval of width <= tol containing x^(1/d), found by bisection on exact
/// rationals. Invariant of the result: lo^d <= x <= hi^d.
RealInterval nth_root_interval(const BigRational& x, unsigned d,
                               const BigRational& tol);

/// Interval containing e^(-q) for q >= 0, of width <= tol.
RealInterval exp_neg_interval(const BigRational& q, const BigRational& tol);

/// Smallest refinement width attempted before a comparison is declared
/// undecidable: 10^-30.
BigRational default_refinement_cap();

/// Sign of (value - q) where value is only available through intervals of
/// shrinking width. `make` maps a requested width to an enclosing interval.
/// Throws Error(Undecidable) once the width reaches `cap` without a decision.
int certified_compare(const std::function<RealInterval(const BigRational&)>& make,
                      const BigRational& q,
                      const BigRational& cap = default_refinement_cap());

/// Parses "3", "-2/7", "0.125", "1e-6", "2.5E3" into an exact rational.
/// floor of the real number enclosed by make(width) as the width shrinks.
/// Throws Undecidable if the enclosures still straddle an integer at `cap`.
BigInt certified_floor(const std::function<RealInterval(const BigRational&)>& make,
                       const BigRational& cap = default_refinement_cap());

BigRational parse_rational(std::string_view text);

/// Fixed-point decimal rendering rounded toward zero to `digits` places.
std::string to_decimal(const BigRational& x, int digits = 20);

/// Rational approximation of a double (exact binary value).
BigRational from_double(double x);

double to_double(const BigRational& x);

}  // namespace intersectlab
