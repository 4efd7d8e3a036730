#pragma once

#include <cstdint>
#include <optional>

namespace tvlab {

/// Parameters of a Tverberg-number bound: b disjoint bases, rank r, target
/// dimension d, and x = d + 1.
struct BoundQuery {
  int b = 1;
  int r = 1;
  int d = 1;

  int x() const { return d + 1; }
};

struct BoundReport {
  BoundQuery query;
  long double ell = 0;
  /// Largest prime power p ≤ 2ℓ, if 2ℓ ≥ 2.
  std::optional<std::int64_t> best_prime_power;
  /// ⌈br/(⌈b/p⌉ + 1)⌉ - 2 for p = best_prime_power.
  std::optional<std::int64_t> connectivity_lower;
  /// Strict upper bound on the Tverberg number, when d ≥ 3 and r ≤ d - 2.
  std::optional<std::int64_t> upper_npp;
};

/// ℓ(b,r,x) = (2x + (r-x)b + √((2x + b(r-x))² + 8bx²)) / (8x).
long double ell(int b, int r, int x);

/// Exact test of p ≤ 2ℓ(b,r,x): with T = 2x + (r-x)b and D = T² + 8bx²,
/// p ≤ 2ℓ iff 4xp - T ≤ 0 or (4xp - T)² ≤ D.
bool within_two_ell(std::int64_t p, int b, int r, int x);

/// Largest integer p with p ≤ 2ℓ(b,r,x).
std::int64_t floor_two_ell(int b, int r, int x);

/// Left-hand side of the quadratic inequality -2xp² + (2x - xb + br)p + xb ≥ 0,
/// in exact integer arithmetic.
std::int64_t eq2_value(std::int64_t p, int b, int r, int x);

/// p^m with p prime and m ≥ 1; 1 is not a prime power.
bool is_prime_power(std::uint64_t n);

/// Least integer k ≥ max(x, 2) that is not a prime power. Throws
/// BadParameter for negative or non-finite x.
std::int64_t npp_ceiling(long double x);
/// The same for the exact ratio num/den (den > 0).
std::int64_t npp_ceiling(std::int64_t num, std::int64_t den);

/// Largest prime power p ≤ 2ℓ, none if 2ℓ < 2. Throws BadParameter unless
/// b, r, d ≥ 1.
std::optional<std::int64_t> tt_lower_bound(const BoundQuery& q);

/// ⌈br/(⌈b/p⌉ + 1)⌉ - 2.
std::int64_t bkm_connectivity(int b, int r, std::int64_t p);

/// npp-ceiling of d/(d - r + 1). Throws HypothesisViolated unless d ≥ 3 and
/// r ≤ d - 2; BadParameter unless r ≥ 1.
std::int64_t tt_upper_bound(int r, int d);

BoundReport bound_report(const BoundQuery& q);

}  // namespace tvlab
