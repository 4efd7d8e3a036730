#include "tvlab/bounds.hpp"

#include <cmath>

#include "tvlab/error.hpp"

namespace tvlab {

namespace {

using i128 = __int128;

void check_positive(int b, int r, int x) {
  if (b < 1 || r < 1 || x < 2) throw Error(ErrorCode::BadParameter, "bounds need b, r, d >= 1");
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

}  // namespace

long double ell(int b, int r, int x) {
  const long double t = 2.0L * x + static_cast<long double>(r - x) * b;
  const long double disc = t * t + 8.0L * b * static_cast<long double>(x) * x;
  return (t + std::sqrt(disc)) / (8.0L * x);
}

bool within_two_ell(std::int64_t p, int b, int r, int x) {
  const i128 t = 2 * static_cast<i128>(x) + static_cast<i128>(r - x) * b;
  const i128 disc = t * t + 8 * static_cast<i128>(b) * x * x;
  const i128 lhs = 4 * static_cast<i128>(x) * p - t;
  return lhs <= 0 || lhs * lhs <= disc;
}

std::int64_t floor_two_ell(int b, int r, int x) {
  auto p = static_cast<std::int64_t>(std::floor(2.0L * ell(b, r, x)));
  while (!within_two_ell(p, b, r, x)) --p;
  while (within_two_ell(p + 1, b, r, x)) ++p;
  return p;
}

std::int64_t eq2_value(std::int64_t p, int b, int r, int x) {
  const std::int64_t xx = x;
  return -2 * xx * p * p + (2 * xx - xx * b + static_cast<std::int64_t>(b) * r) * p + xx * b;
}

bool is_prime_power(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q != 0) continue;
    while (n % q == 0) n /= q;
    return n == 1;
  }
  return true;
}

std::int64_t npp_ceiling(long double x) {
  if (!std::isfinite(x) || x < 0) throw Error(ErrorCode::BadParameter, "npp ceiling needs a finite x >= 0");
  auto k = static_cast<std::int64_t>(std::ceil(x));
  if (k < 2) k = 2;
  while (is_prime_power(static_cast<std::uint64_t>(k))) ++k;
  return k;
}

std::int64_t npp_ceiling(std::int64_t num, std::int64_t den) {
  if (den <= 0 || num < 0) throw Error(ErrorCode::BadParameter, "npp ceiling needs num >= 0, den > 0");
  std::int64_t k = ceil_div(num, den);
  if (k < 2) k = 2;
  while (is_prime_power(static_cast<std::uint64_t>(k))) ++k;
  return k;
}

std::optional<std::int64_t> tt_lower_bound(const BoundQuery& q) {
  check_positive(q.b, q.r, q.x());
  for (std::int64_t p = floor_two_ell(q.b, q.r, q.x()); p >= 2; --p) {
    if (is_prime_power(static_cast<std::uint64_t>(p))) return p;
  }
  return std::nullopt;
}

std::int64_t bkm_connectivity(int b, int r, std::int64_t p) {
  if (p < 1 || b < 1) throw Error(ErrorCode::BadParameter, "connectivity form needs b, p >= 1");
  return ceil_div(static_cast<std::int64_t>(b) * r, ceil_div(b, p) + 1) - 2;
}

std::int64_t tt_upper_bound(int r, int d) {
  if (r < 1) throw Error(ErrorCode::BadParameter, "rank must be positive");
  if (d < 3 || r > d - 2) throw Error(ErrorCode::HypothesisViolated, "upper bound needs d >= 3 and r <= d - 2");
  return npp_ceiling(d, d - r + 1);
}

BoundReport bound_report(const BoundQuery& q) {
  BoundReport rep;
  rep.query = q;
  rep.ell = ell(q.b, q.r, q.x());
  rep.best_prime_power = tt_lower_bound(q);
  if (rep.best_prime_power) rep.connectivity_lower = bkm_connectivity(q.b, q.r, *rep.best_prime_power);
  if (q.d >= 3 && q.r <= q.d - 2) rep.upper_npp = tt_upper_bound(q.r, q.d);
  return rep;
}

}  // namespace tvlab
