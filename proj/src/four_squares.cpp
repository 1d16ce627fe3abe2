#include "curvesos/four_squares.hpp"

#include <gmp.h>

#include <cmath>

#include "curvesos/error.hpp"

namespace curvesos {

namespace {

bool is_square(const Integer& n, Integer& root) {
  if (n < 0) return false;
  root = isqrt(n);
  return root * root == n;
}

Integer powmod(const Integer& b, const Integer& e, const Integer& m) {
  Integer r;
  mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return r;
}

// Brute force for small n.
std::array<Integer, 4> small_four_squares(long n) {
  for (long a = 0; a * a <= n; ++a)
    for (long b = a; a * a + b * b <= n; ++b)
      for (long c = b; a * a + b * b + c * c <= n; ++c) {
        long r = n - a * a - b * b - c * c;
        long d = static_cast<long>(std::sqrt(static_cast<double>(r)));
        while (d * d > r) --d;
        while ((d + 1) * (d + 1) <= r) ++d;
        if (d * d == r) return {Integer(a), Integer(b), Integer(c), Integer(d)};
      }
  fail(ErrorCode::NumericFailure, "four-square search failed");
}

}  // namespace

std::optional<std::pair<Integer, Integer>> two_squares_prime(const Integer& p) {
  if (p == 2) return std::make_pair(Integer(1), Integer(1));
  if (p < 2 || p % 4 != 1) return std::nullopt;
  // Square root of -1 modulo p from a quadratic non-residue.
  Integer x;
  Integer e = (p - 1) / 4;
  for (Integer c = 2; c < p; ++c) {
    x = powmod(c, e, p);
    if ((x * x) % p == p - 1) break;
    if (c > 1000) return std::nullopt;
  }
  // Euclid on (p, x) until the remainder drops below sqrt(p).
  Integer a = p, b = x, lim = isqrt(p);
  while (b > lim) {
    Integer r = a % b;
    a = b;
    b = r;
  }
  Integer rest = p - b * b, c;
  if (!is_square(rest, c)) return std::nullopt;
  return std::make_pair(b, c);
}

std::array<Integer, 4> four_squares(const Integer& n) {
  if (n < 0) fail(ErrorCode::InvalidInput, "negative integer has no four-square decomposition");
  if (n == 0) return {Integer(0), Integer(0), Integer(0), Integer(0)};
  // Strip factors of 4.
  Integer m = n, scale = 1;
  while (m % 4 == 0) {
    m /= 4;
    scale *= 2;
  }
  if (m < 2000) {
    auto r = small_four_squares(m.get_si());
    for (auto& v : r) v *= scale;
    return r;
  }
  // Pick x, y so that m - x^2 - y^2 is a prime that splits as a sum of two squares.
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(m);
  Integer top = isqrt(m);
  for (int attempt = 0; attempt < 200000; ++attempt) {
    Integer x = rng.get_z_range(top + 1);
    Integer rem = m - x * x;
    Integer y = rng.get_z_range(isqrt(rem) + 1);
    Integer r = rem - y * y, s;
    if (r == 0) return {x * scale, y * scale, Integer(0), Integer(0)};
    if (is_square(r, s)) return {x * scale, y * scale, s * scale, Integer(0)};
    if (mpz_probab_prime_p(r.get_mpz_t(), 30) == 0) continue;
    if (auto ab = two_squares_prime(r)) return {x * scale, y * scale, ab->first * scale, ab->second * scale};
  }
  fail(ErrorCode::NumericFailure, "four-square search did not terminate");
}

std::vector<Rational> rational_four_squares(const Rational& q) {
  if (sgn(q) < 0) fail(ErrorCode::InvalidInput, "negative rational has no square decomposition");
  std::vector<Rational> out;
  if (sgn(q) == 0) return out;
  if (auto r = rational_sqrt(q)) return {*r};
  // q = a/b = (a b) / b^2
  Integer a = q.get_num(), b = q.get_den();
  for (const auto& v : four_squares(a * b))
    if (v != 0) out.push_back(Rational(v, b));
  for (auto& v : out) v.canonicalize();
  return out;
}

}  // namespace curvesos
