#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "curvesos/rational.hpp"

namespace curvesos {

// a^2 + b^2 = p for a prime p = 2 or p = 1 mod 4 (Cornacchia).
std::optional<std::pair<Integer, Integer>> two_squares_prime(const Integer& p);

// Lagrange four-square decomposition of n >= 0; deterministic for a given n.
std::array<Integer, 4> four_squares(const Integer& n);

// q >= 0 as a sum of at most four rational squares (entries returned nonzero only).
std::vector<Rational> rational_four_squares(const Rational& q);

}  // namespace curvesos
