#pragma once

#include "knotbound/poly.hpp"

namespace knotbound {

/// Minimum number of perfect squares summing to n (0..4).
struct SquareClass {
  int count = 0;
  friend bool operator==(const SquareClass&, const SquareClass&) = default;
};

/// Classifies n >= 0 by the classical criteria: perfect square; every prime
/// p = 3 (mod 4) to an even power (two squares); not of the form 4^a (8b + 7)
/// (three squares); otherwise four. Throws std::domain_error for n < 0.
SquareClass min_squares(const Integer& n);

/// True iff c = 0, or c > 0 is a sum of at most n perfect squares.
bool sum_of_squares_feasible(const Integer& c, int n);

}  // namespace knotbound
