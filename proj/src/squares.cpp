#include "knotbound/squares.hpp"

#include <stdexcept>

namespace knotbound {

namespace {

bool is_square(const Integer& n) {
  const Integer r = boost::multiprecision::sqrt(n);
  return r * r == n;
}

// Trial division; coefficients of desk-scale knot polynomials are small.
bool is_sum_of_two_squares(Integer n) {
  for (Integer p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int power = 0;
    while (n % p == 0) {
      n /= p;
      ++power;
    }
    if (p % 4 == 3 && power % 2 != 0) return false;
  }
  return n % 4 != 3;
}

}  // namespace

SquareClass min_squares(const Integer& n) {
  if (n < 0) throw std::domain_error("min_squares of a negative integer");
  if (n == 0) return {0};
  if (is_square(n)) return {1};
  if (is_sum_of_two_squares(n)) return {2};
  Integer m = n;
  while (m % 4 == 0) m /= 4;
  return {m % 8 == 7 ? 4 : 3};
}

bool sum_of_squares_feasible(const Integer& c, int n) {
  if (c == 0) return true;
  if (c < 0) return false;
  return min_squares(c).count <= n;
}

}  // namespace knotbound
