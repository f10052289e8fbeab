#pragma once

#include <random>

#include "knotbound/knotio.hpp"
#include "knotbound/poly.hpp"

namespace testing {

inline knotbound::LaurentPoly L(const char* text) { return knotbound::parse_laurent(text); }

inline knotbound::LaurentPoly random_poly(std::mt19937_64& rng, int max_terms = 5, int exp_range = 6,
                                          int coeff_range = 9) {
  std::uniform_int_distribution<int> terms(0, max_terms), exps(-exp_range, exp_range),
      coeffs(-coeff_range, coeff_range);
  knotbound::LaurentPoly p;
  for (int n = terms(rng); n > 0; --n) p.add_term(exps(rng), coeffs(rng));
  return p;
}

inline knotbound::BraidWord random_braid(std::mt19937_64& rng, int max_strands = 4, int max_letters = 8) {
  const int strands = std::uniform_int_distribution<int>(2, max_strands)(rng);
  const int letters = std::uniform_int_distribution<int>(1, max_letters)(rng);
  knotbound::BraidWord w{{}, strands};
  for (int i = 0; i < letters; ++i) {
    const int g = std::uniform_int_distribution<int>(1, strands - 1)(rng);
    w.letters.push_back(std::uniform_int_distribution<int>(0, 1)(rng) ? g : -g);
  }
  return w;
}

inline knotbound::BraidWord mirror(knotbound::BraidWord w) {
  for (int& l : w.letters) l = -l;
  return w;
}

}  // namespace testing
