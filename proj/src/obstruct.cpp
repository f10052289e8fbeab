#include "knotbound/obstruct.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "knotbound/errors.hpp"
#include "knotbound/squares.hpp"

namespace knotbound {

long long Bound::value() const {
  if (infinite_) throw std::logic_error("value of an infinite bound");
  return value_;
}

std::string_view rule_name(Rule r) {
  switch (r) {
    case Rule::i_a: return "i-a";
    case Rule::i_b: return "i-b";
    case Rule::i_c: return "i-c";
    case Rule::ii_a: return "ii-a";
    case Rule::ii_b: return "ii-b";
    case Rule::refined_exclusion: return "refined-n-exclusion";
  }
  return "?";
}

void require_knot_p0(const LaurentPoly& p0) {
  if (p0.is_zero() || !even_support(p0) || eval_one(p0) != 1 || deriv_one(p0) != 0)
    throw InputError("not a knot zeroth coefficient polynomial: " + format(p0));
}

namespace {

const LaurentPoly& one_minus_v2() {
  static const LaurentPoly p = LaurentPoly::from_terms({{0, 1}, {2, -1}});
  return p;
}

}  // namespace

BoundReport theorem_bound(const LaurentPoly& p0) {
  require_knot_p0(p0);
  const auto s = bounds(p0);
  const int m = s.min_exp / 2;
  const int M = s.max_exp / 2;
  const Integer& h_m = s.min_coeff;
  const Integer& h_M = s.max_coeff;

  BoundReport report;
  long long best = 0;
  auto fire = [&](Rule rule, long long value) {
    if (value < 1) return;
    report.rules_fired.push_back(rule);
    best = std::max(best, value);
  };

  fire(Rule::i_a, m);
  bool infinite = false;
  if (h_m < 0) {
    infinite = true;
    report.rules_fired.push_back(Rule::i_b);
  }
  if (h_m == 1 && p0.size() > 1) {
    const Integer& h_next = std::next(p0.terms().begin())->second;
    if (h_next < 0) fire(Rule::i_c, m + 1);
  }
  if (h_M > 0) fire(Rule::ii_a, M);
  if (h_M > 1) fire(Rule::ii_b, M + 1);

  report.bound = infinite ? Bound::infinity() : Bound::finite(best);
  return report;
}

BoundReport refined_bound(const LaurentPoly& p0, int n_max) {
  require_knot_p0(p0);
  if (n_max < 0) throw InputError("n_max must be nonnegative");
  BoundReport report;
  for (int n = 0; n <= n_max; ++n) {
    const auto g = divide_exact(p0 - LaurentPoly::monomial(1, 2 * n), one_minus_v2());
    if (!g) throw InvariantError("p0 - v^2n is not divisible by 1 - v^2");
    bool excluded;
    if (g->is_zero()) {
      excluded = false;
    } else if (n == 0) {
      excluded = true;
    } else {
      const auto s = bounds(*g);
      excluded = !sum_of_squares_feasible(s.min_coeff, n) || !sum_of_squares_feasible(s.max_coeff, n);
    }
    if (!excluded) {
      report.bound = Bound::finite(n);
      if (n > 0) report.rules_fired.push_back(Rule::refined_exclusion);
      return report;
    }
  }
  if (bounds(p0).min_coeff < 0) {
    report.bound = Bound::infinity();
    report.rules_fired = {Rule::i_b, Rule::refined_exclusion};
  } else {
    report.bound = Bound::finite(n_max + 1);
    report.rules_fired = {Rule::refined_exclusion};
    report.exhausted = true;
  }
  return report;
}

GordianResult gordian_one_test(const LaurentPoly& p0_k, const LaurentPoly& p0_k2,
                               const Integer& a2_k, const Integer& a2_k2, int eps) {
  if (eps != 1 && eps != -1) throw InputError("crossing sign must be +1 or -1");
  GordianResult result;
  if (p0_k == p0_k2 && a2_k == a2_k2) {
    result.pass = true;
    result.reason = "identical inputs (distance 0)";
    return result;
  }
  LaurentPoly lhs = shift(p0_k, -eps) - shift(p0_k2, eps);
  if (eps < 0) lhs = -lhs;
  const LaurentPoly v_inv_minus_v = LaurentPoly::from_terms({{-1, 1}, {1, -1}});
  const auto quotient = divide_exact(lhs, v_inv_minus_v);
  if (!quotient) {
    result.reason = "not divisible by v^-1 - v";
    return result;
  }
  const Integer a2_gap = a2_k - a2_k2;
  if (boost::multiprecision::abs(a2_gap) > 100'000'000) throw InputError("a2 difference out of range");
  const LaurentPoly square = shift(*quotient, -2 * eps * static_cast<int>(a2_gap));
  auto f = sqrt_exact(square);
  if (!f) {
    result.reason = "not a perfect square: " + format(square);
    return result;
  }
  if (eval_one(*f) == -1) f = -*f;
  if (eval_one(*f) != 1) {
    result.reason = "square root has f(1) = " + eval_one(*f).str();
    return result;
  }
  if (deriv_one(*f) != 0) {
    result.reason = "square root has f'(1) = " + deriv_one(*f).str();
    return result;
  }
  result.pass = true;
  result.f = std::move(f);
  result.reason = "square root found";
  return result;
}

LaurentPoly reassemble(const DecompositionCertificate& cert) {
  LaurentPoly sum;
  for (std::size_t i = 0; i < cert.factors.size(); ++i)
    sum += shift(cert.factors[i] * cert.factors[i], 2 * cert.shifts.at(i));
  return LaurentPoly::monomial(1, 2 * cert.n) + one_minus_v2() * sum;
}

bool certificate_holds(const DecompositionCertificate& cert, const LaurentPoly& p0) {
  if (cert.n < 1 || cert.factors.size() != static_cast<std::size_t>(cert.n) ||
      cert.shifts.size() != cert.factors.size())
    return false;
  for (const LaurentPoly& f : cert.factors)
    if (!even_support(f) || eval_one(f) != 1 || deriv_one(f) != 0) return false;
  return reassemble(cert) == p0;
}

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

// Number of multisets of size k drawn from c items, saturating.
std::uint64_t multichoose(std::uint64_t c, int k) {
  if (k == 0) return 1;
  if (c == 0) return 0;
  // C(c + k - 1, k), computed incrementally; each partial product is exact.
  boost::multiprecision::cpp_int acc = 1;
  for (int i = 1; i <= k; ++i) {
    acc = acc * (c + static_cast<std::uint64_t>(i) - 1) / i;
    if (acc > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(acc);
}

// Factors f on exponents -2h..2h (step 2) with coefficients in [-B, B],
// f(1) = 1 and f'(1) = 0, in lexicographic order of the coefficient vector
// read from the lowest exponent.
std::vector<LaurentPoly> normalized_factors(int half_span, int coeff_bound) {
  const int slots = 2 * half_span + 1;
  std::vector<int> exps(slots);
  for (int j = 0; j < slots; ++j) exps[j] = 2 * (j - half_span);
  std::vector<LaurentPoly> out;
  std::vector<int> coeffs(slots);
  // Running sums let the last two slots be solved for instead of enumerated.
  auto recurse = [&](auto&& self, int j, long long sum, long long moment) -> void {
    if (j == slots) {
      if (sum == 1 && moment == 0) {
        LaurentPoly f;
        for (int t = 0; t < slots; ++t) f.add_term(exps[t], coeffs[t]);
        out.push_back(std::move(f));
      }
      return;
    }
    // Remaining slots j..slots-1 can shift sum by at most B per slot.
    const long long left = slots - j;
    if (std::llabs(1 - sum) > left * coeff_bound) return;
    for (int c = -coeff_bound; c <= coeff_bound; ++c) {
      coeffs[j] = c;
      self(self, j + 1, sum + c, moment + static_cast<long long>(c) * exps[j]);
    }
  };
  recurse(recurse, 0, 0, 0);
  return out;
}

}  // namespace

DecompositionSearchResult decomposition_search(const LaurentPoly& p0, int n,
                                               const SearchBounds& b) {
  require_knot_p0(p0);
  if (n < 1) throw InputError("sequence length must be positive");
  if (b.shift_lo > b.shift_hi || b.deg_span < 0 || b.coeff_bound < 1)
    throw InputError("empty decomposition search bounds");

  const int half_span = b.deg_span / 2;
  const std::uint64_t raw =
      [&] {
        std::uint64_t r = 1;
        for (int j = 0; j < 2 * half_span + 1; ++j) r = saturating_mul(r, 2 * b.coeff_bound + 1);
        return r;
      }();
  if (raw > b.ceiling)
    throw GuardError("factor space has " + std::to_string(raw) + " coefficient vectors, ceiling is " +
                     std::to_string(b.ceiling));

  DecompositionSearchResult result;
  const auto factors = normalized_factors(half_span, b.coeff_bound);
  const std::uint64_t shifts = static_cast<std::uint64_t>(b.shift_hi - b.shift_lo + 1);
  result.candidate_count = saturating_mul(shifts, factors.size());
  result.search_size = multichoose(result.candidate_count, n - 1);
  if (result.search_size > b.ceiling)
    throw GuardError("decomposition search space has " + std::to_string(result.search_size) +
                     " tuples, ceiling is " + std::to_string(b.ceiling));

  const auto target = divide_exact(p0 - LaurentPoly::monomial(1, 2 * n), one_minus_v2());
  if (!target) throw InvariantError("p0 - v^2n is not divisible by 1 - v^2");

  struct Candidate {
    int shift;
    const LaurentPoly* factor;
    LaurentPoly term;  // v^{2k} f^2
  };
  std::vector<Candidate> cands;
  cands.reserve(result.candidate_count);
  for (int k = b.shift_lo; k <= b.shift_hi; ++k)
    for (const LaurentPoly& f : factors) cands.push_back({k, &f, shift(f * f, 2 * k)});

  // Distinct (shift, factor) pairs give distinct terms under the normalization.
  std::map<LaurentPoly::Terms, int> index_of;
  for (int i = 0; i < static_cast<int>(cands.size()); ++i) index_of.emplace(cands[i].term.terms(), i);

  std::vector<int> chosen;
  auto positive_extremes = [](const LaurentPoly& p) {
    if (p.is_zero()) return false;
    const auto s = bounds(p);
    return s.min_coeff > 0 && s.max_coeff > 0;
  };
  auto search = [&](auto&& self, int from, const LaurentPoly& rest) -> bool {
    const int remaining = n - static_cast<int>(chosen.size());
    if (!positive_extremes(rest)) return false;
    if (remaining == 1) {
      auto it = index_of.find(rest.terms());
      if (it == index_of.end() || it->second < from) return false;
      chosen.push_back(it->second);
      return true;
    }
    for (int i = from; i < static_cast<int>(cands.size()); ++i) {
      chosen.push_back(i);
      if (self(self, i, rest - cands[i].term)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (search(search, 0, *target)) {
    DecompositionCertificate cert;
    cert.n = n;
    for (int i : chosen) {
      cert.shifts.push_back(cands[i].shift);
      cert.factors.push_back(*cands[i].factor);
    }
    if (!certificate_holds(cert, p0)) throw InvariantError("decomposition certificate fails reassembly");
    result.certificate = std::move(cert);
  }
  return result;
}

}  // namespace knotbound
