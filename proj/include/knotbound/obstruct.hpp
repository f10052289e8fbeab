#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "knotbound/poly.hpp"

namespace knotbound {

/// A lower bound for the genus non-increasing totally positive unknotting
/// number: a natural number or infinity.
class Bound {
 public:
  Bound() = default;
  static Bound finite(long long n) { return Bound(n, false); }
  static Bound infinity() { return Bound(0, true); }

  bool is_infinite() const { return infinite_; }
  long long value() const;
  std::string str() const { return infinite_ ? "inf" : std::to_string(value_); }

  friend bool operator==(const Bound&, const Bound&) = default;
  friend std::strong_ordering operator<=>(const Bound& a, const Bound& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }

 private:
  Bound(long long v, bool inf) : value_(v), infinite_(inf) {}
  long long value_ = 0;
  bool infinite_ = false;
};

enum class Rule { i_a, i_b, i_c, ii_a, ii_b, refined_exclusion };

/// "i-a", "i-b", "i-c", "ii-a", "ii-b", "refined-n-exclusion".
std::string_view rule_name(Rule r);

struct BoundReport {
  Bound bound;
  // Clauses whose hypothesis holds and whose bound is nonvacuous (>= 1).
  std::vector<Rule> rules_fired;
  // The bound is valid only for genus one knots; that hypothesis is asserted
  // by the caller, never computed.
  bool genus_one_assumed = true;
  // refined_bound ran out of candidate lengths: the bound is n_max + 1.
  bool exhausted = false;
};

/// Throws InputError ("not a knot zeroth coefficient polynomial") unless p0 is
/// nonzero, supported on even exponents, p0(1) = 1 and p0'(1) = 0.
void require_knot_p0(const LaurentPoly& p0);

/// Applies the five HOMFLY clauses to p0 = sum_i h_i v^{2i}, with m and M the
/// lowest and highest i such that h_i != 0:
///   i-a   bound >= m
///   i-b   h_m < 0             -> infinity
///   i-c   h_m = 1, h_m' < 0   -> bound >= m + 1 (m' the next index after m)
///   ii-a  h_M > 0             -> bound >= M
///   ii-b  h_M > 1             -> bound >= M + 1
/// and returns the strongest.
BoundReport theorem_bound(const LaurentPoly& p0);

/// For n = 0..n_max, a length-n sequence forces
///   g_n = (p0 - v^{2n}) / (1 - v^2)
/// to be a sum of n squares in Z[v, v^{-1}], so both extreme coefficients of
/// g_n must be sums of at most n squares. Returns the least n not excluded.
/// If every n is excluded the result is infinity when h_m < 0, and otherwise
/// n_max + 1 with `exhausted` set.
BoundReport refined_bound(const LaurentPoly& p0, int n_max);

struct GordianResult {
  bool pass = false;
  // The square root f with f(1) = 1, f'(1) = 0; absent on failure and for
  // identical inputs.
  std::optional<LaurentPoly> f;
  std::string reason;
};

/// Decides whether
///   v^{-e} p0_k - v^{e} p0_k2 = e (v^{-1} - v) v^{2e(a2_k - a2_k2)} f(v)^2
/// has a solution f with f(1) = 1 and f'(1) = 0. A failure proves that no
/// single crossing change of sign e at a non-nugatory crossing turns the genus
/// one knot K into a knot K2 of genus <= 1.
GordianResult gordian_one_test(const LaurentPoly& p0_k, const LaurentPoly& p0_k2,
                               const Integer& a2_k, const Integer& a2_k2, int eps);

/// p0 = v^{2n} + (1 - v^2) sum_i v^{2 k_i} f_i(v)^2 with f_i(1) = 1, f_i'(1) = 0.
struct DecompositionCertificate {
  int n = 0;
  std::vector<int> shifts;
  std::vector<LaurentPoly> factors;
};

/// Right-hand side of the certificate identity.
LaurentPoly reassemble(const DecompositionCertificate& cert);

/// True when the factors are normalized and reassembly reproduces p0.
bool certificate_holds(const DecompositionCertificate& cert, const LaurentPoly& p0);

struct SearchBounds {
  int shift_lo = -4;
  int shift_hi = 4;
  // Factors are supported on even exponents e with |e| <= deg_span.
  int deg_span = 2;
  int coeff_bound = 2;
  // Largest candidate or tuple count the search may enumerate.
  std::uint64_t ceiling = 50'000'000;
};

struct DecompositionSearchResult {
  std::optional<DecompositionCertificate> certificate;
  std::uint64_t candidate_count = 0;  // normalized (shift, factor) pairs
  std::uint64_t search_size = 0;      // multisets of n - 1 candidates
};

/// Exhaustive search within the bounds. Candidates are ordered by shift, then
/// by factor coefficients from the lowest exponent up; the lexicographically
/// least nondecreasing candidate tuple wins. Absence is not a nonexistence
/// proof. Throws GuardError when the search space exceeds the ceiling.
DecompositionSearchResult decomposition_search(const LaurentPoly& p0, int n,
                                               const SearchBounds& bounds);

}  // namespace knotbound
