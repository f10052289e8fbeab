#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace knotbound {

using Integer = boost::multiprecision::cpp_int;

/// Sparse Laurent polynomial in one variable with arbitrary-precision integer
/// coefficients. Zero coefficients are never stored, so two values compare
/// equal exactly when they represent the same polynomial.
class LaurentPoly {
 public:
  using Terms = std::map<int, Integer>;

  LaurentPoly() = default;
  LaurentPoly(int constant) : LaurentPoly(Integer(constant)) {}
  explicit LaurentPoly(Integer constant);

  static LaurentPoly monomial(Integer coeff, int exponent);
  // Sums repeated exponents and drops zeros.
  static LaurentPoly from_terms(std::initializer_list<std::pair<int, Integer>> terms);
  static LaurentPoly from_map(Terms terms);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Integer coeff(int exponent) const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

  // Adds coeff * v^exponent in place.
  void add_term(int exponent, const Integer& coeff);

 private:
  Terms terms_;
};

/// Multiplies by v^k.
LaurentPoly shift(const LaurentPoly& a, int k);

/// Image under v -> v^{-1}.
LaurentPoly invert_variable(const LaurentPoly& a);

/// Value at v = 1.
Integer eval_one(const LaurentPoly& a);
/// First derivative at v = 1.
Integer deriv_one(const LaurentPoly& a);

struct Support {
  int min_exp;
  int max_exp;
  Integer min_coeff;
  Integer max_coeff;
};

/// Lowest/highest exponents and their coefficients. Throws std::domain_error
/// ("no support") on the zero polynomial.
Support bounds(const LaurentPoly& a);

/// True when every stored exponent is even.
bool even_support(const LaurentPoly& a);

/// Exact quotient num / den in Z[v, v^{-1}], or nullopt if none exists.
/// Throws std::invalid_argument when den is zero.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& num, const LaurentPoly& den);

/// f with f * f == a and positive leading coefficient, or nullopt.
std::optional<LaurentPoly> sqrt_exact(const LaurentPoly& a);

/// Text form, e.g. "2v^2 - v^4", "v^-2 - 1 + v^2", "0". Exponents are always
/// written with '^' so the output is accepted by parse_laurent.
std::string format(const LaurentPoly& a, char var = 'v');

/// Parses the text form. Whitespace is ignored; a term is
/// `[coeff['*']]v^exp` or an integer; only the first term may carry a sign.
/// Throws ParseError with the offending byte offset.
LaurentPoly parse_laurent(std::string_view text, char var = 'v');

/// Two-variable Laurent polynomial in (v, z); keys are (v-exponent, z-exponent).
class HomflyValue {
 public:
  using Key = std::pair<int, int>;
  using Terms = std::map<Key, Integer>;

  HomflyValue() = default;
  HomflyValue(int constant) { if (constant != 0) terms_.emplace(Key{0, 0}, constant); }

  static HomflyValue monomial(Integer coeff, int v_exp, int z_exp);
  static HomflyValue from_map(Terms terms);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coeff(int v_exp, int z_exp) const;

  HomflyValue& operator+=(const HomflyValue& other);
  HomflyValue& operator-=(const HomflyValue& other);
  friend HomflyValue operator+(HomflyValue a, const HomflyValue& b) { return a += b; }
  friend HomflyValue operator-(HomflyValue a, const HomflyValue& b) { return a -= b; }
  friend HomflyValue operator*(const HomflyValue& a, const HomflyValue& b);
  friend HomflyValue operator-(const HomflyValue& a);
  friend bool operator==(const HomflyValue& a, const HomflyValue& b) = default;

  // coeff * v^dv * z^dz * this
  HomflyValue scale_monomial(const Integer& coeff, int dv, int dz) const;

  // Accumulates coeff * v^dv * z^dz * other into this.
  void add_scaled(const HomflyValue& other, const Integer& coeff, int dv, int dz);

 private:
  Terms terms_;
};

/// Image under v -> v^{-1}.
HomflyValue invert_v(const HomflyValue& h);

/// Specialization v = 1, as a Laurent polynomial in z.
LaurentPoly eval_v_one(const HomflyValue& h);

/// Grouped by z-power, e.g. "(2v^2 - v^4) + (v^2) z^2".
std::string format(const HomflyValue& h);

}  // namespace knotbound
