#include "knotbound/poly.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

#include "knotbound/errors.hpp"

namespace knotbound {

namespace {

template <class Map, class Key>
void accumulate(Map& terms, const Key& key, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

}  // namespace

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(Integer constant) {
  if (constant != 0) terms_.emplace(0, std::move(constant));
}

LaurentPoly LaurentPoly::monomial(Integer coeff, int exponent) {
  LaurentPoly p;
  if (coeff != 0) p.terms_.emplace(exponent, std::move(coeff));
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::initializer_list<std::pair<int, Integer>> terms) {
  LaurentPoly p;
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

LaurentPoly LaurentPoly::from_map(Terms terms) {
  std::erase_if(terms, [](const auto& kv) { return kv.second == 0; });
  LaurentPoly p;
  p.terms_ = std::move(terms);
  return p;
}

Integer LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

void LaurentPoly::add_term(int exponent, const Integer& coeff) {
  accumulate(terms_, exponent, coeff);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) accumulate(terms_, e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) accumulate(terms_, e, Integer(-c));
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) accumulate(out.terms_, ea + eb, Integer(ca * cb));
  return out;
}

LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly out = a;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly shift(const LaurentPoly& a, int k) {
  LaurentPoly::Terms t;
  for (const auto& [e, c] : a.terms()) t.emplace_hint(t.end(), e + k, c);
  return LaurentPoly::from_map(std::move(t));
}

LaurentPoly invert_variable(const LaurentPoly& a) {
  LaurentPoly::Terms t;
  for (const auto& [e, c] : a.terms()) t.emplace(-e, c);
  return LaurentPoly::from_map(std::move(t));
}

Integer eval_one(const LaurentPoly& a) {
  Integer s = 0;
  for (const auto& [e, c] : a.terms()) s += c;
  return s;
}

Integer deriv_one(const LaurentPoly& a) {
  Integer s = 0;
  for (const auto& [e, c] : a.terms()) s += c * e;
  return s;
}

Support bounds(const LaurentPoly& a) {
  if (a.is_zero()) throw std::domain_error("no support");
  const auto& lo = *a.terms().begin();
  const auto& hi = *a.terms().rbegin();
  return {lo.first, hi.first, lo.second, hi.second};
}

bool even_support(const LaurentPoly& a) {
  for (const auto& [e, c] : a.terms())
    if (e % 2 != 0) return false;
  return true;
}

std::optional<LaurentPoly> divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  if (num.is_zero()) return LaurentPoly{};

  // Long division from the top degree down. The quotient's exponent range is
  // fixed by the extremes of num and den, so anything left below it is a
  // nonzero remainder.
  const auto d = bounds(den);
  const auto n = bounds(num);
  const int q_lo = n.min_exp - d.min_exp;
  const int q_hi = n.max_exp - d.max_exp;
  if (q_hi < q_lo) return std::nullopt;

  LaurentPoly rem = num;
  LaurentPoly quot;
  while (!rem.is_zero()) {
    const auto& [top_e, top_c] = *rem.terms().rbegin();
    const int qe = top_e - d.max_exp;
    if (qe < q_lo) return std::nullopt;
    if (top_c % d.max_coeff != 0) return std::nullopt;
    const Integer qc = top_c / d.max_coeff;
    quot.add_term(qe, qc);
    rem -= shift(den, qe) * LaurentPoly(qc);
  }
  return quot;
}

std::optional<LaurentPoly> sqrt_exact(const LaurentPoly& a) {
  if (a.is_zero()) return LaurentPoly{};
  const auto s = bounds(a);
  if (s.min_exp % 2 != 0 || s.max_exp % 2 != 0) return std::nullopt;
  if (s.max_coeff <= 0 || s.min_coeff <= 0) return std::nullopt;
  const Integer lead = boost::multiprecision::sqrt(s.max_coeff);
  if (lead * lead != s.max_coeff) return std::nullopt;

  const int top = s.max_exp / 2;
  const int bottom = s.min_exp / 2;
  const int len = top - bottom + 1;

  // Dense coefficients of f from the top down: f[0] is the v^top coefficient.
  // The coefficient of v^(2 top - j) in f^2 is sum_{i+k=j} f[i] f[k], which
  // determines f[j] once f[0..j-1] are known.
  std::vector<Integer> f(len);
  f[0] = lead;
  const Integer two_lead = 2 * lead;
  for (int j = 1; j < len; ++j) {
    Integer target = a.coeff(2 * top - j);
    for (int i = 1; i < j; ++i) target -= f[i] * f[j - i];
    if (target % two_lead != 0) return std::nullopt;
    f[j] = target / two_lead;
  }

  LaurentPoly root;
  for (int j = 0; j < len; ++j) root.add_term(top - j, f[j]);
  if (root * root != a) return std::nullopt;
  return root;
}

// ------------------------------------------------------------- text format

std::string format(const LaurentPoly& a, char var) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : a.terms()) {
    const bool negative = c < 0;
    const Integer mag = negative ? Integer(-c) : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += mag.str();
      continue;
    }
    if (mag != 1) out += mag.str();
    out += var;
    out += '^';
    out += std::to_string(e);
  }
  return out;
}

namespace {

class LaurentParser {
 public:
  LaurentParser(std::string_view text, char var) : text_(text), var_(var) {}

  LaurentPoly parse() {
    LaurentPoly result;
    skip_ws();
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    parse_term(result, sign);
    for (;;) {
      skip_ws();
      if (at_end()) break;
      const char op = peek();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      ++pos_;
      parse_term(result, op == '-' ? -1 : 1);
    }
    return result;
  }

 private:
  void parse_term(LaurentPoly& out, int sign) {
    skip_ws();
    Integer coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = parse_digits();
      have_coeff = true;
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        if (peek() != var_) fail(std::string("expected '") + var_ + "' after '*'");
      }
    }
    int exponent = 0;
    if (peek() == var_) {
      ++pos_;
      skip_ws();
      if (peek() != '^') fail("expected '^'");
      ++pos_;
      skip_ws();
      int esign = 1;
      if (peek() == '-' || peek() == '+') {
        esign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      }
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
      const std::size_t start = pos_;
      const Integer e = parse_digits();
      if (e > 1'000'000'000) {
        pos_ = start;
        fail("exponent out of range");
      }
      exponent = esign * static_cast<int>(e);
    } else if (!have_coeff) {
      fail("expected term");
    }
    out.add_term(exponent, sign * coeff);
  }

  Integer parse_digits() {
    Integer value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      ++pos_;
      skip_ws();
    }
    return value;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  std::string_view text_;
  char var_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_laurent(std::string_view text, char var) {
  return LaurentParser(text, var).parse();
}

// ---------------------------------------------------------------- HomflyValue

HomflyValue HomflyValue::monomial(Integer coeff, int v_exp, int z_exp) {
  HomflyValue h;
  if (coeff != 0) h.terms_.emplace(Key{v_exp, z_exp}, std::move(coeff));
  return h;
}

HomflyValue HomflyValue::from_map(Terms terms) {
  std::erase_if(terms, [](const auto& kv) { return kv.second == 0; });
  HomflyValue h;
  h.terms_ = std::move(terms);
  return h;
}

Integer HomflyValue::coeff(int v_exp, int z_exp) const {
  auto it = terms_.find(Key{v_exp, z_exp});
  return it == terms_.end() ? Integer(0) : it->second;
}

HomflyValue& HomflyValue::operator+=(const HomflyValue& other) {
  for (const auto& [k, c] : other.terms_) accumulate(terms_, k, c);
  return *this;
}

HomflyValue& HomflyValue::operator-=(const HomflyValue& other) {
  for (const auto& [k, c] : other.terms_) accumulate(terms_, k, Integer(-c));
  return *this;
}

HomflyValue operator*(const HomflyValue& a, const HomflyValue& b) {
  HomflyValue out;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_)
      accumulate(out.terms_, HomflyValue::Key{ka.first + kb.first, ka.second + kb.second},
                 Integer(ca * cb));
  return out;
}

HomflyValue operator-(const HomflyValue& a) {
  HomflyValue out = a;
  for (auto& [k, c] : out.terms_) c = -c;
  return out;
}

HomflyValue HomflyValue::scale_monomial(const Integer& coeff, int dv, int dz) const {
  HomflyValue out;
  out.add_scaled(*this, coeff, dv, dz);
  return out;
}

void HomflyValue::add_scaled(const HomflyValue& other, const Integer& coeff, int dv, int dz) {
  if (coeff == 0) return;
  for (const auto& [k, c] : other.terms_)
    accumulate(terms_, Key{k.first + dv, k.second + dz}, Integer(c * coeff));
}

HomflyValue invert_v(const HomflyValue& h) {
  HomflyValue::Terms t;
  for (const auto& [k, c] : h.terms()) t.emplace(HomflyValue::Key{-k.first, k.second}, c);
  return HomflyValue::from_map(std::move(t));
}

LaurentPoly eval_v_one(const HomflyValue& h) {
  LaurentPoly out;
  for (const auto& [k, c] : h.terms()) out.add_term(k.second, c);
  return out;
}

std::string format(const HomflyValue& h) {
  if (h.is_zero()) return "0";
  std::map<int, LaurentPoly> by_z;
  for (const auto& [k, c] : h.terms()) by_z[k.second].add_term(k.first, c);
  std::string out;
  for (const auto& [ze, p] : by_z) {
    if (!out.empty()) out += " + ";
    out += '(' + format(p) + ')';
    if (ze != 0) out += " z^" + std::to_string(ze);
  }
  return out;
}

}  // namespace knotbound
