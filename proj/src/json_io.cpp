#include "knotbound/json_io.hpp"

#include <limits>

#include "knotbound/errors.hpp"

namespace knotbound {

Json integer_json(const Integer& n) {
  if (n >= std::numeric_limits<long long>::min() && n <= std::numeric_limits<long long>::max())
    return static_cast<long long>(n);
  return n.str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const std::size_t digits = s.find_first_not_of("+-");
    if (s.empty() || digits > 1 || digits == std::string::npos ||
        s.find_first_not_of("0123456789", digits) != std::string::npos)
      throw InputError("malformed integer string: " + s);
    return Integer(s);
  }
  throw InputError("expected an integer");
}

Json laurent_json(const LaurentPoly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back(Json::array({e, integer_json(c)}));
  return out;
}

LaurentPoly laurent_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("expected an array of [exponent, coefficient] pairs");
  LaurentPoly p;
  std::optional<int> previous;
  for (const Json& term : j) {
    if (!term.is_array() || term.size() != 2 || !term[0].is_number_integer())
      throw InputError("expected [exponent, coefficient]");
    const int e = term[0].get<int>();
    const Integer c = integer_from_json(term[1]);
    if (previous && e <= *previous) throw InputError("exponents must be strictly increasing");
    if (c == 0) throw InputError("zero coefficient in structured polynomial");
    previous = e;
    p.add_term(e, c);
  }
  return p;
}

Json homfly_json(const HomflyValue& h) {
  Json out = Json::array();
  for (const auto& [k, c] : h.terms()) out.push_back(Json::array({k.first, k.second, integer_json(c)}));
  return out;
}

HomflyValue homfly_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("expected an array of [v, z, coefficient] triples");
  HomflyValue::Terms terms;
  for (const Json& t : j) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() || !t[1].is_number_integer())
      throw InputError("expected [v, z, coefficient]");
    const Integer c = integer_from_json(t[2]);
    if (c == 0) throw InputError("zero coefficient in structured polynomial");
    if (!terms.emplace(HomflyValue::Key{t[0].get<int>(), t[1].get<int>()}, c).second)
      throw InputError("repeated monomial in structured polynomial");
  }
  return HomflyValue::from_map(std::move(terms));
}

Json presentation_json(const Presentation& p) {
  struct Visitor {
    Json operator()(const PDCode& d) const {
      Json xs = Json::array();
      for (const Crossing& x : d.crossings()) xs.push_back(x.arcs);
      return {{"kind", "pd"}, {"value", xs}, {"text", format_pd(d)}};
    }
    Json operator()(const BraidWord& w) const {
      return {{"kind", "braid"}, {"value", {{"strands", w.strand_count}, {"letters", w.letters}}}};
    }
    Json operator()(const Pretzel& k) const { return {{"kind", "pretzel"}, {"value", k.bands()}}; }
    Json operator()(const Twist& t) const { return {{"kind", "twist"}, {"value", 2 * t.m}}; }
  };
  Json out = std::visit(Visitor{}, p);
  if (!out.contains("text")) out["text"] = format_presentation(p);
  return out;
}

Presentation presentation_from_json(const Json& j) {
  try {
    const std::string kind = j.at("kind").get<std::string>();
    const Json& v = j.at("value");
    if (kind == "pd") {
      std::string text;
      for (const Json& x : v) {
        const auto a = x.get<std::array<int, 4>>();
        text += "X[" + std::to_string(a[0]) + "," + std::to_string(a[1]) + "," + std::to_string(a[2]) +
                "," + std::to_string(a[3]) + "] ";
      }
      return parse_pd(text);
    }
    if (kind == "braid") {
      std::string text = std::to_string(v.at("strands").get<int>()) + ":";
      for (int l : v.at("letters").get<std::vector<int>>()) text += " " + std::to_string(l);
      return parse_presentation(text, PresentationKind::braid);
    }
    if (kind == "pretzel") {
      const auto b = v.get<std::array<int, 3>>();
      return parse_presentation(std::to_string(b[0]) + "," + std::to_string(b[1]) + "," + std::to_string(b[2]),
                                PresentationKind::pretzel);
    }
    if (kind == "twist") return parse_presentation(std::to_string(v.get<int>()), PresentationKind::twist);
    throw InputError("unknown presentation kind: " + kind);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed structured presentation: ") + e.what());
  }
}

Json bound_report_json(const BoundReport& r) {
  Json rules = Json::array();
  for (Rule rule : r.rules_fired) rules.push_back(std::string(rule_name(rule)));
  Json bound = r.bound.is_infinite() ? Json("inf") : Json(r.bound.value());
  return {{"bound", bound}, {"rules", rules}, {"genus_assumption", r.genus_one_assumed},
          {"exhausted", r.exhausted}};
}

Json decomposition_json(const CoefficientDecomposition& dec) {
  Json coeffs = Json::array();
  for (const LaurentPoly& p : dec.coeffs) coeffs.push_back(laurent_json(p));
  return {{"components", dec.component_count}, {"coefficients", coeffs}};
}

Json certificate_json(const DecompositionCertificate& cert) {
  Json factors = Json::array();
  for (const LaurentPoly& f : cert.factors) factors.push_back(laurent_json(f));
  return {{"n", cert.n}, {"shifts", cert.shifts}, {"factors", factors}};
}

Json sequence_json(const SequenceCertificate& cert) {
  Json steps = Json::array();
  for (const Presentation& p : cert.steps) steps.push_back(format_presentation(p));
  Json changes = Json::array();
  for (const ChangeRecord& c : cert.changes)
    changes.push_back({{"band", c.band}, {"crossing", c.crossing_index}, {"from", c.from_count},
                       {"to", c.to_count}});
  return {{"steps", steps}, {"changes", changes}, {"claimed_length", cert.claimed_length}};
}

Json verification_json(const VerificationReport& report) {
  Json checks = Json::array();
  for (const CheckOutcome& c : report.checks)
    checks.push_back({{"step", c.step}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  Json failing = report.failing_step ? Json(*report.failing_step) : Json(nullptr);
  return {{"valid", report.valid}, {"failing_step", failing}, {"checks", checks}};
}

}  // namespace knotbound
