#include "knotbound/cli.hpp"

#include <CLI11.hpp>
#include <optional>
#include <sstream>

#include "knotbound/acceptance.hpp"
#include "knotbound/errors.hpp"
#include "knotbound/json_io.hpp"
#include "knotbound/obstruct.hpp"
#include "knotbound/sequences.hpp"
#include "knotbound/skein.hpp"

namespace knotbound {

namespace {

// One presentation given by --pd/--braid/--pretzel/--twist (or the --target-
// variants for the second knot of gordian).
struct InputFlags {
  std::optional<std::string> pd, braid, pretzel, twist;

  void attach(CLI::App* app, const std::string& prefix, const std::string& what) {
    app->add_option("--" + prefix + "pd", pd, what + " as PD code");
    app->add_option("--" + prefix + "braid", braid, what + " as braid word \"s: i j ...\"");
    app->add_option("--" + prefix + "pretzel", pretzel, what + " as pretzel band counts a,b,c");
    app->add_option("--" + prefix + "twist", twist, what + " as twist knot, 2m half twists");
  }

  int given() const { return pd.has_value() + braid.has_value() + pretzel.has_value() + twist.has_value(); }

  Presentation get(const std::string& prefix) const {
    if (given() != 1)
      throw InputError("exactly one of --" + prefix + "pd, --" + prefix + "braid, --" + prefix + "pretzel, --" +
                       prefix + "twist is required");
    if (pd) return parse_presentation(*pd, PresentationKind::pd);
    if (braid) return parse_presentation(*braid, PresentationKind::braid);
    if (pretzel) return parse_presentation(*pretzel, PresentationKind::pretzel);
    return parse_presentation(*twist, PresentationKind::twist);
  }
};

bool is_family(const Presentation& p) {
  return std::holds_alternative<Pretzel>(p) || std::holds_alternative<Twist>(p);
}

struct Config {
  std::string format = "text";
  int max_crossings = 16;
  int n_max = 32;
  bool assert_genus_one = false;
  InputFlags input, target;
  std::optional<std::string> p0_text;
  int sign = +1;
  int n = 0;
  SearchBounds search;
};

std::string rules_text(const BoundReport& r) {
  std::string s = "[";
  for (std::size_t i = 0; i < r.rules_fired.size(); ++i) {
    if (i) s += ", ";
    s += rule_name(r.rules_fired[i]);
  }
  return s + "]";
}

class Runner {
 public:
  Runner(const Config& cfg, std::ostream& out) : cfg_(cfg), out_(out) {}

  int homfly_cmd() {
    const Presentation p = cfg_.input.get("");
    const HomflyValue h = homfly_of(p, skein());
    if (json()) {
      emit({{"input", presentation_json(p)}, {"homfly", homfly_json(h)}, {"text", format(h)}});
    } else {
      out_ << "P = " << format(h) << "\n";
    }
    return 0;
  }

  int p0_cmd() {
    const Presentation p = cfg_.input.get("");
    const PDCode d = to_pd(p);
    const auto dec = coefficient_polys(homfly(d, skein()), d.component_count());
    if (json()) {
      emit({{"input", presentation_json(p)}, {"decomposition", decomposition_json(dec)}});
    } else {
      out_ << "components: " << dec.component_count << "\n";
      for (std::size_t i = 0; i < dec.coeffs.size(); ++i) out_ << "p" << i << ": " << format(dec.coeffs[i]) << "\n";
    }
    return 0;
  }

  int bound_cmd() {
    Json input;
    const LaurentPoly p0 = knot_p0(input);
    const BoundReport theorem = theorem_bound(p0);
    const BoundReport refined = refined_bound(p0, cfg_.n_max);
    const BoundReport& best = refined.bound > theorem.bound ? refined : theorem;
    if (json()) {
      emit({{"input", input},
            {"p0", laurent_json(p0)},
            {"bound", bound_report_json(best)["bound"]},
            {"theorem", bound_report_json(theorem)},
            {"refined", bound_report_json(refined)}});
    } else {
      out_ << "p0: " << format(p0) << "\n";
      out_ << "bound " << best.bound.str() << " rules " << rules_text(best) << "\n";
      out_ << "theorem: " << theorem.bound.str() << " " << rules_text(theorem) << "\n";
      out_ << "refined: " << refined.bound.str() << " " << rules_text(refined)
           << (refined.exhausted ? " (n_max exhausted)" : "") << "\n";
      out_ << "genus one: assumed\n";
    }
    return 0;
  }

  int gordian_cmd() {
    const Presentation k = cfg_.input.get("");
    const Presentation k2 = cfg_.target.get("target-");
    if (cfg_.sign != 1 && cfg_.sign != -1) throw InputError("--sign must be +1 or -1");
    const auto [p0k, a2k] = knot_data(k);
    const auto [p0k2, a2k2] = knot_data(k2);
    const GordianResult r = gordian_one_test(p0k, p0k2, a2k, a2k2, cfg_.sign);
    if (json()) {
      emit({{"input", presentation_json(k)},
            {"target", presentation_json(k2)},
            {"sign", cfg_.sign},
            {"pass", r.pass},
            {"f", r.f ? laurent_json(*r.f) : Json(nullptr)},
            {"reason", r.reason}});
    } else {
      out_ << "distance-one test: " << (r.pass ? "pass" : "fail") << "\n";
      if (r.f) out_ << "f: " << format(*r.f) << "\n";
      out_ << "reason: " << r.reason << "\n";
    }
    return 0;
  }

  int sequence_cmd() {
    const Presentation p = cfg_.input.get("");
    SequenceCertificate cert;
    if (const auto* k = std::get_if<Pretzel>(&p)) {
      cert = pretzel_sequence(k->p, k->q, k->r);
    } else if (const auto* t = std::get_if<Twist>(&p)) {
      cert = twist_sequence(t->m);
    } else {
      throw InputError("sequence needs a --pretzel or --twist input");
    }
    VerifyOptions vo;
    vo.skein.max_crossings = std::max(cfg_.max_crossings, vo.skein.max_crossings);
    const VerificationReport report = verify_sequence(cert, vo);
    if (json()) {
      emit({{"sequence", sequence_json(cert)}, {"verification", verification_json(report)}});
    } else {
      for (std::size_t i = 0; i < cert.steps.size(); ++i) {
        out_ << i << ": " << format_presentation(cert.steps[i]);
        if (i < cert.changes.size())
          out_ << "  change band " << cert.changes[i].band << " crossing " << cert.changes[i].crossing_index << " ("
               << cert.changes[i].from_count << " -> " << cert.changes[i].to_count << ")";
        out_ << "\n";
      }
      out_ << "length: " << cert.claimed_length << "\n";
      out_ << "verified: " << (report.valid ? "yes" : "no") << "\n";
      for (const auto& c : report.checks)
        if (!c.passed) out_ << "failed check " << c.name << " at step " << c.step << ": " << c.detail << "\n";
    }
    if (!report.valid) throw InvariantError("generated sequence failed verification");
    return 0;
  }

  int decompose_cmd() {
    Json input;
    const LaurentPoly p0 = raw_p0(input);
    if (cfg_.n < 1) throw InputError("--n must be at least 1");
    const DecompositionSearchResult r = decomposition_search(p0, cfg_.n, cfg_.search);
    if (json()) {
      emit({{"input", input},
            {"p0", laurent_json(p0)},
            {"n", cfg_.n},
            {"candidates", r.candidate_count},
            {"search_size", r.search_size},
            {"certificate", r.certificate ? certificate_json(*r.certificate) : Json(nullptr)}});
    } else {
      out_ << "p0: " << format(p0) << "\n";
      out_ << "searched " << r.search_size << " tuples of " << r.candidate_count << " candidates\n";
      if (!r.certificate) {
        out_ << "no certificate within bounds\n";
      } else {
        out_ << "certificate n = " << r.certificate->n << "\n";
        for (std::size_t i = 0; i < r.certificate->factors.size(); ++i)
          out_ << "  v^" << 2 * r.certificate->shifts[i] << " * (" << format(r.certificate->factors[i]) << ")^2\n";
      }
    }
    return 0;
  }

  int selftest_cmd() {
    std::ostringstream sink;
    const auto results = run_acceptance({}, json() ? &sink : &out_);
    bool ok = true;
    Json list = Json::array();
    for (const auto& r : results) {
      ok = ok && r.passed;
      list.push_back({{"id", r.id},
                      {"title", r.title},
                      {"passed", r.passed},
                      {"seconds", r.seconds},
                      {"limit_seconds", r.limit_seconds},
                      {"detail", r.detail}});
    }
    if (json()) emit({{"passed", ok}, {"criteria", list}});
    else out_ << (ok ? "all criteria passed" : "some criteria failed") << "\n";
    return ok ? 0 : 3;
  }

 private:
  bool json() const { return cfg_.format == "json"; }
  void emit(const Json& j) { out_ << j.dump(2) << "\n"; }
  SkeinOptions skein() const { return {.max_crossings = cfg_.max_crossings}; }

  // p0 of a knot given as a presentation, or directly with --p0.
  LaurentPoly raw_p0(Json& input) {
    if (cfg_.p0_text) {
      if (cfg_.input.given() != 0) throw InputError("--p0 cannot be combined with a presentation");
      input = {{"kind", "p0"}, {"text", *cfg_.p0_text}};
      return parse_laurent(*cfg_.p0_text, 'v');
    }
    const Presentation p = cfg_.input.get("");
    input = presentation_json(p);
    return knot_data(p).first;
  }

  // As raw_p0, for commands whose conclusions need the genus one hypothesis.
  LaurentPoly knot_p0(Json& input) {
    const bool family = !cfg_.p0_text && cfg_.input.given() == 1 && is_family(cfg_.input.get(""));
    if (!family && !cfg_.assert_genus_one)
      throw InputError("the bound holds only for genus one knots; pass --assert-genus-one for this input");
    return raw_p0(input);
  }

  std::pair<LaurentPoly, Integer> knot_data(const Presentation& p) {
    if (!is_family(p) && !cfg_.assert_genus_one)
      throw InputError("the test holds only for genus one knots; pass --assert-genus-one for this input");
    const PDCode d = to_pd(p);
    if (d.component_count() != 1) throw InputError("input is a link, not a knot");
    const HomflyValue h = homfly(d, skein());
    const LaurentPoly nabla = conway(h);
    if (!nabla.is_zero() && bounds(nabla).max_exp > 2)
      throw InputError("Conway polynomial " + format(nabla, 'z') + " has degree above 2, so the genus exceeds one");
    return {coefficient_polys(h, 1).p0(), a2_of(h)};
  }

  const Config& cfg_;
  std::ostream& out_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact HOMFLY polynomials and positive unknotting sequence bounds for genus one knots"};
  app.require_subcommand(1);
  Config cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--max-crossings", cfg.max_crossings, "crossing limit of the skein recursion")
        ->check(CLI::NonNegativeNumber);
  };
  auto* homfly_sub = app.add_subcommand("homfly", "HOMFLY polynomial of a knot or link");
  auto* p0_sub = app.add_subcommand("p0", "coefficient polynomials p^i");
  auto* bound_sub = app.add_subcommand("bound", "lower bounds from the HOMFLY clauses and refined search");
  auto* gordian_sub = app.add_subcommand("gordian", "distance-one test between two knots");
  auto* sequence_sub = app.add_subcommand("sequence", "unknotting sequence of a pretzel or twist knot, verified");
  auto* decompose_sub = app.add_subcommand("decompose", "bounded search for a sum-of-squares certificate");
  auto* selftest_sub = app.add_subcommand("selftest", "run the acceptance suite");

  for (auto* sub : {homfly_sub, p0_sub, bound_sub, gordian_sub, sequence_sub, decompose_sub}) {
    common(sub);
    cfg.input.attach(sub, "", "input knot");
  }
  common(selftest_sub);
  for (auto* sub : {bound_sub, gordian_sub})
    sub->add_flag("--assert-genus-one", cfg.assert_genus_one, "declare that raw inputs have genus one");
  for (auto* sub : {bound_sub, decompose_sub})
    sub->add_option("--p0", cfg.p0_text, "zeroth coefficient polynomial, e.g. \"2v^2 - v^4\"");
  bound_sub->add_option("--n-max", cfg.n_max, "largest sequence length tried by the refined bound")
      ->check(CLI::NonNegativeNumber);
  cfg.target.attach(gordian_sub, "target-", "second knot");
  gordian_sub->add_option("--sign", cfg.sign, "sign of the changed crossing, 1 or -1");
  decompose_sub->add_option("--n", cfg.n, "sequence length")->required();
  decompose_sub->add_option("--shift-lo", cfg.search.shift_lo, "lowest shift k");
  decompose_sub->add_option("--shift-hi", cfg.search.shift_hi, "highest shift k");
  decompose_sub->add_option("--deg-span", cfg.search.deg_span, "factor exponents lie in [-span, span]");
  decompose_sub->add_option("--coeff-bound", cfg.search.coeff_bound, "factor coefficient bound");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  Runner run(cfg, out);
  try {
    if (*homfly_sub) return run.homfly_cmd();
    if (*p0_sub) return run.p0_cmd();
    if (*bound_sub) return run.bound_cmd();
    if (*gordian_sub) return run.gordian_cmd();
    if (*sequence_sub) return run.sequence_cmd();
    if (*decompose_sub) return run.decompose_cmd();
    return run.selftest_cmd();
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return 1;
  } catch (const GuardError& e) {
    err << "guard: " << e.what() << "\n";
    return 2;
  } catch (const InvariantError& e) {
    err << "invariant failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace knotbound
