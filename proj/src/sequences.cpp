#include "knotbound/sequences.hpp"

#include <algorithm>
#include <map>

#include "knotbound/errors.hpp"

namespace knotbound {

namespace {

// Signed band crossing counts of a family presentation; the twist region of
// T_{2m} is band 0.
std::optional<std::array<int, 3>> family_counts(const Presentation& p) {
  if (const auto* k = std::get_if<Pretzel>(&p)) return k->bands();
  if (const auto* t = std::get_if<Twist>(&p)) return twist_bands(t->m);
  return std::nullopt;
}

Presentation with_counts(const Presentation& like, const std::array<int, 3>& counts) {
  if (std::holds_alternative<Twist>(like)) return Twist{counts[0] / 2};
  return Pretzel{(counts[0] - 1) / 2, (counts[1] - 1) / 2, (counts[2] - 1) / 2};
}

void append_change(SequenceCertificate& cert, int band, int to_count) {
  const Presentation& last = cert.steps.back();
  auto counts = *family_counts(last);
  ChangeRecord change;
  change.band = band;
  change.crossing_index = pretzel_band_top(counts, band);
  change.from_count = counts[band];
  change.to_count = to_count;
  counts[band] = to_count;
  cert.changes.push_back(change);
  cert.steps.push_back(with_counts(last, counts));
}

}  // namespace

SequenceCertificate pretzel_sequence(int p, int q, int r) {
  if (p < 1 || q < 1 || r < 1) throw InputError("pretzel sequence needs p, q, r >= 1");
  const std::array<int, 3> params{p, q, r};
  const std::array<std::pair<int, int>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
  auto best = pairs[0];
  for (const auto& pr : pairs)
    if (params[pr.first] + params[pr.second] < params[best.first] + params[best.second]) best = pr;

  SequenceCertificate cert;
  cert.steps.push_back(Pretzel{p, q, r});
  for (int band : {best.first, best.second})
    for (int a = params[band]; a > 0; --a) append_change(cert, band, 2 * a - 1);
  append_change(cert, best.first, -1);
  cert.claimed_length = static_cast<int>(cert.changes.size());
  return cert;
}

SequenceCertificate twist_sequence(int m) {
  if (m < 1) throw InputError("twist sequence needs m >= 1");
  SequenceCertificate cert;
  cert.steps.push_back(Twist{m});
  for (int k = m; k > 0; --k) append_change(cert, 0, 2 * (k - 1));
  cert.claimed_length = m;
  return cert;
}

VerificationReport verify_sequence(const SequenceCertificate& cert, const VerifyOptions& options) {
  VerificationReport report;
  std::map<std::string, HomflyValue> memo;
  auto homfly_cached = [&](const PDCode& d) {
    const std::string key = format_pd(d) + "|" + std::to_string(d.free_loops());
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    return memo.emplace(key, homfly(d, options.skein)).first->second;
  };
  auto record = [&](int step, std::string name, bool passed, std::string detail) {
    report.checks.push_back({step, std::move(name), passed, std::move(detail)});
    if (!passed && !report.failing_step) report.failing_step = step;
  };
  // Runs one check; an exception from malformed data counts as a failure.
  auto check = [&](int step, const std::string& name, auto&& body) {
    try {
      std::string detail;
      const bool ok = body(detail);
      record(step, name, ok, detail);
    } catch (const GuardError&) {
      throw;
    } catch (const std::exception& e) {
      record(step, name, false, e.what());
    }
  };

  const int steps = static_cast<int>(cert.steps.size());
  check(-1, "length", [&](std::string& detail) {
    detail = "claimed " + std::to_string(cert.claimed_length) + ", changes " +
             std::to_string(cert.changes.size()) + ", presentations " + std::to_string(steps);
    return steps >= 1 && cert.claimed_length == static_cast<int>(cert.changes.size()) &&
           steps == cert.claimed_length + 1;
  });

  auto genus_check = [&](int step, const Presentation& p) {
    check(step, "structural-genus", [&](std::string& detail) {
      detail = format_presentation(p);
      return family_counts(p).has_value();
    });
    check(step, "conway-degree", [&](std::string& detail) {
      const LaurentPoly nabla = conway(homfly_cached(to_pd(p)));
      detail = format(nabla, 'z');
      return nabla.is_zero() || bounds(nabla).max_exp <= 2;
    });
  };
  if (steps >= 1) genus_check(0, cert.steps.front());

  const int changes = std::min(static_cast<int>(cert.changes.size()), steps - 1);
  for (int i = 0; i < changes; ++i) {
    const Presentation& before = cert.steps[i];
    const Presentation& after = cert.steps[i + 1];
    const ChangeRecord& change = cert.changes[i];

    check(i, "parameter-delta", [&](std::string& detail) {
      const auto from = family_counts(before);
      const auto to = family_counts(after);
      if (!from || !to || before.index() != after.index()) {
        detail = "not a family step";
        return false;
      }
      int differing = 0;
      for (int j = 0; j < 3; ++j) differing += (*from)[j] != (*to)[j];
      const int band = change.band;
      if (band < 0 || band > 2) {
        detail = "band out of range";
        return false;
      }
      detail = "band " + std::to_string(band) + ": " + std::to_string((*from)[band]) + " -> " +
               std::to_string((*to)[band]);
      return differing == 1 && (*to)[band] - (*from)[band] == -2 &&
             change.from_count == (*from)[band] && change.to_count == (*to)[band];
    });

    check(i, "positive-crossing", [&](std::string& detail) {
      const auto from = family_counts(before);
      if (!from) return false;
      const PDCode d = to_pd(before);
      const int expected = pretzel_band_top(*from, change.band);
      const int sign = crossing_sign(d, change.crossing_index);
      detail = "crossing " + std::to_string(change.crossing_index) + " sign " + std::to_string(sign);
      return change.crossing_index == expected && sign == +1;
    });

    check(i, "realized-switch", [&](std::string& detail) {
      const PDCode switched = switch_crossing(to_pd(before), change.crossing_index);
      const bool same = homfly_cached(switched) == homfly_cached(to_pd(after));
      detail = same ? "switched diagram matches next step" : "switched diagram differs from next step";
      return same;
    });

    genus_check(i + 1, after);
  }

  if (steps >= 1) {
    check(steps - 2, "unknot-endpoint", [&](std::string& detail) {
      const HomflyValue h = homfly_cached(to_pd(cert.steps.back()));
      detail = format(h);
      return h == HomflyValue(1);
    });
  }
  report.valid = !report.failing_step.has_value() &&
                 std::all_of(report.checks.begin(), report.checks.end(),
                             [](const CheckOutcome& c) { return c.passed; });
  return report;
}

}  // namespace knotbound
