#include "knotbound/skein.hpp"

#include <random>

#include "knotbound/errors.hpp"

namespace knotbound {

bool SkeinCache::lookup(const std::string& key, HomflyValue& out) const {
  std::shared_lock lock(mutex_);
  auto it = table_.find(key);
  if (it == table_.end()) return false;
  out = it->second;
  return true;
}

void SkeinCache::store(const std::string& key, const HomflyValue& value) {
  std::unique_lock lock(mutex_);
  table_.emplace(key, value);
}

std::size_t SkeinCache::size() const {
  std::shared_lock lock(mutex_);
  return table_.size();
}

HomflyValue unlink_value(int components) {
  // delta = (v^{-1} - v) z^{-1}
  const HomflyValue delta = HomflyValue::monomial(1, -1, -1) + HomflyValue::monomial(-1, 1, -1);
  HomflyValue out = 1;
  for (int i = 1; i < components; ++i) out = out * delta;
  return out;
}

namespace {

std::string cache_key(const PDCode& d) {
  std::string key = std::to_string(d.free_loops());
  for (const Crossing& x : d.crossings()) {
    key += x.over_forward ? '-' : '+';
    for (int a : x.arcs) {
      key += std::to_string(a);
      key += ',';
    }
  }
  return key;
}

class SkeinEngine {
 public:
  explicit SkeinEngine(const SkeinOptions& options)
      : options_(options), rng_(options.traversal_seed) {}

  HomflyValue eval(const PDCode& d) { return eval(d, choose_base_points(d)); }

 private:
  // Base arcs, one per crossing-carrying component, in visiting order. Kept
  // fixed along a chain of switches so that each switch makes progress.
  using BasePoints = std::vector<int>;

  BasePoints choose_base_points(const PDCode& d) {
    BasePoints bases;
    for (const auto& cycle : d.components()) bases.push_back(cycle.front());
    if (options_.traversal_seed == 0) return bases;
    for (std::size_t c = 0; c < bases.size(); ++c) {
      const auto& cycle = d.components()[c];
      bases[c] = cycle[std::uniform_int_distribution<std::size_t>(0, cycle.size() - 1)(rng_)];
    }
    std::shuffle(bases.begin(), bases.end(), rng_);
    return bases;
  }

  // First crossing met on its under-strand before its over-strand, or -1 if
  // the diagram is descending.
  static int branch_crossing(const PDCode& d, const BasePoints& bases) {
    std::vector<char> seen(d.size(), 0);
    for (int base : bases) {
      int arc = base;
      do {
        const int x = d.head_crossing(arc);
        if (!seen[x]) {
          if (d.enters_under(arc)) return x;
          seen[x] = 1;
        }
        arc = d.next_arc(arc);
      } while (arc != base);
    }
    return -1;
  }

  HomflyValue eval(const PDCode& d, const BasePoints& bases) {
    std::string key;
    if (options_.cache) {
      key = cache_key(d);
      HomflyValue hit;
      if (options_.cache->lookup(key, hit)) return hit;
    }
    HomflyValue result;
    const int x = branch_crossing(d, bases);
    if (x < 0) {
      result = unlink_value(d.component_count());
    } else {
      const PDCode switched = switch_crossing(d, x);
      const PDCode smoothed = smooth_crossing(d, x);
      const HomflyValue p_switched = eval(switched, bases);
      const HomflyValue p_smoothed = eval(smoothed, choose_base_points(smoothed));
      if (d.crossing(x).sign() > 0) {
        // P+ = v^2 P- + v z P0
        result = p_switched.scale_monomial(1, 2, 0);
        result.add_scaled(p_smoothed, 1, 1, 1);
      } else {
        // P- = v^{-2} P+ - v^{-1} z P0
        result = p_switched.scale_monomial(1, -2, 0);
        result.add_scaled(p_smoothed, -1, -1, 1);
      }
    }
    if (options_.cache) options_.cache->store(key, result);
    return result;
  }

  const SkeinOptions& options_;
  std::mt19937_64 rng_;
};

}  // namespace

HomflyValue homfly(const PDCode& d, const SkeinOptions& options) {
  if (d.size() > options.max_crossings)
    throw GuardError("diagram has " + std::to_string(d.size()) + " crossings, limit is " +
                     std::to_string(options.max_crossings));
  return SkeinEngine(options).eval(d);
}

HomflyValue homfly_of(const Presentation& p, const SkeinOptions& options) {
  return homfly(to_pd(p), options);
}

CoefficientDecomposition coefficient_polys(const HomflyValue& h, int n_components) {
  if (n_components < 1) throw InputError("component count must be positive");
  if (h.is_zero()) throw InvariantError("malformed HOMFLY value: zero");
  const HomflyValue normalized = h.scale_monomial(1, -(n_components - 1), n_components - 1);
  CoefficientDecomposition dec;
  dec.component_count = n_components;
  for (const auto& [key, c] : normalized.terms()) {
    const auto [ve, ze] = key;
    if (ze < 0 || ze % 2 != 0 || ve % 2 != 0)
      throw InvariantError("malformed HOMFLY value: term v^" + std::to_string(ve) + " z^" +
                           std::to_string(ze) + " after normalization for " +
                           std::to_string(n_components) + " components");
    const std::size_t i = static_cast<std::size_t>(ze / 2);
    if (dec.coeffs.size() <= i) dec.coeffs.resize(i + 1);
    dec.coeffs[i].add_term(ve, c);
  }
  if (dec.coeffs.front().is_zero()) throw InvariantError("malformed HOMFLY value: p^0 vanishes");
  if (n_components == 1 && (eval_one(dec.p0()) != 1 || deriv_one(dec.p0()) != 0))
    throw InvariantError("knot p^0 is not normalized: " + format(dec.p0()));
  return dec;
}

HomflyValue reassemble(const CoefficientDecomposition& dec) {
  HomflyValue out;
  const int shift = dec.component_count - 1;
  for (std::size_t i = 0; i < dec.coeffs.size(); ++i)
    for (const auto& [e, c] : dec.coeffs[i].terms())
      out += HomflyValue::monomial(c, e + shift, 2 * static_cast<int>(i) - shift);
  return out;
}

LaurentPoly conway(const HomflyValue& h) { return eval_v_one(h); }

Integer a2_of(const HomflyValue& h) { return conway(h).coeff(2); }

LaurentPoly pretzel_p0(int p, int q, int r) {
  LaurentPoly out;
  out.add_term(2 * (p + q + 1), 1);
  out.add_term(2 * (q + r + 1), 1);
  out.add_term(2 * (r + p + 1), 1);
  out.add_term(2 * (p + q + r + 1), -1);
  out.add_term(2 * (p + q + r + 2), -1);
  return out;
}

LaurentPoly twist_p0(int m) {
  LaurentPoly out;
  out.add_term(-2, 1);
  out.add_term(2 * m - 2, -1);
  out.add_term(2 * m, 1);
  return out;
}

}  // namespace knotbound
