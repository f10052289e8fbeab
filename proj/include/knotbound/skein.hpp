#pragma once

#include <cstdint>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "knotbound/knotio.hpp"
#include "knotbound/poly.hpp"

namespace knotbound {

/// Memo table for skein values keyed by PD text. Safe for concurrent use.
class SkeinCache {
 public:
  bool lookup(const std::string& key, HomflyValue& out) const;
  void store(const std::string& key, const HomflyValue& value);
  std::size_t size() const;

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, HomflyValue> table_;
};

struct SkeinOptions {
  int max_crossings = 16;
  // Optional memo shared across calls; nullptr disables caching.
  SkeinCache* cache = nullptr;
  // 0: base point at the lowest arc of each component, components visited by
  // lowest arc. Any other value picks base points and component order
  // pseudo-randomly from the seed at every recursion node. The result does not
  // depend on the choice.
  std::uint64_t traversal_seed = 0;
};

/// HOMFLY polynomial with v^{-1} P(K+) - v P(K-) = z P(K0) and P(unknot) = 1.
/// Throws GuardError when the diagram has more than max_crossings crossings.
HomflyValue homfly(const PDCode& d, const SkeinOptions& options = {});
HomflyValue homfly_of(const Presentation& p, const SkeinOptions& options = {});

/// Value of the c-component unlink: ((v^{-1} - v) z^{-1})^{c-1}.
HomflyValue unlink_value(int components);

/// P(v, z) = (v^{-1} z)^{1-c} sum_i p^i(v) z^{2i}.
struct CoefficientDecomposition {
  int component_count = 1;
  std::vector<LaurentPoly> coeffs;

  const LaurentPoly& p0() const { return coeffs.front(); }
};

/// Regroups a HOMFLY value by z-power. Throws InvariantError ("malformed
/// HOMFLY value") if the value does not have the shape forced by the skein
/// relation for that many components, or if a knot's p^0 is not normalized
/// (p^0(1) = 1, p^0'(1) = 0).
CoefficientDecomposition coefficient_polys(const HomflyValue& h, int n_components);

/// Inverse of coefficient_polys.
HomflyValue reassemble(const CoefficientDecomposition& dec);

/// Conway polynomial (in z) of a knot: the v = 1 specialization.
LaurentPoly conway(const HomflyValue& h);
/// z^2 coefficient of the Conway polynomial.
Integer a2_of(const HomflyValue& h);

/// Zeroth coefficient polynomial of P(2p+1, 2q+1, 2r+1):
/// v^{2(p+q+1)} + v^{2(q+r+1)} + v^{2(r+p+1)} - v^{2(p+q+r+1)} - v^{2(p+q+r+2)}.
LaurentPoly pretzel_p0(int p, int q, int r);

/// Zeroth coefficient polynomial of T_{2m}: v^{-2} - v^{2m-2} + v^{2m}.
LaurentPoly twist_p0(int m);

}  // namespace knotbound
