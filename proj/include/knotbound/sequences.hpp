#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knotbound/knotio.hpp"
#include "knotbound/skein.hpp"

namespace knotbound {

/// One positive-to-negative crossing change inside a twist band.
struct ChangeRecord {
  int band = 0;            // pretzel band 0..2; 0 for the twist region of T_{2m}
  int crossing_index = 0;  // switched crossing of to_pd(step before the change)
  int from_count = 0;      // signed crossing count of the band before
  int to_count = 0;        // and after
};

/// K = steps.front() -> ... -> steps.back() = unknot, one change per step.
struct SequenceCertificate {
  std::vector<Presentation> steps;
  std::vector<ChangeRecord> changes;
  int claimed_length = 0;
};

/// Reduces the two bands with the smallest parameter sum (ties: band pairs in
/// order (0,1), (0,2), (1,2)) to a single crossing, one change at a time, then
/// flips the first-reduced band from 1 to -1. Length min{p+q, q+r, r+p} + 1.
/// Requires p, q, r >= 1.
SequenceCertificate pretzel_sequence(int p, int q, int r);

/// T_{2m} -> T_{2m-2} -> ... -> T_0, length m. Requires m >= 1.
SequenceCertificate twist_sequence(int m);

struct CheckOutcome {
  int step = -1;  // index of the change, or -1 for certificate-level checks
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  bool valid = false;
  std::optional<int> failing_step;
  std::vector<CheckOutcome> checks;
};

struct VerifyOptions {
  SkeinOptions skein{.max_crossings = 32};
};

/// Checks, for every step: the change record matches the presentations
/// (exactly one band count drops by 2); the switched crossing is the top of
/// that band and is positive; switching it reproduces the next presentation's
/// HOMFLY polynomial; both presentations are two-band pretzel or twist forms
/// (genus <= 1 by construction) with Conway degree <= 2. Finally the last
/// presentation must have HOMFLY polynomial 1.
VerificationReport verify_sequence(const SequenceCertificate& cert, const VerifyOptions& options = {});

}  // namespace knotbound
