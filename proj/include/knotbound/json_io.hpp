#pragma once

#include <json.hpp>

#include "knotbound/knotio.hpp"
#include "knotbound/obstruct.hpp"
#include "knotbound/poly.hpp"
#include "knotbound/sequences.hpp"
#include "knotbound/skein.hpp"

namespace knotbound {

using Json = nlohmann::ordered_json;

// Integers that fit in 64 bits are JSON numbers, larger ones decimal strings.
Json integer_json(const Integer& n);
Integer integer_from_json(const Json& j);

// [[exponent, coefficient], ...] sorted by exponent.
Json laurent_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);

// [[v-exponent, z-exponent, coefficient], ...] sorted lexicographically.
Json homfly_json(const HomflyValue& h);
HomflyValue homfly_from_json(const Json& j);

// {"kind": "pd", "value": [[a,b,c,d], ...]}, {"kind": "braid", "value":
// {"strands": s, "letters": [...]}}, {"kind": "pretzel", "value": [3,3,3]},
// {"kind": "twist", "value": 2m}.
Json presentation_json(const Presentation& p);
Presentation presentation_from_json(const Json& j);

// {"bound": "inf" | n, "rules": [...], "genus_assumption": bool, "exhausted": bool}
Json bound_report_json(const BoundReport& r);

Json decomposition_json(const CoefficientDecomposition& dec);
Json certificate_json(const DecompositionCertificate& cert);
Json sequence_json(const SequenceCertificate& cert);
Json verification_json(const VerificationReport& report);

}  // namespace knotbound
