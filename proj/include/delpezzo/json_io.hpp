#pragma once

#include <json.hpp>

#include "delpezzo/blowup.hpp"
#include "delpezzo/bounds.hpp"
#include "delpezzo/discrepancy.hpp"
#include "delpezzo/lattice.hpp"
#include "delpezzo/optimizer.hpp"
#include "delpezzo/rational.hpp"
#include "delpezzo/verifier.hpp"

namespace delpezzo {

using Json = nlohmann::ordered_json;

/// Rationals travel as "p/q" strings ("p" when q = 1); integers are accepted on input.
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const SurfaceModel& s);
SurfaceModel surface_from_json(const Json& j);

Json to_json(const DivisorClass& d);
DivisorClass divisor_from_json(const Json& j);

/// {"n": int, "points": [{"loc": ..., "ref": int, "on_section": bool}]}, or
/// {"surface": "P2"}. Points flagged on_section are moved off S_n first.
BlowupConfig config_from_json(const Json& j);
Json to_json(const BlowupConfig& cfg);

/// Accepts a bare array of terms or {"boundary": [...]}.
std::vector<BoundaryTerm> boundary_from_json(const Json& j);
Json boundary_to_json(const std::vector<BoundaryTerm>& terms);

Json to_json(const NefVerdict& v);
Json to_json(const DiscrepancyReport& r);
Json to_json(const ExtremalDescriptor& d);
Json to_json(const BoundResult& b);
Json to_json(const CaseSpec& spec, const OptResult& r);
Json to_json(const SweepReport& r);
Json to_json(const ClaimReport& c);
Json to_json(const VerificationReport& r);

}  // namespace delpezzo
