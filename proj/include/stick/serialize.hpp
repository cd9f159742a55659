#pragma once

// Stable JSON shapes for certificates and verdicts. Arbitrary-precision
// integers are written as decimal strings so no value is ever rounded.

#include <json.hpp>

#include "stick/norm_solver.hpp"
#include "stick/stickelberger.hpp"
#include "stick/zlattice.hpp"

namespace stick {

using Json = nlohmann::ordered_json;

Json to_json(const SolveOutcome& o);
Json to_json(const MembershipResult& r);
Json to_json(const ResidueGenerationVerdict& v);
Json to_json(const NormVerdict& v);

SolveOutcome solve_outcome_from_json(const Json& j);
MembershipResult membership_from_json(const Json& j);
ResidueGenerationVerdict verdict_from_json(const Json& j);
NormVerdict norm_verdict_from_json(const Json& j);

/// Serialized text with a trailing newline.
std::string dump(const Json& j);

}  // namespace stick
