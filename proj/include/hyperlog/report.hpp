#pragma once

#include "hyperlog/characters.hpp"
#include "hyperlog/expr_io.hpp"
#include "hyperlog/identities.hpp"

namespace hyperlog {

// JSON forms used by the CLI report schema. All numbers are rendered as
// decimal strings with an explicit digit count so reports are byte-stable.
json route_json(const identities::RouteStatus& r, unsigned digits);
json verification_json(const identities::VerificationRecord& rec, unsigned digits);
json validity_json(const identities::Validity& v);
json orbits_json(const characters::ExceptionalReport& rep);

std::string render_verification_text(const identities::VerificationRecord& rec,
                                     unsigned digits);

}  // namespace hyperlog
