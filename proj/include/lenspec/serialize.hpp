#pragma once

#include "lenspec/isospec.hpp"

#include <json.hpp>

namespace lenspec {

using ordered_json = nlohmann::ordered_json;

// IntPoly <-> JSON array of decimal strings, index = degree.  The zero
// polynomial is the empty array.  Round-trips are bit-exact.
ordered_json poly_to_json(const IntPoly& p);
IntPoly poly_from_json(const nlohmann::json& j);

// RationalFunction <-> {"num": [...], "den": [...], "zpow": int}.
ordered_json rational_to_json(const RationalFunction& f);
RationalFunction rational_from_json(const nlohmann::json& j);

// PhiProfile <-> {"schema":1,"q":..,"n":..,"phi":[[...], ...]}.
ordered_json phi_profile_to_json(const PhiProfile& P);
PhiProfile phi_profile_from_json(const nlohmann::json& j);

// LensParams <-> {"q": int, "s": [int, ...]}.
ordered_json lens_to_json(const LensParams& L);
LensParams lens_from_json(const nlohmann::json& j);

// FamilyReport -> {"q":..,"n":..,"families":[{"members":[..],"I":[..]}]}.
ordered_json family_report_to_json(const FamilyReport& r);

} // namespace lenspec
