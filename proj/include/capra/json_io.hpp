#pragma once

#include "capra/decision.hpp"
#include "capra/oracle.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace capra {

using Json = nlohmann::json;

Json rat_to_json(const Rat& r);
Rat rat_from_json(const Json& j);

Json vecr_to_json(const VecR& v);
Json vecd_to_json(const VecD& v);

Json norm_to_json(const SourceNorm& n);
SourceNorm norm_from_json(const Json& j);

Json sphere_set_to_json(const SphereSet& s);
Json certificate_to_json(const Certificate& c);
Json conditions_to_json(const Conditions& c);
Json oracle_to_json(const OracleResult& o);

Json report_to_json(const DecisionReport& r, const std::string& label, std::uint64_t seed,
                    const std::optional<OracleResult>& oracle);

/// Rejects keys outside the allowed list (strict schemas).
void check_keys(const Json& j, std::initializer_list<const char*> allowed, const std::string& context);

/// Stable serialization: nlohmann objects iterate keys in sorted order, so a
/// fixed indent yields byte-identical output for equal content.
std::string dump_json(const Json& j);

}  // namespace capra
