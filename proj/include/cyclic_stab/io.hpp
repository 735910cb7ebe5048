#pragma once
#include <json.hpp>
#include <string>
#include <vector>

#include "cyclic_stab/deform.hpp"

namespace cstab {

using json = nlohmann::ordered_json;

json to_json(const CategoryPresentation& c);
// Reattaches the backend oracles when the document names a catalog source.
CategoryPresentation presentation_from_json(const json& j, bool attach = true);

json to_json(const ChargeTriple& r);
ChargeTriple triple_from_json(const json& j);

json to_json(const HNCertificate& h);
HNCertificate certificate_from_json(const json& j, const CategoryPresentation& c);

json to_json(const StabilityCondition& s);
StabilityCondition stability_from_json(const json& j, const CategoryPresentation& c);

json path_to_json(const ChargePath& p);
ChargePath path_from_json(const json& j);
json loops_to_json(const std::vector<ChargePath>& loops);
std::vector<ChargePath> loops_from_json(const json& j);

// Parse failures and missing files throw DocumentError.
json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace cstab
