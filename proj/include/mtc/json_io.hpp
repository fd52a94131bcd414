#pragma once

#include <string>

#include "json.hpp"

#include "mtc/modular_data.hpp"
#include "mtc/orbifold.hpp"

namespace mtc {

using Json = nlohmann::json;

// {"labels":[...], "vacuum":int, "S":[[[re,im],...],...],
//  "weights":["0","1/8",...]?, "central_charge":"1"?, "tolerance":float?}
ModularData modular_data_from_json(const Json& j);
Json modular_data_to_json(const ModularData& md);

// {"type":"cyclic","order":T} or {"type":"table","mul":[[...]]}
FiniteGroup group_from_json(const Json& j);
Json group_to_json(const FiniteGroup& g);

// {"n":int, "exp":[[...]]}
TwoCocycle cocycle_from_json(const Json& j);

// {"rows":[[[re,im],...],...]}
std::vector<ProjectiveCharacter> character_table_from_json(const Json& j);

// {"group":{...},
//  "sectors":{"<elem>":[{"label":str,"qdim":f?,"S_MV":[re,im]?,"orbit":int}]},
//  "orbits":[{"id":int,"stabilizer_order":int,"irrep_dims":[...],"stabilizer":[...]?}],
//  "action_on_untwisted":{"<elem>":[perm]}}
OrbifoldDescriptor descriptor_from_json(const Json& j);
Json descriptor_to_json(const OrbifoldDescriptor& d);

Json validation_report_to_json(const ValidationReport& rep);
Json identity_report_to_json(const IdentityReport& rep);
Json descriptor_report_to_json(const DescriptorReport& rep);

// Parses a file, turning stream problems and syntax errors (with line and
// column) into StructuralError.
Json load_json_file(const std::string& path);

} // namespace mtc
