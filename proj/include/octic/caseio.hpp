#pragma once

#include <json.hpp>
#include <string>

#include "octic/family.hpp"
#include "octic/twist.hpp"

namespace octic {

using Json = nlohmann::json;

// {"name": ..., "planes": [[c0,c1,c2,c3] x 8]}; coefficients are strings in
// the A,B grammar or plain JSON integers.
Arrangement arrangement_from_json(const Json& j);
Arrangement load_arrangement(const std::string& path);

// {"name", "arrangement": <inline|"EXTERNAL"|relative path>,
//  "map": {"matrix": [[..] x 4], "u_coeff": ...}, "g", "tau0", "form", "note"?}
FamilyCase case_from_json(const Json& j, const std::string& base_dir);
FamilyCase load_case(const std::string& path);

// {"name", "src": <arrangement ref>, "dst": <arrangement ref>,
//  "map": {"matrix", "u_coeff"}, "expected_class"?}
TwistCase load_twist_case(const std::string& path);

Json certificate_to_json(const Certificate& cert);

Json load_json_file(const std::string& path);

}  // namespace octic
