#pragma once

#include <json.hpp>

#include "gl2groth/brauer.hpp"
#include "gl2groth/serre.hpp"
#include "gl2groth/shift.hpp"

namespace gl2groth {

// JSON interchange formats.  VirtualRep:
//   {"p":3,"f":2,"terms":[{"a":1,"n":[2,0],"mult":-1}, ...]}
// with terms sorted by (a, n lexicographic).  Certificate:
//   {"p":3,"f":1,"sigma":{"a":0,"n":[1]},"e":2,"s":1,"t":14,
//    "steps":[{"kind":"HasseFq","i":0}, ...],"intermediates":[...]}

nlohmann::json weight_to_json(const Weight& w);
Weight weight_from_json(const BaseField& field, const nlohmann::json& j);

nlohmann::json virtual_rep_to_json(const VirtualRep& x);
VirtualRep virtual_rep_from_json(const nlohmann::json& j);

nlohmann::json sym_product_to_json(const SymProduct& sp);
SymProduct sym_product_from_json(const nlohmann::json& j);

nlohmann::json step_to_json(const ShiftStep& s);
ShiftStep step_from_json(const nlohmann::json& j);

nlohmann::json certificate_to_json(const ShiftCertificate& cert);
ShiftCertificate certificate_from_json(const nlohmann::json& j);

nlohmann::json profile_to_json(const RamificationProfile& profile);
RamificationProfile profile_from_json(const nlohmann::json& j);

nlohmann::json schedule_to_json(const LiftWeightSchedule& sched);

nlohmann::json brauer_table_to_json(const BrauerTable& table);
std::string brauer_table_to_csv(const BrauerTable& table);

}  // namespace gl2groth
