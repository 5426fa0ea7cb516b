#pragma once

#include <nlohmann/json_fwd.hpp>

#include "conductor/extension.hpp"
#include "conductor/harness.hpp"
#include "conductor/ideal.hpp"
#include "conductor/semigroup.hpp"
#include "conductor/zset.hpp"

namespace conductor {

// Key order is fixed so that serialized output is byte-stable.
using ojson = nlohmann::ordered_json;

ojson to_json(const cofinite_set& a);          // {"min":..,"window":[..],"tail":..}
ojson to_json(const numerical_semigroup& s);   // {"gens":[..],"frobenius":..,"genus":..,"symmetric":..}
ojson to_json(const relative_ideal& e);        // {"base":[..],"min":..,"window":[..],"tail":..}
ojson to_json(const theorem_report& r);
ojson to_json(const census_record& r);

cofinite_set set_from_json(const ojson& j);
numerical_semigroup semigroup_from_json(const ojson& j);
relative_ideal ideal_from_json(const ojson& j);

}  // namespace conductor
