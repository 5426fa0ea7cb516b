#include "conductor/json_io.hpp"

#include <nlohmann/json.hpp>
#include <stdexcept>

namespace conductor {

ojson to_json(const cofinite_set& a) {
  return ojson{{"min", a.min_elt()}, {"window", a.window()}, {"tail", a.tail_bound()}};
}

ojson to_json(const numerical_semigroup& s) {
  return ojson{{"gens", s.generators()},
               {"frobenius", s.frobenius()},
               {"genus", s.genus()},
               {"symmetric", s.is_symmetric()}};
}

ojson to_json(const relative_ideal& e) {
  return ojson{{"base", e.base().generators()},
               {"min", e.carrier().min_elt()},
               {"window", e.carrier().window()},
               {"tail", e.carrier().tail_bound()}};
}

ojson to_json(const theorem_report& r) {
  ojson witnesses = ojson::array();
  for (const auto& w : r.witnesses) witnesses.push_back(to_json(w));
  return ojson{{"cond1m", r.cond1m},   {"cond2", r.cond2},
               {"cond3", r.cond3},     {"cond4m", r.cond4m},
               {"all_agree", r.all_agree}, {"witnesses", witnesses}};
}

ojson to_json(const census_record& r) {
  return ojson{{"base", r.base_gens},
               {"over", r.over_gens},
               {"base_frobenius", r.base_frobenius},
               {"base_genus", r.base_genus},
               {"over_frobenius", r.over_frobenius},
               {"over_genus", r.over_genus},
               {"base_symmetric", r.base_symmetric},
               {"over_symmetric", r.over_symmetric},
               {"conductor", to_json(r.conductor_set)},
               {"cond1m", r.cond1m},
               {"cond2", r.cond2},
               {"cond3", r.cond3},
               {"cond4m", r.cond4m},
               {"all_agree", r.all_agree},
               {"stable_ideals", r.stable_ideals},
               {"trace_ideals", r.trace_ideals},
               {"stable_trace_ideals", r.stable_trace_ideals},
               {"ulrich_ideals", r.ulrich_ideals}};
}

cofinite_set set_from_json(const ojson& j) {
  const auto window = j.at("window").get<std::vector<std::int64_t>>();
  const auto tail = j.at("tail").get<std::int64_t>();
  cofinite_set s = cofinite_set::make(window, tail);
  if (j.contains("min") && j.at("min").get<std::int64_t>() != s.min_elt())
    throw std::invalid_argument("set_from_json: min does not match the window");
  return s;
}

numerical_semigroup semigroup_from_json(const ojson& j) {
  return numerical_semigroup::from_generators(j.at("gens").get<std::vector<std::int64_t>>());
}

relative_ideal ideal_from_json(const ojson& j) {
  const numerical_semigroup base =
      numerical_semigroup::from_generators(j.at("base").get<std::vector<std::int64_t>>());
  return relative_ideal(base, set_from_json(j));
}

}  // namespace conductor
