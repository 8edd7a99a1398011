#ifndef MVI_JSON_IO_HPP
#define MVI_JSON_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "mvi/analysis.hpp"
#include "mvi/generators.hpp"
#include "mvi/graph.hpp"
#include "mvi/groebner.hpp"
#include "mvi/polyring.hpp"
#include "mvi/toric_set.hpp"

namespace mvi {

using json = nlohmann::ordered_json;

inline json to_json(const Binomial& b) {
  return json{{"plus", b.plus}, {"minus", b.minus}};
}

inline Binomial binomial_from_json(const json& j) {
  return Binomial(j.at("plus").get<ExponentVector>(), j.at("minus").get<ExponentVector>());
}

/// [{"coeff": c, "exp": [...]}, ...] with terms in the canonical storage
/// order; round-trips exactly.
inline json to_json(const Polynomial& p) {
  json arr = json::array();
  for (const auto& [e, c] : p.terms()) arr.push_back(json{{"coeff", c.value}, {"exp", e}});
  return arr;
}

inline Polynomial polynomial_from_json(const json& j, const FieldTable& field, int nvars) {
  Polynomial p(field, nvars);
  for (const json& term : j)
    p.add_term(term.at("exp").get<ExponentVector>(), field.element(term.at("coeff").get<int>()));
  return p;
}

inline json to_json(const MonomialOrder& ord) {
  return json{{"kind", ord.kind == OrderKind::Grevlex ? "grevlex" : "grlex"},
              {"priority", ord.priority}};
}

inline MonomialOrder order_from_json(const json& j) {
  MonomialOrder ord;
  ord.kind = j.at("kind").get<std::string>() == "grlex" ? OrderKind::Grlex : OrderKind::Grevlex;
  ord.priority = j.at("priority").get<std::vector<int>>();
  return ord;
}

inline json to_json(const GroebnerBasis& gb) {
  json basis = json::array();
  for (const Polynomial& p : gb.basis) basis.push_back(to_json(p));
  return json{{"schema", 1},
              {"order", to_json(gb.order)},
              {"reduced", gb.reduced},
              {"nvars", gb.nvars},
              {"basis", basis}};
}

inline json points_to_json(const ToricSet& X) {
  json pts = json::array();
  for (const ProjectivePoint& p : X.points()) {
    json row = json::array();
    for (FieldElement c : p.coords) row.push_back(c.value);
    pts.push_back(std::move(row));
  }
  return pts;
}

inline json to_json(const TypeIIIConfig& cfg) {
  return json{{"hub_a", cfg.hub_a},
              {"hub_b", cfg.hub_b},
              {"middle", cfg.middle},
              {"weights", cfg.weights}};
}

inline json to_json(const HilbertProfile& prof) {
  json j{{"dimension", prof.dimension}, {"values", prof.values}};
  if (prof.stable_value) j["stable_value"] = *prof.stable_value;
  if (prof.regularity) j["regularity"] = *prof.regularity;
  if (prof.multiplicity) j["multiplicity"] = *prof.multiplicity;
  return j;
}

inline json to_json(const VerificationReport& rep) {
  json j{{"schema", 1},
         {"parts", to_string(rep.partition)},
         {"q", rep.q},
         {"s", rep.s},
         {"expected_cardinality", rep.expected_card}};
  if (rep.cardinality) j["cardinality"] = *rep.cardinality;
  j["generators"] = json{{"type_i", rep.count_type_i},
                         {"type_ii", rep.count_type_ii},
                         {"type_iii", rep.count_type_iii}};
  j["checks"] = json{{"cardinality", to_string(rep.cardinality_ok)},
                     {"containment", to_string(rep.containment_ok)},
                     {"hilbert", to_string(rep.hilbert_ok)},
                     {"stabilization", to_string(rep.stabilization_ok)},
                     {"regularity", to_string(rep.regularity_ok)},
                     {"grs_bound", to_string(rep.grs_ok)}};
  if (rep.saturation_ok) j["checks"]["saturation"] = to_string(*rep.saturation_ok);
  json match = json::array();
  for (const HilbertMatchRow& row : rep.hilbert_match)
    match.push_back(json{{"degree", row.degree}, {"ideal", row.hf_ideal}, {"oracle", row.hf_oracle}});
  j["hilbert_match"] = std::move(match);
  j["regularity"] = json::object();
  j["regularity"]["formula"] = rep.regularity_formula_value;
  if (rep.regularity_oracle_value) j["regularity"]["oracle"] = *rep.regularity_oracle_value;
  if (rep.regularity_groebner_value) j["regularity"]["groebner"] = *rep.regularity_groebner_value;
  j["grs_bound"] = rep.grs_bound;
  j["ok"] = rep.all_ok();
  if (!rep.notes.empty()) j["notes"] = rep.notes;
  return j;
}

inline json to_json(const WitnessReport& rep) {
  json j{{"schema", 1},
         {"parts", to_string(rep.partition)},
         {"q", rep.q},
         {"witness", rep.witness},
         {"witness_degree", rep.witness_degree},
         {"regularity", rep.regularity},
         {"witness_survives", rep.witness_survives},
         {"hf_artinian_at_regularity", rep.hf_artinian_at_reg},
         {"hf_artinian_above", rep.hf_artinian_above},
         {"artinian_consistency", to_string(rep.artinian_consistency)}};
  if (rep.regularity_oracle_value) j["regularity_oracle"] = *rep.regularity_oracle_value;
  j["ok"] = rep.ok();
  return j;
}

inline json to_json(const CodeParams& cp) {
  json j{{"schema", 1},
         {"length", cp.length},
         {"dimension", cp.dimension},
         {"degree", cp.degree}};
  if (cp.min_distance) j["min_distance"] = *cp.min_distance;
  return j;
}

}  // namespace mvi

#endif
