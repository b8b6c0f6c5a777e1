#include "exlab/io.hpp"

#include "exlab/error.hpp"

namespace exlab {

namespace {

const Json& field(const Json& json, const char* name, const std::string& where) {
  if (!json.is_object()) throw Error(where + ": expected a JSON object");
  const auto it = json.find(name);
  if (it == json.end()) throw Error(where + ": missing field '" + name + "'");
  return *it;
}

std::size_t as_index(const Json& json, const std::string& where) {
  if (!json.is_number_integer() || json.get<std::int64_t>() < 0) {
    throw Error(where + ": expected a non-negative integer");
  }
  return json.get<std::size_t>();
}

std::vector<std::size_t> as_index_list(const Json& json, const std::string& where) {
  if (!json.is_array()) throw Error(where + ": expected an array");
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < json.size(); ++k) {
    out.push_back(as_index(json[k], where + "[" + std::to_string(k) + "]"));
  }
  return out;
}

Rational parse_probability(const Json& json, const std::string& where) {
  try {
    if (json.is_string()) return Rational::parse(json.get<std::string>());
    if (json.is_number_integer()) return Rational(json.get<std::int64_t>());
    if (json.is_object()) return rational_from_json(json);
  } catch (const Error& e) {
    throw Error(where + ": " + e.what());
  }
  throw Error(where + ": expected a rational");
}

Json certificate_json(const PackingCertificate& cert) {
  Json sets = Json::array();
  for (std::size_t s = 0; s < cert.constraint_sets.size(); ++s) {
    sets.push_back({{"set", cert.constraint_sets[s]}, {"multiplier", to_json(cert.set_multipliers[s])}});
  }
  return sets;
}

Json rational_list(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_json(v));
  return out;
}

}  // namespace

Json to_json(const Rational& value) {
  return {{"num", value.numerator_string()}, {"den", value.denominator_string()}};
}

Rational rational_from_json(const Json& json) {
  const auto part = [&](const char* name) {
    const Json& v = field(json, name, "rational");
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
    throw Error(std::string("rational: field '") + name + "' must be a decimal string");
  };
  return Rational::parse(part("num") + "/" + part("den"));
}

Json to_json(const RootValue& value) { return {{"base", to_json(value.base())}, {"root", value.root()}}; }

Json to_json(const SimplicialComplex& complex) {
  Json json;
  json["n_vertices"] = complex.n_vertices();
  json["facets"] = complex.facets();
  if (complex.has_labels()) json["labels"] = complex.labels();
  return json;
}

SimplicialComplex complex_from_json(const Json& json) {
  const std::size_t n = as_index(field(json, "n_vertices", "complex"), "complex.n_vertices");
  const Json& facets_json = field(json, "facets", "complex");
  if (!facets_json.is_array()) throw Error("complex.facets: expected an array");
  std::vector<VertexSet> facets;
  for (std::size_t f = 0; f < facets_json.size(); ++f) {
    facets.push_back(as_index_list(facets_json[f], "complex.facets[" + std::to_string(f) + "]"));
  }
  std::vector<std::string> labels;
  if (const auto it = json.find("labels"); it != json.end()) {
    if (!it->is_array()) throw Error("complex.labels: expected an array of strings");
    for (std::size_t k = 0; k < it->size(); ++k) {
      if (!(*it)[k].is_string()) throw Error("complex.labels[" + std::to_string(k) + "]: expected a string");
      labels.push_back((*it)[k].get<std::string>());
    }
  }
  return SimplicialComplex::raw(n, std::move(facets), std::move(labels));
}

Json to_json(const Behavior& behavior) {
  const BoxScenario& scenario = behavior.scenario();
  Json json;
  json["parties"] = scenario.parties();
  json["settings"] = scenario.settings_per_party();
  json["outcomes"] = scenario.outcomes;
  json["boxes"] = scenario.box_sizes;
  Json table = Json::array();
  for (const auto& [event, p] : behavior.table()) {
    table.push_back({{"settings", event.settings}, {"outcomes", event.outcomes}, {"p", p.to_string()}});
  }
  json["table"] = std::move(table);
  return json;
}

Behavior behavior_from_json(const Json& json) {
  BoxScenario scenario;
  const std::size_t parties = as_index(field(json, "parties", "behavior"), "behavior.parties");
  const auto settings = as_index_list(field(json, "settings", "behavior"), "behavior.settings");
  const Json& outcomes = field(json, "outcomes", "behavior");
  if (settings.size() != parties) throw Error("behavior.settings: expected one entry per party");
  if (!outcomes.is_array() || outcomes.size() != parties) {
    throw Error("behavior.outcomes: expected one array per party");
  }
  for (std::size_t p = 0; p < parties; ++p) {
    auto row = as_index_list(outcomes[p], "behavior.outcomes[" + std::to_string(p) + "]");
    if (row.size() != settings[p]) {
      throw Error("behavior.outcomes[" + std::to_string(p) + "]: expected one count per setting");
    }
    scenario.outcomes.push_back(std::move(row));
  }
  if (const auto it = json.find("boxes"); it != json.end()) {
    scenario.box_sizes = as_index_list(*it, "behavior.boxes");
  } else {
    scenario.box_sizes = {parties};
  }

  const Json& table_json = field(json, "table", "behavior");
  if (!table_json.is_array()) throw Error("behavior.table: expected an array");
  std::map<BoxEvent, Rational> table;
  for (std::size_t k = 0; k < table_json.size(); ++k) {
    const std::string where = "behavior.table[" + std::to_string(k) + "]";
    const Json& entry = table_json[k];
    BoxEvent event{as_index_list(field(entry, "settings", where), where + ".settings"),
                   as_index_list(field(entry, "outcomes", where), where + ".outcomes")};
    Rational p = parse_probability(field(entry, "p", where), where + ".p");
    if (!table.emplace(std::move(event), std::move(p)).second) throw Error(where + ": duplicate entry");
  }
  try {
    return Behavior(std::move(scenario), table);
  } catch (const Error& e) {
    throw Error(std::string("behavior: ") + e.what());
  }
}

Json to_json(const Assignment& assignment) {
  Json out = Json::array();
  for (const auto& p : assignment.values()) out.push_back(p.to_string());
  return out;
}

Assignment assignment_from_json(const Json& json) {
  if (!json.is_array()) throw Error("assignment: expected an array");
  std::vector<Rational> values;
  for (std::size_t k = 0; k < json.size(); ++k) {
    values.push_back(parse_probability(json[k], "assignment[" + std::to_string(k) + "]"));
  }
  try {
    return Assignment(std::move(values));
  } catch (const Error& e) {
    throw Error(std::string("assignment: ") + e.what());
  }
}

Json to_json(const BoundResult& result) {
  Json json;
  json["class"] = to_string(result.bound_class);
  json["value"] = to_json(result.value);
  json["witness"] = rational_list(result.witness.values());
  if (result.certificate) {
    json["certificate"] = certificate_json(*result.certificate);
    json["bound_multipliers"] = rational_list(result.certificate->bound_multipliers);
  } else {
    json["certificate"] = Json::array();
  }
  return json;
}

Json to_json(const ProductBoundResult& result) {
  Json json;
  json["class"] = to_string(BoundClass::CEk);
  json["copies"] = result.copies;
  json["value"] = to_json(result.value);
  json["joint_value"] = to_json(result.joint.value);
  json["witness"] = rational_list(result.joint.witness.values());
  if (result.joint.certificate) {
    json["certificate"] = certificate_json(*result.joint.certificate);
    json["bound_multipliers"] = rational_list(result.joint.certificate->bound_multipliers);
  } else {
    json["certificate"] = Json::array();
  }
  return json;
}

Json to_json(const Violation& violation, const SimplicialComplex& complex) {
  Json labels = Json::array();
  for (const auto v : violation.clique) labels.push_back(complex.label(v));
  return {{"clique", violation.clique}, {"labels", std::move(labels)}, {"total", to_json(violation.total)}};
}

}  // namespace exlab
