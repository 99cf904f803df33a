#include "superpattern/json_io.hpp"

#include <nlohmann/json.hpp>

namespace superpattern {

using nlohmann::json;

Poset poset_from_json(const json& j) {
  if (!j.is_object() || !j.contains("elements"))
    throw InputError("poset json needs an 'elements' array");
  std::vector<std::string> atoms;
  for (const auto& e : j.at("elements")) {
    if (e.is_string())
      atoms.push_back(e.get<std::string>());
    else if (e.is_number_integer())
      atoms.push_back(std::to_string(e.get<long>()));
    else
      throw InputError("poset elements must be strings or integers");
  }
  std::vector<std::pair<std::string, std::string>> pairs;
  if (j.contains("relations")) {
    for (const auto& rel : j.at("relations")) {
      if (!rel.is_array() || rel.size() != 2)
        throw InputError("each relation must be a [lo, hi] pair");
      auto name = [](const json& v) {
        return v.is_string() ? v.get<std::string>()
                             : std::to_string(v.get<long>());
      };
      pairs.emplace_back(name(rel[0]), name(rel[1]));
    }
  }
  return Poset::from_relations(std::move(atoms), pairs);
}

json poset_to_json(const Poset& p) {
  json j;
  j["elements"] = p.labels();
  json rels = json::array();
  for (int i = 0; i < p.size(); ++i)
    for (int k = 0; k < p.size(); ++k)
      if (p.less(i, k)) rels.push_back({p.label(i), p.label(k)});
  j["relations"] = rels;
  return j;
}

Poset poset_from_json_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw InputError("invalid json for poset");
  return poset_from_json(j);
}

NNPartition nn_from_json(const Poset& reference, const json& j) {
  if (!j.is_array()) throw InputError("partition json must be an array of pairs");
  std::vector<std::pair<std::string, std::string>> arcs;
  for (const auto& a : j) {
    if (!a.is_array() || a.size() != 2)
      throw InputError("each arc must be a [lo, hi] pair");
    auto name = [](const json& v) {
      return v.is_string() ? v.get<std::string>() : std::to_string(v.get<long>());
    };
    arcs.emplace_back(name(a[0]), name(a[1]));
  }
  return NNPartition::from_labels(reference, arcs);
}

json nn_to_json(const NNPartition& p) {
  json j = json::array();
  for (Arc a : p.arcs())
    j.push_back({p.reference().label(a.lo), p.reference().label(a.hi)});
  return j;
}

NNPartition nn_from_json_text(const Poset& reference, const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw InputError("invalid json for partition");
  return nn_from_json(reference, j);
}

CoIdeal coideal_from_json(const Poset& reference, const json& j) {
  if (!j.is_array()) throw InputError("co-ideal json must be an array of pairs");
  std::vector<Arc> members;
  for (const auto& a : j) {
    auto name = [](const json& v) {
      return v.is_string() ? v.get<std::string>() : std::to_string(v.get<long>());
    };
    members.push_back(arc_of_labels(reference, name(a[0]), name(a[1])));
  }
  return CoIdeal(reference, std::move(members));
}

json coideal_to_json(const CoIdeal& n) {
  json j = json::array();
  for (Arc a : n.members())
    j.push_back({n.reference().label(a.lo), n.reference().label(a.hi)});
  return j;
}

json classfun_to_json(const ClassFunction& f) {
  json terms = json::array();
  for (const auto& [arcs, c] : f.terms()) {
    json t;
    t["label"] = nn_to_json(NNPartition(f.reference(), arcs));
    t["coeff"] = c.str();
    terms.push_back(t);
  }
  json j;
  j["basis"] = basis_name(f.basis());
  j["reference"] = poset_to_json(f.reference());
  j["terms"] = terms;
  return j;
}

json species_to_json(const SpeciesElement& x) {
  json terms = json::array();
  for (const auto& [key, c] : x.terms()) {
    json t;
    t["ambient"] = poset_to_json(key.ambient);
    t["basis"] = basis_name(x.basis());
    t["label"] = nn_to_json(NNPartition(key.ambient, key.label));
    t["coeff"] = c.str();
    terms.push_back(t);
  }
  json j;
  j["terms"] = terms;
  return j;
}

std::string json_dump(const json& j) { return j.dump(2); }

}  // namespace superpattern
