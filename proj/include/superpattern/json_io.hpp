#pragma once

// JSON formats for posets, partitions, co-ideals and species elements.

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "superpattern/classfun.hpp"
#include "superpattern/coideal.hpp"
#include "superpattern/nonnesting.hpp"
#include "superpattern/poset.hpp"
#include "superpattern/species.hpp"

namespace superpattern {

// {"elements": ["1","2"], "relations": [["1","2"]]}; relations are any
// generating set, the closure is applied on load.
Poset poset_from_json(const nlohmann::json& j);
nlohmann::json poset_to_json(const Poset& p);
Poset poset_from_json_text(const std::string& text);

// [["2","4"],["4","7"]]
NNPartition nn_from_json(const Poset& reference, const nlohmann::json& j);
nlohmann::json nn_to_json(const NNPartition& p);
NNPartition nn_from_json_text(const Poset& reference, const std::string& text);

CoIdeal coideal_from_json(const Poset& reference, const nlohmann::json& j);
nlohmann::json coideal_to_json(const CoIdeal& n);

nlohmann::json classfun_to_json(const ClassFunction& f);
nlohmann::json species_to_json(const SpeciesElement& x);

std::string json_dump(const nlohmann::json& j);

}  // namespace superpattern
