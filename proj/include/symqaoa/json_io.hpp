#pragma once

#include <json.hpp>

#include "symqaoa/bench.hpp"
#include "symqaoa/energy.hpp"
#include "symqaoa/hamiltonian.hpp"
#include "symqaoa/optimize.hpp"
#include "symqaoa/symmetry.hpp"

namespace symqaoa {

using json = nlohmann::json;

json to_json(const Hamiltonian& h);
Hamiltonian hamiltonian_from_json(const json& j);

json to_json(const GeneratorSet& gens);
GeneratorSet generator_set_from_json(const json& j);

json to_json(const OrbitPartition& orbits);
json to_json(const EnergyReport& report);
json to_json(const QaoaParams& params);
json to_json(const OptResult& result);
json to_json(const RqaoaResult& result);
json to_json(const BenchReport& report);

}  // namespace symqaoa
