#include "symqaoa/json_io.hpp"

#include <string>

namespace symqaoa {

json to_json(const Hamiltonian& h) {
  json terms = json::array();
  for (const Term& t : h.terms) {
    terms.push_back({{"support", t.support}, {"coeff", t.coeff}});
  }
  return {{"n_qubits", h.n_qubits}, {"offset", h.offset}, {"terms", terms}};
}

Hamiltonian hamiltonian_from_json(const json& j) {
  std::vector<Term> terms;
  for (const json& t : j.at("terms")) {
    terms.push_back(
        {t.at("support").get<std::vector<int>>(), t.at("coeff").get<double>()});
  }
  return make_hamiltonian(j.at("n_qubits").get<int>(), std::move(terms),
                          j.at("offset").get<double>());
}

json to_json(const GeneratorSet& gens) {
  json list = json::array();
  for (const Permutation& g : gens.generators) list.push_back(g.images);
  return {{"n", gens.n}, {"generators", list}};
}

GeneratorSet generator_set_from_json(const json& j) {
  GeneratorSet gens;
  gens.n = j.at("n").get<int>();
  for (const json& images : j.at("generators")) {
    Permutation p{images.get<std::vector<int>>()};
    validate_permutation(p);
    gens.generators.push_back(std::move(p));
  }
  return gens;
}

json to_json(const OrbitPartition& orbits) {
  json classes = json::array();
  for (const OrbitClass& cls : orbits.classes) {
    classes.push_back({{"rep", cls.representative},
                       {"size", cls.multiplicity},
                       {"coeff", cls.coeff}});
  }
  return {{"classes", classes}};
}

json to_json(const EnergyReport& report) {
  json per_class = json::array();
  for (const ClassReport& c : report.per_class) {
    per_class.push_back({{"rep", c.rep},
                         {"multiplicity", c.multiplicity},
                         {"expectation", c.expectation},
                         {"cone_width", c.cone_width}});
  }
  return {{"energy", report.energy},
          {"n_terms_evaluated", report.n_terms_evaluated},
          {"mode", to_string(report.mode)},
          {"per_class", per_class}};
}

json to_json(const QaoaParams& params) {
  return {{"p", params.p}, {"betas", params.betas}, {"gammas", params.gammas}};
}

json to_json(const OptResult& result) {
  return {{"params", to_json(result.best_params)},
          {"energy", result.best_energy},
          {"n_evaluations", result.n_evaluations}};
}

json to_json(const RqaoaResult& result) {
  json steps = json::array();
  for (const EliminationStep& s : result.steps) {
    steps.push_back({{"edge", {s.i, s.j}},
                     {"sign", s.sign},
                     {"correlation", s.correlation}});
  }
  std::string bits;
  bits.reserve(result.final_assignment.size());
  for (std::uint8_t b : result.final_assignment) bits += b ? '1' : '0';
  return {{"steps", steps},
          {"assignment", bits},
          {"objective", result.objective_value}};
}

json to_json(const BenchReport& r) {
  return {{"Name", r.graph_name},
          {"|E|", r.n_edges},
          {"|V|", r.n_vertices},
          {"N_orb", r.n_orb},
          {"t_aut", r.t_aut},
          {"t_s", r.t_s},
          {"t_acc", r.t_acc},
          {"S", r.speedup},
          {"p", r.p},
          {"reduction_ratio", r.reduction_ratio},
          {"n_threads", r.n_threads}};
}

}  // namespace symqaoa
