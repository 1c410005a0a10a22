#include "symqaoa/lightcone.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "symqaoa/errors.hpp"

namespace symqaoa {

Cone cone(const Hamiltonian& h, const Term& term, int p) {
  if (p < 1) throw std::invalid_argument("depth p must be >= 1");
  std::vector<std::vector<int>> terms_at(h.n_qubits);
  for (std::size_t t = 0; t < h.terms.size(); ++t) {
    for (int q : h.terms[t].support) terms_at[q].push_back(static_cast<int>(t));
  }
  Cone c;
  c.layers.push_back(term.support);
  std::set<int> current(term.support.begin(), term.support.end());
  for (int l = 1; l <= p; ++l) {
    std::set<int> next = current;
    for (int q : current) {
      for (int t : terms_at[q]) {
        next.insert(h.terms[t].support.begin(), h.terms[t].support.end());
      }
    }
    c.layers.emplace_back(next.begin(), next.end());
    current = std::move(next);
  }
  return c;
}

Subproblem extract_subproblem(const Hamiltonian& h, const Cone& c) {
  const std::vector<int>& qubits = c.cone_qubits();
  auto local = [&qubits](int q) {
    auto it = std::lower_bound(qubits.begin(), qubits.end(), q);
    return static_cast<int>(it - qubits.begin());
  };
  Subproblem sp;
  sp.original_qubits = qubits;
  sp.sub.n_qubits = static_cast<int>(qubits.size());
  sp.sub.offset = 0.0;
  for (const Term& t : h.terms) {
    const bool inside = std::includes(qubits.begin(), qubits.end(),
                                      t.support.begin(), t.support.end());
    if (!inside) continue;
    Term lt;
    lt.coeff = t.coeff;
    lt.support.reserve(t.support.size());
    for (int q : t.support) lt.support.push_back(local(q));
    sp.sub.terms.push_back(std::move(lt));
  }
  for (int q : c.layers.front()) sp.measured_term_local.push_back(local(q));
  validate_hamiltonian(sp.sub);
  return sp;
}

void check_cone_width(const Cone& c, const std::vector<int>& measured_support,
                      int limit) {
  if (c.width() <= limit) return;
  std::string supp;
  for (int q : measured_support) supp += (supp.empty() ? "" : ",") + std::to_string(q);
  throw ResourceGuardError("reverse causal cone of term {" + supp + "} spans " +
                               std::to_string(c.width()) +
                               " qubits, above the width guard of " +
                               std::to_string(limit),
                           measured_support, c.width(), limit);
}

}  // namespace symqaoa
