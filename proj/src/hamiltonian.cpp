#include "symqaoa/hamiltonian.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace symqaoa {

void validate_hamiltonian(const Hamiltonian& h) {
  if (h.n_qubits < 0) throw std::invalid_argument("negative qubit count");
  if (!std::isfinite(h.offset)) throw std::invalid_argument("non-finite offset");
  std::map<std::vector<int>, int> seen;
  for (const Term& t : h.terms) {
    if (t.support.empty()) throw std::invalid_argument("empty term support");
    if (!std::is_sorted(t.support.begin(), t.support.end())) {
      throw std::invalid_argument("term support not sorted");
    }
    if (std::adjacent_find(t.support.begin(), t.support.end()) !=
        t.support.end()) {
      throw std::invalid_argument("duplicate index in term support");
    }
    if (t.support.front() < 0 || t.support.back() >= h.n_qubits) {
      throw std::invalid_argument("term support index out of range");
    }
    if (!std::isfinite(t.coeff) || t.coeff == 0.0) {
      throw std::invalid_argument("term coefficient must be finite and nonzero");
    }
    if (!seen.emplace(t.support, 1).second) {
      throw std::invalid_argument("two terms share the same support");
    }
  }
}

Hamiltonian make_hamiltonian(int n_qubits, std::vector<Term> terms,
                             double offset) {
  // Merge coefficients of equal supports, keeping first-appearance order.
  std::map<std::vector<int>, std::size_t> index_of;
  std::vector<Term> merged;
  for (Term& t : terms) {
    std::sort(t.support.begin(), t.support.end());
    auto [it, fresh] = index_of.emplace(t.support, merged.size());
    if (fresh) {
      merged.push_back(std::move(t));
    } else {
      merged[it->second].coeff += t.coeff;
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.coeff == 0.0; });
  Hamiltonian h{n_qubits, std::move(merged), offset};
  validate_hamiltonian(h);
  return h;
}

Hamiltonian build_maxcut(const Graph& g) {
  validate_graph(g);
  Hamiltonian h;
  h.n_qubits = g.n_vertices;
  for (const Edge& e : g.edges) {
    h.offset += e.w / 2.0;
    if (e.w != 0.0) h.terms.push_back({{e.u, e.v}, -e.w / 2.0});
  }
  validate_hamiltonian(h);
  return h;
}

Hamiltonian build_ising(const Graph& g) {
  validate_graph(g);
  Hamiltonian h;
  h.n_qubits = g.n_vertices;
  for (const Edge& e : g.edges) {
    if (e.w != 0.0) h.terms.push_back({{e.u, e.v}, e.w});
  }
  validate_hamiltonian(h);
  return h;
}

double eval_classical(const Hamiltonian& h,
                      std::span<const std::uint8_t> bits) {
  if (static_cast<int>(bits.size()) != h.n_qubits) {
    throw std::invalid_argument("bitstring length " +
                                std::to_string(bits.size()) +
                                " != n_qubits " + std::to_string(h.n_qubits));
  }
  double value = h.offset;
  for (const Term& t : h.terms) {
    int parity = 0;
    for (int j : t.support) parity ^= bits[j] & 1;
    value += parity ? -t.coeff : t.coeff;
  }
  return value;
}

double eval_classical_mask(const Hamiltonian& h, std::uint64_t mask) {
  if (h.n_qubits > 64) throw std::invalid_argument("mask form requires n_qubits <= 64");
  double value = h.offset;
  for (const Term& t : h.terms) {
    std::uint64_t m = 0;
    for (int j : t.support) m |= std::uint64_t{1} << j;
    value += (std::popcount(mask & m) & 1) ? -t.coeff : t.coeff;
  }
  return value;
}

}  // namespace symqaoa
