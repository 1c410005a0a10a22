#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "symqaoa/graph.hpp"

namespace symqaoa {

/// One Z-product observable: a sorted, duplicate-free qubit subset with a
/// nonzero real coefficient.
struct Term {
  std::vector<int> support;
  double coeff = 0.0;

  bool operator==(const Term&) const = default;
};

/// Diagonal cost operator: sum of Z-product terms plus a scalar offset
/// (the identity coefficient, kept out of the term list).
struct Hamiltonian {
  int n_qubits = 0;
  std::vector<Term> terms;
  double offset = 0.0;

  bool operator==(const Hamiltonian&) const = default;
};

/// Sorts supports, merges duplicate-support terms, drops zero coefficients,
/// and validates invariants. Throws std::invalid_argument on violation.
Hamiltonian make_hamiltonian(int n_qubits, std::vector<Term> terms,
                             double offset = 0.0);

void validate_hamiltonian(const Hamiltonian& h);

/// Cut-counting objective: each edge (u,v,w) contributes w * (1 - z_u z_v) / 2,
/// i.e. offset += w/2 and a term {u,v} with coefficient -w/2.
Hamiltonian build_maxcut(const Graph& g);

/// Coupling objective: each edge (i,j,J) contributes J * z_i z_j; offset 0.
Hamiltonian build_ising(const Graph& g);

/// Evaluates the classical objective at a bitstring (bit j belongs to qubit
/// j; z_j = +1 for bit 0, -1 for bit 1).
double eval_classical(const Hamiltonian& h, std::span<const std::uint8_t> bits);

/// Same, with bit j of `mask` holding qubit j. Requires n_qubits <= 64.
double eval_classical_mask(const Hamiltonian& h, std::uint64_t mask);

}  // namespace symqaoa
