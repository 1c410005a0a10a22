#pragma once

#include <vector>

#include "symqaoa/hamiltonian.hpp"

namespace symqaoa {

inline constexpr int kDefaultWidthGuard = 26;

/// Nested qubit sets K_0 <= K_1 <= ... <= K_p reachable from a measured
/// term: K_0 is the term's support and each step adds the supports of all
/// terms intersecting the previous layer.
struct Cone {
  std::vector<std::vector<int>> layers;

  const std::vector<int>& cone_qubits() const { return layers.back(); }
  int width() const { return static_cast<int>(layers.back().size()); }
};

Cone cone(const Hamiltonian& h, const Term& term, int p);

/// The instance induced on the cone qubits: exactly the terms whose support
/// lies inside K_p, relabeled to 0..|K_p|-1 in sorted original order.
/// The offset is dropped (it cannot influence a Z-product expectation).
struct Subproblem {
  Hamiltonian sub;
  std::vector<int> original_qubits;       // sorted; local index = position
  std::vector<int> measured_term_local;   // relabeled K_0
};

Subproblem extract_subproblem(const Hamiltonian& h, const Cone& c);

/// Throws ResourceGuardError naming the measured term when the cone is wider
/// than `limit` qubits.
void check_cone_width(const Cone& c, const std::vector<int>& measured_support,
                      int limit);

}  // namespace symqaoa
