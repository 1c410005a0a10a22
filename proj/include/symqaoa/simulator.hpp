#pragma once

#include <complex>
#include <span>
#include <vector>

#include "symqaoa/hamiltonian.hpp"
#include "symqaoa/lightcone.hpp"

namespace symqaoa {

/// Alternating-layer schedule: depth p with one (gamma, beta) pair per layer,
/// applied as phase first, mixer second, layer 1 innermost.
struct QaoaParams {
  int p = 1;
  std::vector<double> betas;
  std::vector<double> gammas;

  bool operator==(const QaoaParams&) const = default;
};

void validate_params(const QaoaParams& params);

/// Dense amplitude vector; qubit 0 is the least significant bit of the
/// basis index.
struct StateVector {
  int n_qubits = 0;
  std::vector<std::complex<double>> amps;
};

inline constexpr int kOracleQubitLimit = 20;

StateVector prepare_plus(int n, int max_qubits = kDefaultWidthGuard);

/// Diagonal evolution exp(-i gamma H) restricted to the term list; the
/// offset only yields a global phase and is skipped.
void apply_phase_layer(StateVector& sv, const Hamiltonian& h, double gamma);

/// Product of single-qubit rotations exp(-i beta X) on every qubit.
void apply_mixer_layer(StateVector& sv, double beta);

/// Full alternating evolution from the uniform superposition.
StateVector run_qaoa(const Hamiltonian& h, const QaoaParams& params,
                     int max_qubits = kDefaultWidthGuard);

/// <prod_{j in support} Z_j> in the given state; always within [-1, 1].
double z_product_expectation(const StateVector& sv,
                             std::span<const int> support);

/// Expectation of one term via its reverse causal cone: builds the cone,
/// simulates the induced subproblem for all p layers, and measures the
/// relabeled term. Pure function of its inputs. Throws ResourceGuardError
/// when the cone exceeds `width_guard` qubits.
double term_expectation(const Hamiltonian& h, const Term& term,
                        const QaoaParams& params,
                        int width_guard = kDefaultWidthGuard);

/// Whole-instance reference: simulates all n qubits (n <= 20) and returns
/// offset + sum of coeff * <Z_S> over all terms.
double full_state_energy_oracle(const Hamiltonian& h,
                                const QaoaParams& params);

}  // namespace symqaoa
