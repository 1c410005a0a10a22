#include "symqaoa/simulator.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "symqaoa/errors.hpp"

namespace symqaoa {

void validate_params(const QaoaParams& params) {
  if (params.p < 1) throw std::invalid_argument("depth p must be >= 1");
  if (static_cast<int>(params.betas.size()) != params.p ||
      static_cast<int>(params.gammas.size()) != params.p) {
    throw std::invalid_argument("angle vectors must have length p");
  }
  for (double b : params.betas) {
    if (!std::isfinite(b)) throw std::invalid_argument("non-finite beta");
  }
  for (double g : params.gammas) {
    if (!std::isfinite(g)) throw std::invalid_argument("non-finite gamma");
  }
}

StateVector prepare_plus(int n, int max_qubits) {
  if (n < 1 || n > max_qubits) {
    throw ResourceGuardError("statevector of " + std::to_string(n) +
                                 " qubits outside the supported range [1, " +
                                 std::to_string(max_qubits) + "]",
                             {}, n, max_qubits);
  }
  StateVector sv;
  sv.n_qubits = n;
  const std::size_t dim = std::size_t{1} << n;
  sv.amps.assign(dim, 1.0 / std::sqrt(static_cast<double>(dim)));
  return sv;
}

void apply_phase_layer(StateVector& sv, const Hamiltonian& h, double gamma) {
  if (h.n_qubits != sv.n_qubits) {
    throw std::invalid_argument("Hamiltonian and state qubit counts differ");
  }
  for (const Term& t : h.terms) {
    std::uint64_t mask = 0;
    for (int j : t.support) mask |= std::uint64_t{1} << j;
    const std::complex<double> even = std::polar(1.0, -gamma * t.coeff);
    const std::complex<double> odd = std::conj(even);
    for (std::size_t x = 0; x < sv.amps.size(); ++x) {
      sv.amps[x] *= (std::popcount(x & mask) & 1) ? odd : even;
    }
  }
}

void apply_mixer_layer(StateVector& sv, double beta) {
  const double c = std::cos(beta);
  const std::complex<double> ms{0.0, -std::sin(beta)};
  for (int q = 0; q < sv.n_qubits; ++q) {
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t x = 0; x < sv.amps.size(); ++x) {
      if (x & bit) continue;
      const std::complex<double> a = sv.amps[x];
      const std::complex<double> b = sv.amps[x | bit];
      sv.amps[x] = c * a + ms * b;
      sv.amps[x | bit] = ms * a + c * b;
    }
  }
}

StateVector run_qaoa(const Hamiltonian& h, const QaoaParams& params,
                     int max_qubits) {
  validate_params(params);
  StateVector sv = prepare_plus(h.n_qubits, max_qubits);
  for (int l = 0; l < params.p; ++l) {
    apply_phase_layer(sv, h, params.gammas[l]);
    apply_mixer_layer(sv, params.betas[l]);
  }
  return sv;
}

double z_product_expectation(const StateVector& sv,
                             std::span<const int> support) {
  std::uint64_t mask = 0;
  for (int j : support) {
    if (j < 0 || j >= sv.n_qubits) {
      throw std::invalid_argument("support index out of range");
    }
    mask |= std::uint64_t{1} << j;
  }
  double value = 0.0;
  for (std::size_t x = 0; x < sv.amps.size(); ++x) {
    const double p = std::norm(sv.amps[x]);
    value += (std::popcount(x & mask) & 1) ? -p : p;
  }
  return value;
}

double term_expectation(const Hamiltonian& h, const Term& term,
                        const QaoaParams& params, int width_guard) {
  validate_params(params);
  const Cone c = cone(h, term, params.p);
  check_cone_width(c, term.support, width_guard);
  const Subproblem sp = extract_subproblem(h, c);
  const StateVector sv = run_qaoa(sp.sub, params, width_guard);
  return z_product_expectation(sv, sp.measured_term_local);
}

double full_state_energy_oracle(const Hamiltonian& h,
                                const QaoaParams& params) {
  if (h.n_qubits > kOracleQubitLimit) {
    throw ResourceGuardError("full-state oracle limited to " +
                                 std::to_string(kOracleQubitLimit) + " qubits",
                             {}, h.n_qubits, kOracleQubitLimit);
  }
  const StateVector sv = run_qaoa(h, params, kOracleQubitLimit);
  double energy = h.offset;
  for (const Term& t : h.terms) {
    energy += t.coeff * z_product_expectation(sv, t.support);
  }
  return energy;
}

}  // namespace symqaoa
