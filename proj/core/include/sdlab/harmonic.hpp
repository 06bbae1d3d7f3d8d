#pragma once

#include <complex>
#include <vector>

#include "sdlab/eigenstate.hpp"

namespace sdlab {

inline constexpr int kMaxOscillatorOrder = 60;

// n-th oscillator eigenfunction for V = x^2/2, E_n = n + 1/2. Evaluated
// through the normalized Hermite-function recurrence
//   phi_0 = pi^{-1/4} exp(-x^2/2)
//   phi_{n+1} = sqrt(2/(n+1)) x phi_n - sqrt(n/(n+1)) phi_{n-1}
// which stays bounded for n <= 60, |x| <= 10.
EigenState ho_eigenstate(int n);

// phi_0 .. phi_n at one point, sharing a single recurrence pass.
std::vector<double> ho_eigenstate_values(int n_max, double x);

// Basis {phi_0 .. phi_n_max} for the given oscillator model.
EigenBasis ho_basis(const PotentialModel& model, int n_max);

// Expansion coefficients of a coherent state (displaced ground state
// centered at x0): c_n = e^{-|a|^2/2} a^n / sqrt(n!) with a = x0/sqrt(2).
// Truncated at |c_n| < tau.
std::vector<std::pair<int, std::complex<double>>> coherent_state_coefficients(
    double x0, double tau, int n_max = kMaxOscillatorOrder);

}  // namespace sdlab
