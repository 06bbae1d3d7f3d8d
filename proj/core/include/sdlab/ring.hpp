#pragma once

#include <vector>

#include "sdlab/eigenstate.hpp"

namespace sdlab {

struct RingLevel {
  int n;
  Parity parity;
  double energy;
};

// All eigenenergies E <= e_max of the ring model, sorted by (n, parity)
// with "+" before "-". For V0 = 0 the spectrum is n^2 with the degenerate
// pair split into cos ("+") and sin ("-") members; n = 0 is "+" only.
// For V0 > 0 the energies are roots of the parity-reduced matching
// condition on the half circle [0, pi]:
//   symmetric      psi'(0) = 0, psi'(pi) = 0
//   antisymmetric  psi(0) = 0,  psi(pi) = 0
// located by a fixed-step scan plus bisection. Propagation through each
// constant-potential arc uses the exact 2x2 transfer matrix with trig or
// hyperbolic entries.
std::vector<RingLevel> ring_spectrum(const PotentialModel& model, double e_max);

// Real, normalized, parity-definite eigenfunction for a level present in
// ring_spectrum. Built piecewise from the closed-form solutions on the two
// arcs with coefficients fixed by C^1 matching at x = +-pi/2. Sign
// convention: psi(pi) > 0 for "+" states, psi'(pi) > 0 for "-" states
// (V0 = 0 returns cos(nx)/sqrt(pi) and sin(nx)/sqrt(pi) as is).
EigenState ring_eigenstate(const PotentialModel& model, int n, Parity parity);

// Full basis of all levels with E <= e_max.
EigenBasis ring_basis(const PotentialModel& model, double e_max);

// Boundary-condition mismatch at x = pi as a function of trial energy;
// its zeros in E are the eigenvalues of the given parity class. Exposed
// for diagnostics and cross-checks.
double ring_discriminant(const PotentialModel& model, Parity parity, double energy);

}  // namespace sdlab
