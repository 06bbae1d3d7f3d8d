#pragma once

#include <complex>
#include <span>
#include <utility>
#include <vector>

#include "sdlab/eigenstate.hpp"
#include "sdlab/plane_wave.hpp"

namespace sdlab {

// A normalized superposition over an eigenbasis. Coefficients below the
// truncation threshold are dropped at construction; the lost weight and
// any projection residual are kept for bookkeeping, and the stored
// coefficients are rescaled to unit norm.
class SpectralState {
 public:
  struct Term {
    std::size_t index;  // position in the basis
    std::complex<double> c;
  };

  enum class Normalize { Yes, No };

  // Coefficients addressed by basis index.
  static SpectralState from_coefficients(
      BasisPtr basis, std::vector<std::pair<std::size_t, std::complex<double>>> coeffs,
      double tau = 1e-4, Normalize normalize = Normalize::Yes);

  // Coefficients addressed by quantum numbers (n, parity).
  static SpectralState from_labeled_coefficients(
      BasisPtr basis,
      std::span<const std::tuple<int, Parity, std::complex<double>>> coeffs,
      double tau = 1e-4);

  const EigenBasis& basis() const { return *basis_; }
  BasisPtr basis_ptr() const { return basis_; }
  std::span<const Term> terms() const { return terms_; }

  double norm_squared() const;
  double threshold() const { return tau_; }
  // Pre-renormalization bookkeeping: weight kept, weight dropped below the
  // threshold, and the norm of the component outside the basis span. For a
  // unit-norm input, kept + discarded + residual^2 ~ 1 (Parseval).
  double kept_weight_raw() const { return kept_weight_raw_; }
  double discarded_weight() const { return discarded_weight_; }
  double residual() const { return residual_; }
  // Largest local wavenumber over the contributing basis states.
  double max_frequency() const { return max_frequency_; }

 private:
  SpectralState(BasisPtr basis, std::vector<Term> terms, double tau,
                double kept_raw, double discarded, double residual);

  friend SpectralState decompose(const WaveFunction&, BasisPtr, double, double);

  BasisPtr basis_;
  std::vector<Term> terms_;
  double tau_;
  double kept_weight_raw_;
  double discarded_weight_;
  double residual_;
  double max_frequency_;
};

// Projection coefficients c_n = <psi_n|state> by composite quadrature;
// |c_n| < tau are dropped and the result renormalized. Throws
// IncompleteBasisError when more than max_residual of the norm falls
// outside the basis span.
SpectralState decompose(const WaveFunction& state, BasisPtr basis, double tau,
                        double max_residual = 1e-3);

// Exact eigenbasis coefficients of a plane-wave superposition on the free
// ring: e^{ikx} = (psi_k^+ + i psi_k^-) * sqrt(pi) / sqrt(2 pi) ... i.e.
// c(k,+) = a/sqrt(2), c(k,-) = i a/sqrt(2) for k > 0 (conjugated for
// k < 0, direct for k = 0). No quadrature involved.
struct PlaneWaveComponent {
  int k;
  std::complex<double> amplitude;
};
SpectralState plane_wave_state(BasisPtr free_ring_basis,
                               std::span<const PlaneWaveComponent> components);

}  // namespace sdlab
