#pragma once

#include <complex>
#include <span>
#include <vector>

#include "sdlab/spectral_state.hpp"

namespace sdlab {

// A spectral state at time t. Evolution in the eigenbasis is exact: each
// coefficient just acquires the phase e^{-i E_n t}, applied lazily during
// synthesis so the stored norm is untouched.
class EvolvedState {
 public:
  EvolvedState(SpectralState base, double t) : base_(std::move(base)), t_(t) {}

  const SpectralState& base() const { return base_; }
  double time() const { return t_; }

  std::complex<double> coefficient_at_t(const SpectralState::Term& term) const {
    const double energy = base_.basis()[term.index].energy();
    return term.c * std::polar(1.0, -energy * t_);
  }

 private:
  SpectralState base_;
  double t_;
};

EvolvedState evolve(SpectralState state, double t);

// psi(x, t) = sum_n c_n e^{-i E_n t} psi_n(x). Ring positions wrap;
// oscillator positions must stay within the evaluation window.
std::complex<double> wave_at(const EvolvedState& state, double x);

// |psi(x, t)|^2 on a grid.
std::vector<double> density(const EvolvedState& state, std::span<const double> grid);

// Default 1024-point grid over the model's domain: [-pi, pi) for rings
// (periodic, half-open), [-L, L] inclusive for the oscillator.
std::vector<double> default_grid(const PotentialModel& model, int points = 1024);

WaveFunction as_wavefunction(const EvolvedState& state);

}  // namespace sdlab
