#include "sdlab/harmonic.hpp"

#include <cmath>
#include <numbers>

#include "sdlab/errors.hpp"

namespace sdlab {
namespace {

double ho_value(int n, double x) {
  const double phi0 = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * x * x);
  if (n == 0) return phi0;
  double prev = 0.0, cur = phi0;
  for (int k = 0; k < n; ++k) {
    const double next =
        std::sqrt(2.0 / (k + 1)) * x * cur - std::sqrt((double)k / (k + 1)) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace

std::vector<double> ho_eigenstate_values(int n_max, double x) {
  std::vector<double> out(n_max + 1);
  out[0] = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * x * x);
  if (n_max == 0) return out;
  out[1] = std::sqrt(2.0) * x * out[0];
  for (int k = 1; k < n_max; ++k) {
    out[k + 1] =
        std::sqrt(2.0 / (k + 1)) * x * out[k] - std::sqrt((double)k / (k + 1)) * out[k - 1];
  }
  return out;
}

EigenState ho_eigenstate(int n) {
  if (n < 0 || n > kMaxOscillatorOrder) {
    throw ConfigError("oscillator order " + std::to_string(n) +
                      " outside supported range [0, " +
                      std::to_string(kMaxOscillatorOrder) + "]");
  }
  const Parity parity = (n % 2 == 0) ? Parity::Symmetric : Parity::Antisymmetric;
  const double energy = n + 0.5;
  // Largest local wavenumber, reached at the classical turning points.
  const double max_freq = std::sqrt(2.0 * energy);
  return EigenState(n, parity, energy, max_freq,
                    [n](double x) { return ho_value(n, x); });
}

EigenBasis ho_basis(const PotentialModel& model, int n_max) {
  if (model.kind() != PotentialModel::Kind::HarmonicOscillator) {
    throw ConfigError("ho_basis requires an oscillator model");
  }
  std::vector<EigenState> states;
  states.reserve(n_max + 1);
  for (int n = 0; n <= n_max; ++n) states.push_back(ho_eigenstate(n));
  return EigenBasis(model, std::move(states));
}

std::vector<std::pair<int, std::complex<double>>> coherent_state_coefficients(
    double x0, double tau, int n_max) {
  const double alpha = x0 / std::sqrt(2.0);
  std::vector<std::pair<int, std::complex<double>>> coeffs;
  double c = std::exp(-0.25 * x0 * x0);  // e^{-|alpha|^2/2}
  for (int n = 0; n <= n_max; ++n) {
    if (std::abs(c) >= tau) coeffs.emplace_back(n, c);
    c *= alpha / std::sqrt((double)n + 1.0);
  }
  return coeffs;
}

}  // namespace sdlab
