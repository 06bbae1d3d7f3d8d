#include "sdlab/evolution.hpp"

#include <cmath>
#include <numbers>

#include "sdlab/errors.hpp"

namespace sdlab {

namespace {
// The oscillator recurrence is trustworthy out to |x| = 10; grids and
// quadrature all live well inside.
constexpr double kOscillatorWindow = 10.0;
}  // namespace

EvolvedState evolve(SpectralState state, double t) {
  return EvolvedState(std::move(state), t);
}

std::complex<double> wave_at(const EvolvedState& state, double x) {
  const EigenBasis& basis = state.base().basis();
  if (!basis.model().is_ring() && std::abs(x) > kOscillatorWindow) {
    throw ConfigError("position outside the truncated oscillator domain");
  }
  std::complex<double> acc = 0.0;
  for (const auto& term : state.base().terms()) {
    acc += state.coefficient_at_t(term) * basis[term.index](x);
  }
  return acc;
}

std::vector<double> density(const EvolvedState& state, std::span<const double> grid) {
  std::vector<double> out;
  out.reserve(grid.size());
  for (double x : grid) out.push_back(std::norm(wave_at(state, x)));
  return out;
}

std::vector<double> default_grid(const PotentialModel& model, int points) {
  std::vector<double> xs(points);
  if (model.is_ring()) {
    const double step = 2.0 * std::numbers::pi / points;
    for (int i = 0; i < points; ++i) xs[i] = -std::numbers::pi + i * step;
  } else {
    const double half = model.half_width();
    for (int i = 0; i < points; ++i) {
      xs[i] = -half + 2.0 * half * i / (points - 1);
    }
  }
  return xs;
}

WaveFunction as_wavefunction(const EvolvedState& state) {
  return WaveFunction{[state](double x) { return wave_at(state, x); },
                      state.base().max_frequency()};
}

}  // namespace sdlab
