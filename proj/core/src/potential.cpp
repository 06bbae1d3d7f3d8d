#include "sdlab/potential.hpp"

#include <cmath>
#include <numbers>

#include "sdlab/errors.hpp"

namespace sdlab {

PotentialModel PotentialModel::free_ring() {
  return PotentialModel(Kind::FreeRing, 0.0, 0.0);
}

PotentialModel PotentialModel::piecewise_ring(double v0) {
  if (!(v0 >= 0.0)) throw ConfigError("ring potential requires V0 >= 0");
  return PotentialModel(Kind::PiecewiseRing, v0, 0.0);
}

PotentialModel PotentialModel::harmonic_oscillator(double half_width) {
  if (!(half_width > 0.0)) {
    throw ConfigError("oscillator half-width must be positive");
  }
  return PotentialModel(Kind::HarmonicOscillator, 0.0, half_width);
}

double wrap_ring(double x) {
  const double two_pi = 2.0 * std::numbers::pi;
  double w = std::fmod(x + std::numbers::pi, two_pi);
  if (w < 0.0) w += two_pi;
  return w - std::numbers::pi;
}

double PotentialModel::potential(double x) const {
  switch (kind_) {
    case Kind::FreeRing:
      return 0.0;
    case Kind::PiecewiseRing: {
      const double w = wrap_ring(x);
      const double h = 0.5 * std::numbers::pi;
      return (w >= -h && w < h) ? v0_ : 0.0;
    }
    case Kind::HarmonicOscillator:
      return 0.5 * x * x;
  }
  return 0.0;
}

std::string PotentialModel::name() const {
  switch (kind_) {
    case Kind::FreeRing:
      return "free";
    case Kind::PiecewiseRing:
      return "ring";
    case Kind::HarmonicOscillator:
      return "ho";
  }
  return {};
}

}  // namespace sdlab
