#include "sdlab/bin_grid.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "sdlab/errors.hpp"

namespace sdlab {

BinGrid BinGrid::ring(double epsilon, double offset) {
  if (!(epsilon > 0.0)) throw ConfigError("bin width must be positive");
  const double two_pi = 2.0 * std::numbers::pi;
  const int bins = (int)std::lround(two_pi / epsilon);
  if (bins < 1 || std::abs(bins * epsilon - two_pi) >= 1e-12) {
    throw ConfigError("ring bin width must divide the circumference: eps = " +
                      std::to_string(epsilon) + " leaves |B*eps - 2*pi| = " +
                      std::to_string(std::abs(bins * epsilon - two_pi)));
  }
  return BinGrid(Domain::Ring, epsilon, offset, bins);
}

BinGrid BinGrid::interval(double epsilon, double half_width,
                          std::optional<double> offset) {
  if (!(epsilon > 0.0)) throw ConfigError("bin width must be positive");
  if (!(half_width > 0.0)) throw ConfigError("interval half-width must be positive");
  if (!offset) {
    // Symmetric tiling with bin edges at -eps/2 + m*eps.
    const int m = (int)std::ceil((half_width - 0.5 * epsilon) / epsilon);
    const int wings = std::max(m, 0);
    return BinGrid(Domain::Interval, epsilon, -0.5 * epsilon - wings * epsilon,
                   2 * wings + 1);
  }
  if (*offset > -half_width) {
    throw ConfigError("interval grid offset must sit at or below -half_width");
  }
  const int bins = (int)std::ceil((half_width - *offset) / epsilon - 1e-12);
  return BinGrid(Domain::Interval, epsilon, *offset, bins);
}

BinGrid BinGrid::for_model(const PotentialModel& model, double epsilon,
                           std::optional<double> offset) {
  if (model.is_ring()) return ring(epsilon, offset.value_or(0.0));
  return interval(epsilon, model.half_width(), offset);
}

}  // namespace sdlab
