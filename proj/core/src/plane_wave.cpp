#include "sdlab/plane_wave.hpp"

#include <cmath>
#include <numbers>

namespace sdlab {

WaveFunction plane_wave(int k) {
  const double norm = 1.0 / std::sqrt(2.0 * std::numbers::pi);
  return WaveFunction{
      [k, norm](double x) {
        return std::polar(norm, k * x);
      },
      std::max(1.0, (double)std::abs(k))};
}

}  // namespace sdlab
