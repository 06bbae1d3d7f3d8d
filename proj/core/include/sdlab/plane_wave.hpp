#pragma once

#include <complex>
#include <functional>

namespace sdlab {

// Generic complex-valued state evaluator handed to decompose(); the
// frequency bound keeps quadrature honest for oscillatory inputs.
struct WaveFunction {
  std::function<std::complex<double>(double)> value;
  double max_frequency = 1.0;

  std::complex<double> operator()(double x) const { return value(x); }
};

// Normalized plane wave e^{ikx}/sqrt(2 pi) on the ring, integer k.
WaveFunction plane_wave(int k);

}  // namespace sdlab
