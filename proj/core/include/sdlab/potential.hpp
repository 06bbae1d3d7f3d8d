#pragma once

#include <string>

namespace sdlab {

// One-dimensional systems supported by the lab (hbar = m = 1 throughout):
//
//   FreeRing            V = 0 on the circle R/2piZ
//   PiecewiseRing(V0)   V = V0 on [-pi/2, pi/2) mod 2pi, 0 elsewhere
//   HarmonicOscillator  V = x^2/2 on the line, truncated to [-L, L]
//
// A free ring is the V0 = 0 piecewise ring; it is kept as its own kind so
// configurations can name it directly.
class PotentialModel {
 public:
  enum class Kind { FreeRing, PiecewiseRing, HarmonicOscillator };

  static PotentialModel free_ring();
  static PotentialModel piecewise_ring(double v0);
  static PotentialModel harmonic_oscillator(double half_width = 6.0);

  Kind kind() const { return kind_; }
  bool is_ring() const { return kind_ != Kind::HarmonicOscillator; }
  double v0() const { return v0_; }
  // Grid/integration half-width for the oscillator.
  double half_width() const { return half_width_; }

  double potential(double x) const;
  std::string name() const;

 private:
  PotentialModel(Kind k, double v0, double half_width)
      : kind_(k), v0_(v0), half_width_(half_width) {}

  Kind kind_;
  double v0_;
  double half_width_;
};

// Canonical ring coordinate in [-pi, pi).
double wrap_ring(double x);

}  // namespace sdlab
