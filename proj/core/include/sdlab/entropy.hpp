#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "sdlab/reduction.hpp"

namespace sdlab {

// Eigenvalue clip floor: anything below contributes nothing to entropy.
inline constexpr double kEigenvalueClip = 1e-12;
// Most negative eigenvalue tolerated before declaring the matrix broken.
inline constexpr double kPsdFloor = -1e-9;

// Real spectrum of a reduced density matrix, descending, clipped to [0, 1].
struct Spectrum {
  std::vector<double> eigenvalues;

  double sum() const;
};

// Dense Hermitian eigensolve; throws PsdViolationError below kPsdFloor.
Spectrum spectrum(const ReducedDensityMatrix& rho);

// Von Neumann entropy -sum(p log2 p) in bits, with 0 log 0 = 0.
double entropy_bits(const Spectrum& s);
// Same in natural-log units.
double entropy_nats(const Spectrum& s);

struct CurveMeta {
  std::string model;
  double epsilon = 0.0;
  std::string state;
};

// S(t_i) for a fixed initial state and grid; points are independent and
// computed in parallel (see parallel.hpp).
struct EntropyCurve {
  std::vector<double> times;
  std::vector<double> values;  // bits
  CurveMeta meta;
};

EntropyCurve entropy_curve(const SpectralState& state, const BinGrid& grid,
                           std::span<const double> times);

// Header "t,entropy_bits", one row per point, 12 significant digits.
void write_csv(const EntropyCurve& curve, std::ostream& out);

std::vector<double> uniform_times(double t0, double t1, int steps);

}  // namespace sdlab
