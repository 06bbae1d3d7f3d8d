#include "sdlab/entropy.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "sdlab/errors.hpp"
#include "sdlab/parallel.hpp"

namespace sdlab {

double Spectrum::sum() const {
  double s = 0.0;
  for (double v : eigenvalues) s += v;
  return s;
}

Spectrum spectrum(const ReducedDensityMatrix& rho) {
  const int n = rho.size();
  Eigen::MatrixXcd m(n, n);
  for (int y = 0; y < n; ++y) {
    for (int yp = 0; yp < n; ++yp) m(y, yp) = rho(y, yp);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("Hermitian eigensolve failed");
  }

  Spectrum out;
  out.eigenvalues.assign(solver.eigenvalues().data(),
                         solver.eigenvalues().data() + n);
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end(), std::greater<>());
  if (!out.eigenvalues.empty() && out.eigenvalues.back() < kPsdFloor) {
    throw PsdViolationError(
        "reduced density matrix is not positive semidefinite: min eigenvalue " +
            std::to_string(out.eigenvalues.back()),
        out.eigenvalues.back());
  }
  for (double& v : out.eigenvalues) v = std::clamp(v, 0.0, 1.0);
  return out;
}

namespace {

double entropy_sum(const Spectrum& s) {
  double acc = 0.0;
  for (double p : s.eigenvalues) {
    if (p >= kEigenvalueClip) acc -= p * std::log(p);
  }
  return acc;
}

}  // namespace

double entropy_bits(const Spectrum& s) { return entropy_sum(s) / std::log(2.0); }

double entropy_nats(const Spectrum& s) { return entropy_sum(s); }

EntropyCurve entropy_curve(const SpectralState& state, const BinGrid& grid,
                           std::span<const double> times) {
  EntropyCurve curve;
  curve.times.assign(times.begin(), times.end());
  curve.values.resize(times.size());
  curve.meta.model = state.basis().model().name();
  curve.meta.epsilon = grid.epsilon();

  parallel_for(times.size(), [&](std::size_t i) {
    curve.values[i] = entropy_bits(spectrum(reduce(evolve(state, curve.times[i]), grid)));
  });
  return curve;
}

void write_csv(const EntropyCurve& curve, std::ostream& out) {
  out << "t,entropy_bits\n";
  char row[64];
  for (std::size_t i = 0; i < curve.times.size(); ++i) {
    std::snprintf(row, sizeof(row), "%.12g,%.12g\n", curve.times[i], curve.values[i]);
    out << row;
  }
}

std::vector<double> uniform_times(double t0, double t1, int steps) {
  if (steps < 1) throw ConfigError("time grid needs at least one step");
  std::vector<double> ts(steps + 1);
  for (int i = 0; i <= steps; ++i) ts[i] = t0 + (t1 - t0) * i / steps;
  return ts;
}

}  // namespace sdlab
