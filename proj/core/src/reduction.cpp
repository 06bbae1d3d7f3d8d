#include "sdlab/reduction.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <string>

#include "sdlab/errors.hpp"
#include "sdlab/quadrature.hpp"

namespace sdlab {

namespace {
constexpr double kPi = std::numbers::pi;
}

ReducedDensityMatrix::ReducedDensityMatrix(BinGrid grid,
                                           std::vector<std::complex<double>> entries)
    : grid_(grid), entries_(std::move(entries)) {
  if (entries_.size() != (std::size_t)grid_.bins() * grid_.bins()) {
    throw ConfigError("reduced matrix entry count does not match the grid");
  }
}

double ReducedDensityMatrix::trace() const {
  double tr = 0.0;
  for (int y = 0; y < size(); ++y) tr += (*this)(y, y).real();
  return tr;
}

void ReducedDensityMatrix::dump_json(std::ostream& out) const {
  out << "{\"epsilon\":" << grid_.epsilon() << ",\"offset\":" << grid_.offset()
      << ",\"domain\":\""
      << (grid_.domain() == BinGrid::Domain::Ring ? "ring" : "interval")
      << "\",\"B\":" << grid_.bins() << ",\"entries\":[";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out << ',';
    out << '[' << entries_[i].real() << ',' << entries_[i].imag() << ']';
  }
  out << "]}";
}

ReducedDensityMatrix reduce(const EvolvedState& state, const BinGrid& grid) {
  const PotentialModel& model = state.base().basis().model();
  if (model.is_ring() != (grid.domain() == BinGrid::Domain::Ring)) {
    throw ConfigError("bin grid domain does not match the state's model");
  }
  const double norm_sq = state.base().norm_squared();
  if (std::abs(norm_sq - 1.0) > 1e-4) {
    throw ConfigError("state is not normalized: |psi|^2 = " + std::to_string(norm_sq));
  }

  // Shared z-rule on [0, eps): potential kinks fall at the same sub-bin
  // offset in every bin (the ring bin count divides the circumference), so
  // one partition serves all bins and the eigenfunction pieces stay
  // analytic on every quadrature piece.
  const double eps = grid.epsilon();
  std::vector<double> kinks;
  if (model.kind() == PotentialModel::Kind::PiecewiseRing) {
    for (double edge : {-0.5 * kPi, 0.5 * kPi}) {
      double z = std::fmod(edge - grid.offset(), eps);
      if (z < 0.0) z += eps;
      if (z > 0.0 && z < eps) kinks.push_back(z);
    }
  }
  const double width = 6.0 / std::max(1.0, state.base().max_frequency());
  const auto z_rule = quad::nodes(quad::partition(0.0, eps, kinks, width));

  const int bins = grid.bins();
  const std::size_t nodes = z_rule.points.size();
  std::vector<std::complex<double>> samples((std::size_t)bins * nodes);
  for (int y = 0; y < bins; ++y) {
    const double left = grid.bin_left(y);
    for (std::size_t j = 0; j < nodes; ++j) {
      samples[(std::size_t)y * nodes + j] = wave_at(state, left + z_rule.points[j]);
    }
  }

  std::vector<std::complex<double>> entries((std::size_t)bins * bins);
  for (int y = 0; y < bins; ++y) {
    const auto* row = &samples[(std::size_t)y * nodes];
    // Diagonal accumulates real weights only.
    double diag = 0.0;
    for (std::size_t j = 0; j < nodes; ++j) diag += z_rule.weights[j] * std::norm(row[j]);
    entries[(std::size_t)y * bins + y] = diag;
    for (int yp = y + 1; yp < bins; ++yp) {
      const auto* col = &samples[(std::size_t)yp * nodes];
      std::complex<double> acc = 0.0;
      for (std::size_t j = 0; j < nodes; ++j) {
        acc += z_rule.weights[j] * row[j] * std::conj(col[j]);
      }
      entries[(std::size_t)y * bins + yp] = acc;
      entries[(std::size_t)yp * bins + y] = std::conj(acc);
    }
  }
  return ReducedDensityMatrix(grid, std::move(entries));
}

std::complex<double> fine_overlap(double dk, double epsilon) {
  if (!(epsilon > 0.0)) throw ConfigError("fine_overlap requires eps > 0");
  const double u = dk * epsilon;
  if (std::abs(u) < 1e-6) {
    // sin(u)/u and (1 - cos u)/u expanded to keep full precision near 0.
    const double u2 = u * u;
    return epsilon * std::complex<double>(1.0 - u2 / 6.0 + u2 * u2 / 120.0,
                                          u / 2.0 - u * u2 / 24.0);
  }
  return std::complex<double>(std::sin(u), 1.0 - std::cos(u)) / dk;
}

TwoPlaneWaveRdm two_plane_wave_rdm(std::complex<double> a1, std::complex<double> a2,
                                   int k1, int k2, double epsilon) {
  if (k1 == k2) throw ConfigError("two_plane_wave_rdm requires k1 != k2");
  const double w1 = std::norm(a1), w2 = std::norm(a2);
  if (std::abs(w1 + w2 - 1.0) > 1e-10) {
    throw ConfigError("plane-wave amplitudes must satisfy |a1|^2 + |a2|^2 = 1");
  }
  const std::complex<double> ratio = fine_overlap(k1 - k2, epsilon) / epsilon;

  TwoPlaneWaveRdm out;
  out.matrix = {w1, a1 * std::conj(a2) * ratio, a2 * std::conj(a1) * std::conj(ratio),
                w2};
  const double det = w1 * w2 * (1.0 - std::norm(ratio));
  const double disc = std::sqrt(std::max(0.0, 1.0 - 4.0 * det));
  out.eigenvalues = {0.5 * (1.0 + disc), 0.5 * (1.0 - disc)};
  return out;
}

}  // namespace sdlab
