// Independent numerical oracles for the test suites. Everything here is
// deliberately written against textbook formulas, not the library's own
// quadrature/propagation paths, so agreement is evidence rather than
// tautology.
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

// Composite Simpson on a uniform grid (n even), spectrally inferior to
// Gauss-Legendre but entirely independent of it.
template <typename F>
auto simpson(F&& f, double a, double b, int n) {
  if (n % 2) ++n;
  const double h = (b - a) / n;
  using R = decltype(f(0.0));
  R odd{}, even{};
  for (int i = 1; i < n; i += 2) odd += f(a + i * h);
  for (int i = 2; i < n; i += 2) even += f(a + i * h);
  return (f(a) + f(b) + 4.0 * odd + 2.0 * even) * (h / 3.0);
}

// Midpoint Riemann sum with n uniform sub-bin samples.
template <typename F>
auto riemann_midpoint(F&& f, double a, double b, int n) {
  const double h = (b - a) / n;
  using R = decltype(f(0.0));
  R acc{};
  for (int i = 0; i < n; ++i) acc += f(a + (i + 0.5) * h);
  return acc * h;
}

// Eigenvalues of a Hermitian 2x2 [[m00, m01], [conj(m01), m11]] from the
// trace/determinant quadratic, descending.
inline std::array<double, 2> hermitian2x2_eigenvalues(double m00,
                                                      std::complex<double> m01,
                                                      double m11) {
  const double tr = m00 + m11;
  const double det = m00 * m11 - std::norm(m01);
  const double disc = std::sqrt(std::max(0.0, tr * tr - 4.0 * det));
  return {0.5 * (tr + disc), 0.5 * (tr - disc)};
}

// Classic fixed-step RK4 for psi'' = 2 (V(x) - E) psi, the cross-check for
// the closed-form transfer-matrix propagation.
struct Rk4State {
  double psi, dpsi;
};

inline Rk4State rk4_schrodinger(const std::function<double(double)>& potential,
                                double energy, Rk4State y, double x0, double x1,
                                int steps) {
  const double h = (x1 - x0) / steps;
  auto rhs = [&](double x, Rk4State s) {
    return Rk4State{s.dpsi, 2.0 * (potential(x) - energy) * s.psi};
  };
  double x = x0;
  for (int i = 0; i < steps; ++i) {
    const Rk4State k1 = rhs(x, y);
    const Rk4State k2 = rhs(x + 0.5 * h, {y.psi + 0.5 * h * k1.psi, y.dpsi + 0.5 * h * k1.dpsi});
    const Rk4State k3 = rhs(x + 0.5 * h, {y.psi + 0.5 * h * k2.psi, y.dpsi + 0.5 * h * k2.dpsi});
    const Rk4State k4 = rhs(x + h, {y.psi + h * k3.psi, y.dpsi + h * k3.dpsi});
    y.psi += h / 6.0 * (k1.psi + 2.0 * k2.psi + 2.0 * k3.psi + k4.psi);
    y.dpsi += h / 6.0 * (k1.dpsi + 2.0 * k2.dpsi + 2.0 * k3.dpsi + k4.dpsi);
    x += h;
  }
  return y;
}

// Dense-matrix helpers for known-spectrum Hermitian test matrices: build
// Q diag(p) Q^dagger from a random unitary Q (Gram-Schmidt over a seeded
// complex Gaussian matrix) so the exact spectrum is known by construction.
using CMatrix = std::vector<std::vector<std::complex<double>>>;

inline CMatrix random_unitary(int n, std::mt19937& rng) {
  std::normal_distribution<double> gauss;
  CMatrix q(n, std::vector<std::complex<double>>(n));
  for (auto& row : q) {
    for (auto& v : row) v = {gauss(rng), gauss(rng)};
  }
  // Gram-Schmidt over columns.
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < j; ++k) {
      std::complex<double> proj = 0.0;
      for (int i = 0; i < n; ++i) proj += std::conj(q[i][k]) * q[i][j];
      for (int i = 0; i < n; ++i) q[i][j] -= proj * q[i][k];
    }
    double norm = 0.0;
    for (int i = 0; i < n; ++i) norm += std::norm(q[i][j]);
    norm = std::sqrt(norm);
    for (int i = 0; i < n; ++i) q[i][j] /= norm;
  }
  return q;
}

inline CMatrix with_spectrum(const std::vector<double>& p, std::mt19937& rng) {
  const int n = (int)p.size();
  const CMatrix q = random_unitary(n, rng);
  CMatrix m(n, std::vector<std::complex<double>>(n, 0.0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::complex<double> acc = 0.0;
      for (int k = 0; k < n; ++k) acc += q[i][k] * p[k] * std::conj(q[j][k]);
      m[i][j] = acc;
    }
  }
  return m;
}

// Random point on the unit sphere of C^2, for normalized amplitude pairs.
inline std::array<std::complex<double>, 2> random_amplitude_pair(std::mt19937& rng) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  const double w1 = uni(rng);
  const double phase1 = 2.0 * M_PI * uni(rng);
  const double phase2 = 2.0 * M_PI * uni(rng);
  return {std::polar(std::sqrt(w1), phase1), std::polar(std::sqrt(1.0 - w1), phase2)};
}

}  // namespace oracle
