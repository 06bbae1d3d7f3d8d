#include "sdlab/ring.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "sdlab/errors.hpp"
#include "sdlab/quadrature.hpp"

namespace sdlab {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = 0.5 * kPi;
// |E - V| below this routes to the linear-solution limit of the
// constant-potential propagator.
constexpr double kDegenerateWindow = 1e-9;
constexpr double kScanStep = 0.01;

struct Transfer {
  // (psi, psi') propagator over an arc of length d at constant potential.
  double a, b, c, d;
};

Transfer arc_transfer(double energy, double v, double length) {
  const double w = energy - v;
  if (w > kDegenerateWindow) {
    const double k = std::sqrt(w);
    const double s = std::sin(k * length), c = std::cos(k * length);
    return {c, s / k, -k * s, c};
  }
  if (w < -kDegenerateWindow) {
    const double kappa = std::sqrt(-w);
    const double s = std::sinh(kappa * length), c = std::cosh(kappa * length);
    return {c, s / kappa, kappa * s, c};
  }
  return {1.0, length, 0.0, 1.0};
}

struct State2 {
  double psi, dpsi;
};

State2 apply(const Transfer& m, State2 s) {
  return {m.a * s.psi + m.b * s.dpsi, m.c * s.psi + m.d * s.dpsi};
}

// Propagate from x = 0 to x = pi: barrier arc [0, pi/2] at V0, then the
// free arc [pi/2, pi].
State2 propagate_half(double v0, double energy, State2 start) {
  State2 s = apply(arc_transfer(energy, v0, kHalfPi), start);
  return apply(arc_transfer(energy, 0.0, kHalfPi), s);
}

double discriminant(double v0, Parity parity, double energy) {
  if (parity == Parity::Symmetric) {
    return propagate_half(v0, energy, {1.0, 0.0}).dpsi;
  }
  return propagate_half(v0, energy, {0.0, 1.0}).psi;
}

double bisect_level(double v0, Parity parity, double lo, double hi) {
  double flo = discriminant(v0, parity, lo);
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double width = hi - lo;
    if (width < std::max(1e-12, 8.0 * std::numeric_limits<double>::epsilon() * mid)) {
      return mid;
    }
    const double fmid = discriminant(v0, parity, mid);
    if (fmid == 0.0) return mid;
    if ((flo < 0.0) != (fmid < 0.0)) {
      hi = mid;
    } else {
      lo = mid;
      flo = fmid;
    }
  }
  throw ConvergenceError("ring level bisection did not converge", lo, hi);
}

std::vector<double> scan_levels(double v0, Parity parity, double e_max) {
  std::vector<double> roots;
  double e_prev = 0.0;
  double d_prev = discriminant(v0, parity, e_prev);
  const long steps = std::lround(std::ceil(e_max / kScanStep));
  for (long i = 1; i <= steps; ++i) {
    const double e = std::min(i * kScanStep, e_max);
    const double d = discriminant(v0, parity, e);
    if (d == 0.0) {
      roots.push_back(e);
    } else if ((d_prev < 0.0) != (d < 0.0)) {
      roots.push_back(bisect_level(v0, parity, e_prev, e));
    }
    e_prev = e;
    d_prev = d;
  }
  return roots;
}

// Fundamental in-barrier solutions: even one with (psi, psi')(0) = (1, 0),
// odd one with (0, 1).
State2 barrier_even(double energy, double v0, double u) {
  const double w = energy - v0;
  if (w > kDegenerateWindow) {
    const double k = std::sqrt(w);
    return {std::cos(k * u), -k * std::sin(k * u)};
  }
  if (w < -kDegenerateWindow) {
    const double kappa = std::sqrt(-w);
    return {std::cosh(kappa * u), kappa * std::sinh(kappa * u)};
  }
  return {1.0, 0.0};
}

State2 barrier_odd(double energy, double v0, double u) {
  const double w = energy - v0;
  if (w > kDegenerateWindow) {
    const double k = std::sqrt(w);
    return {std::sin(k * u) / k, std::cos(k * u)};
  }
  if (w < -kDegenerateWindow) {
    const double kappa = std::sqrt(-w);
    return {std::sinh(kappa * u) / kappa, std::cosh(kappa * u)};
  }
  return {u, 1.0};
}

// Free-arc solutions pinned to the boundary condition at pi:
// even: cos(k(u - pi)), odd: sin(k(u - pi))/k, so psi(pi) or psi'(pi)
// reduces to the outer amplitude directly.
State2 free_even(double energy, double u) {
  const double k = std::sqrt(energy);
  return {std::cos(k * (u - kPi)), -k * std::sin(k * (u - kPi))};
}

State2 free_odd(double energy, double u) {
  const double k = std::sqrt(energy);
  return {std::sin(k * (u - kPi)) / k, std::cos(k * (u - kPi))};
}

EigenState build_free_ring_state(int n, Parity parity) {
  const double inv_sqrt_2pi = 1.0 / std::sqrt(2.0 * kPi);
  const double inv_sqrt_pi = 1.0 / std::sqrt(kPi);
  if (n == 0) {
    return EigenState(0, Parity::Symmetric, 0.0, 1.0,
                      [inv_sqrt_2pi](double) { return inv_sqrt_2pi; });
  }
  const double energy = (double)n * n;
  if (parity == Parity::Symmetric) {
    return EigenState(n, parity, energy, (double)n, [n, inv_sqrt_pi](double x) {
      return std::cos(n * x) * inv_sqrt_pi;
    });
  }
  return EigenState(n, parity, energy, (double)n, [n, inv_sqrt_pi](double x) {
    return std::sin(n * x) * inv_sqrt_pi;
  });
}

EigenState build_ring_state(double v0, int n, Parity parity, double energy) {
  const bool even = parity == Parity::Symmetric;
  const State2 in = even ? barrier_even(energy, v0, kHalfPi)
                         : barrier_odd(energy, v0, kHalfPi);
  const State2 out = even ? free_even(energy, kHalfPi) : free_odd(energy, kHalfPi);

  // Match at pi/2 by cross-scaling: inner amplitude from the outer solution
  // and vice versa makes one continuity equation exact; the other holds to
  // the eigenvalue tolerance. Pick whichever pairing is better conditioned.
  const double scale = std::max(1.0, std::max(energy, std::abs(energy - v0)));
  double amp_in, amp_out;
  if (std::abs(out.psi * in.psi) * scale >= std::abs(out.dpsi * in.dpsi) / scale) {
    amp_in = out.psi;
    amp_out = in.psi;
  } else {
    amp_in = out.dpsi;
    amp_out = in.dpsi;
  }
  // Sign convention: psi(pi) > 0 for even, psi'(pi) > 0 for odd; both
  // reduce to amp_out > 0 with the boundary-pinned free solutions.
  if (amp_out < 0.0) {
    amp_in = -amp_in;
    amp_out = -amp_out;
  }

  auto half_value = [=](double u) {
    if (u <= kHalfPi) {
      return amp_in * (even ? barrier_even(energy, v0, u).psi
                            : barrier_odd(energy, v0, u).psi);
    }
    return amp_out * (even ? free_even(energy, u).psi : free_odd(energy, u).psi);
  };

  const auto edges = quad::partition(0.0, kPi, std::array{kHalfPi}, kPi / 8.0);
  const double norm_sq =
      2.0 * quad::integrate([&](double u) { const double p = half_value(u); return p * p; },
                            edges);
  const double inv_norm = 1.0 / std::sqrt(norm_sq);

  const double max_freq =
      std::max(1.0, std::sqrt(std::max(energy, std::abs(energy - v0))));
  return EigenState(n, parity, energy, max_freq, [=](double x) {
    const double w = wrap_ring(x);
    const double u = std::abs(w);
    double value = inv_norm * half_value(u);
    if (!even && w < 0.0) value = -value;
    return value;
  });
}

double barrier_height(const PotentialModel& model) {
  if (!model.is_ring()) {
    throw ConfigError("ring spectrum requires a ring model");
  }
  return model.kind() == PotentialModel::Kind::PiecewiseRing ? model.v0() : 0.0;
}

}  // namespace

double ring_discriminant(const PotentialModel& model, Parity parity, double energy) {
  return discriminant(barrier_height(model), parity, energy);
}

std::vector<RingLevel> ring_spectrum(const PotentialModel& model, double e_max) {
  const double v0 = barrier_height(model);
  if (!(e_max > 0.0)) throw ConfigError("e_max must be positive");

  std::vector<RingLevel> levels;
  if (v0 == 0.0) {
    levels.push_back({0, Parity::Symmetric, 0.0});
    for (int n = 1; (double)n * n <= e_max; ++n) {
      levels.push_back({n, Parity::Symmetric, (double)n * n});
      levels.push_back({n, Parity::Antisymmetric, (double)n * n});
    }
  } else {
    const auto sym = scan_levels(v0, Parity::Symmetric, e_max);
    const auto anti = scan_levels(v0, Parity::Antisymmetric, e_max);
    for (std::size_t k = 0; k < sym.size(); ++k) {
      levels.push_back({(int)k, Parity::Symmetric, sym[k]});
    }
    for (std::size_t k = 0; k < anti.size(); ++k) {
      levels.push_back({(int)k + 1, Parity::Antisymmetric, anti[k]});
    }
    std::sort(levels.begin(), levels.end(), [](const RingLevel& a, const RingLevel& b) {
      if (a.n != b.n) return a.n < b.n;
      return a.parity == Parity::Symmetric && b.parity == Parity::Antisymmetric;
    });
  }
  if (levels.empty()) {
    throw ConfigError("no ring levels at or below e_max; raise e_max");
  }
  return levels;
}

EigenState ring_eigenstate(const PotentialModel& model, int n, Parity parity) {
  const double v0 = barrier_height(model);
  if (n < 0 || (n == 0 && parity != Parity::Symmetric) || parity == Parity::None) {
    throw ConfigError("no ring state with n = " + std::to_string(n) + ", parity " +
                      parity_label(parity));
  }
  if (v0 == 0.0) return build_free_ring_state(n, parity);

  // The level sits near n^2 (+ up to V0); scan generously past it.
  double e_max = (double)(n + 1) * (n + 1) + v0 + 2.0;
  for (int attempt = 0; attempt < 4; ++attempt) {
    for (const RingLevel& level : ring_spectrum(model, e_max)) {
      if (level.n == n && level.parity == parity) {
        return build_ring_state(v0, n, parity, level.energy);
      }
    }
    e_max *= 2.0;
  }
  throw ConfigError("ring level (n = " + std::to_string(n) + ", parity " +
                    parity_label(parity) + ") not found");
}

EigenBasis ring_basis(const PotentialModel& model, double e_max) {
  const double v0 = barrier_height(model);
  std::vector<EigenState> states;
  for (const RingLevel& level : ring_spectrum(model, e_max)) {
    states.push_back(v0 == 0.0
                         ? build_free_ring_state(level.n, level.parity)
                         : build_ring_state(v0, level.n, level.parity, level.energy));
  }
  return EigenBasis(model, std::move(states));
}

}  // namespace sdlab
