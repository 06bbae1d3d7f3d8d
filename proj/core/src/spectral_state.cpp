#include "sdlab/spectral_state.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <tuple>

#include "sdlab/errors.hpp"
#include "sdlab/quadrature.hpp"

namespace sdlab {

char parity_char(Parity p) {
  switch (p) {
    case Parity::Symmetric: return '+';
    case Parity::Antisymmetric: return '-';
    case Parity::None: return '0';
  }
  return '?';
}

std::string parity_label(Parity p) {
  switch (p) {
    case Parity::Symmetric: return "+";
    case Parity::Antisymmetric: return "-";
    case Parity::None: return "";
  }
  return {};
}

std::optional<Parity> parity_from_label(const std::string& s) {
  if (s == "+" || s == "symmetric") return Parity::Symmetric;
  if (s == "-" || s == "antisymmetric") return Parity::Antisymmetric;
  if (s.empty() || s == "none") return Parity::None;
  return std::nullopt;
}

std::optional<std::size_t> EigenBasis::index_of(int n, Parity parity) const {
  for (std::size_t i = 0; i < states_.size(); ++i) {
    const EigenState& s = states_[i];
    if (s.n() == n && (s.parity() == parity || parity == Parity::None)) return i;
  }
  return std::nullopt;
}

SpectralState::SpectralState(BasisPtr basis, std::vector<Term> terms, double tau,
                             double kept_raw, double discarded, double residual)
    : basis_(std::move(basis)),
      terms_(std::move(terms)),
      tau_(tau),
      kept_weight_raw_(kept_raw),
      discarded_weight_(discarded),
      residual_(residual) {
  max_frequency_ = 1.0;
  for (const Term& t : terms_) {
    max_frequency_ = std::max(max_frequency_, (*basis_)[t.index].max_frequency());
  }
}

double SpectralState::norm_squared() const {
  double s = 0.0;
  for (const Term& t : terms_) s += std::norm(t.c);
  return s;
}

SpectralState SpectralState::from_coefficients(
    BasisPtr basis, std::vector<std::pair<std::size_t, std::complex<double>>> coeffs,
    double tau, Normalize normalize) {
  double total = 0.0;
  for (const auto& [index, c] : coeffs) {
    if (index >= basis->size()) throw ConfigError("coefficient index outside basis");
    total += std::norm(c);
  }
  if (total <= 0.0) throw ConfigError("state has no nonzero coefficients");

  const double input_scale =
      normalize == Normalize::Yes ? 1.0 / std::sqrt(total) : 1.0;

  std::vector<Term> kept;
  double discarded = 0.0;
  double kept_sq = 0.0;
  for (const auto& [index, c] : coeffs) {
    const std::complex<double> cs = c * input_scale;
    if (std::abs(cs) >= tau) {
      kept.push_back({index, cs});
      kept_sq += std::norm(cs);
    } else {
      discarded += std::norm(cs);
    }
  }
  if (kept.empty()) throw ConfigError("all coefficients fall below the threshold");

  if (normalize == Normalize::Yes) {
    const double rescale = 1.0 / std::sqrt(kept_sq);
    for (Term& t : kept) t.c *= rescale;
  }
  std::sort(kept.begin(), kept.end(),
            [](const Term& a, const Term& b) { return a.index < b.index; });
  return SpectralState(std::move(basis), std::move(kept), tau, kept_sq, discarded, 0.0);
}

SpectralState SpectralState::from_labeled_coefficients(
    BasisPtr basis,
    std::span<const std::tuple<int, Parity, std::complex<double>>> coeffs,
    double tau) {
  std::vector<std::pair<std::size_t, std::complex<double>>> indexed;
  for (const auto& [n, parity, c] : coeffs) {
    const auto idx = basis->index_of(n, parity);
    if (!idx) {
      throw ConfigError("basis has no state n = " + std::to_string(n) +
                        ", parity " + parity_label(parity) +
                        "; raise the basis cutoff");
    }
    indexed.emplace_back(*idx, c);
  }
  return from_coefficients(std::move(basis), std::move(indexed), tau);
}

namespace {

std::vector<double> decompose_edges(const PotentialModel& model, double max_freq) {
  const double width = std::min(0.4, 6.0 / std::max(1.0, max_freq));
  if (model.is_ring()) {
    const double pi = std::numbers::pi;
    return quad::partition(-pi, pi, std::array{-0.5 * pi, 0.5 * pi},
                           std::min(width, pi / 8.0));
  }
  return quad::partition(-10.0, 10.0, {}, std::min(width, 0.25));
}

}  // namespace

SpectralState decompose(const WaveFunction& state, BasisPtr basis, double tau,
                        double max_residual) {
  double basis_freq = 1.0;
  for (const EigenState& s : basis->states()) {
    basis_freq = std::max(basis_freq, s.max_frequency());
  }
  const auto edges =
      decompose_edges(basis->model(), std::max(basis_freq, state.max_frequency));
  const auto node_set = quad::nodes(edges);

  std::vector<std::complex<double>> samples(node_set.points.size());
  double input_norm_sq = 0.0;
  for (std::size_t j = 0; j < node_set.points.size(); ++j) {
    samples[j] = state(node_set.points[j]);
    input_norm_sq += node_set.weights[j] * std::norm(samples[j]);
  }

  std::vector<std::pair<std::size_t, std::complex<double>>> coeffs;
  double projected = 0.0;
  for (std::size_t i = 0; i < basis->size(); ++i) {
    const EigenState& mode = (*basis)[i];
    std::complex<double> c = 0.0;
    for (std::size_t j = 0; j < node_set.points.size(); ++j) {
      c += node_set.weights[j] * mode(node_set.points[j]) * samples[j];
    }
    projected += std::norm(c);
    coeffs.emplace_back(i, c);
  }

  const double residual = std::sqrt(std::max(0.0, input_norm_sq - projected));
  if (residual > max_residual) {
    double top = 0.0;
    for (const EigenState& s : basis->states()) top = std::max(top, s.energy());
    throw IncompleteBasisError(
        "projection residual " + std::to_string(residual) +
            " exceeds " + std::to_string(max_residual) +
            "; extend the basis (suggested e_max ~ " + std::to_string(2.0 * top + 20.0) + ")",
        residual, 2.0 * top + 20.0);
  }

  std::vector<SpectralState::Term> kept;
  double discarded = 0.0;
  double kept_sq = 0.0;
  for (const auto& [index, c] : coeffs) {
    if (std::abs(c) >= tau) {
      kept.push_back({index, c});
      kept_sq += std::norm(c);
    } else {
      discarded += std::norm(c);
    }
  }
  if (kept.empty()) {
    throw ConfigError("every projection coefficient fell below the threshold");
  }
  const double rescale = 1.0 / std::sqrt(kept_sq);
  for (auto& t : kept) t.c *= rescale;
  return SpectralState(std::move(basis), std::move(kept), tau, kept_sq, discarded,
                       residual);
}

SpectralState plane_wave_state(BasisPtr basis,
                               std::span<const PlaneWaveComponent> components) {
  const PotentialModel& model = basis->model();
  if (!model.is_ring() || model.v0() != 0.0) {
    throw ConfigError("plane_wave_state requires a free-ring basis");
  }
  const std::complex<double> i_unit(0.0, 1.0);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  std::vector<std::complex<double>> acc(basis->size(), 0.0);
  auto add = [&](int n, Parity p, std::complex<double> c) {
    const auto idx = basis->index_of(n, p);
    if (!idx) {
      throw ConfigError("free-ring basis too small for |k| = " + std::to_string(n));
    }
    acc[*idx] += c;
  };
  for (const PlaneWaveComponent& comp : components) {
    if (comp.k == 0) {
      add(0, Parity::Symmetric, comp.amplitude);
    } else {
      const int m = std::abs(comp.k);
      const double sign = comp.k > 0 ? 1.0 : -1.0;
      add(m, Parity::Symmetric, comp.amplitude * inv_sqrt2);
      add(m, Parity::Antisymmetric, comp.amplitude * i_unit * sign * inv_sqrt2);
    }
  }

  std::vector<std::pair<std::size_t, std::complex<double>>> coeffs;
  for (std::size_t i = 0; i < acc.size(); ++i) {
    if (acc[i] != 0.0) coeffs.emplace_back(i, acc[i]);
  }
  return SpectralState::from_coefficients(std::move(basis), std::move(coeffs), 0.0);
}

}  // namespace sdlab
