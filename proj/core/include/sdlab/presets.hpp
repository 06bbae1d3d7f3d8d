#pragma once

#include <complex>
#include <string>
#include <variant>
#include <vector>

#include "sdlab/eigenstate.hpp"
#include "sdlab/spectral_state.hpp"

namespace sdlab {

// Initial-state description as it appears in configurations: either a
// single plane wave or an explicit coefficient list over the eigenbasis.
struct PlaneWaveSpec {
  int k = 1;
};
struct LabeledCoefficient {
  int n = 0;
  Parity parity = Parity::None;
  std::complex<double> c;
};
using StateSpec = std::variant<PlaneWaveSpec, std::vector<LabeledCoefficient>>;

std::string describe(const StateSpec& spec);

// Threshold for representing an initial state in the eigenbasis when the
// representation is an internal step (entropy curves, densities) rather
// than the reported decomposition table.
inline constexpr double kSynthesisTau = 1e-9;

PotentialModel make_model(const std::string& name, double v0);

// Materialize a state spec over the given model. Plane waves on the free
// ring map to exact coefficients; on a piecewise ring they are projected
// onto the basis below e_max.
SpectralState make_state(const PotentialModel& model, const StateSpec& spec,
                         double e_max, double tau = kSynthesisTau);

// Canned configurations reproducing the bundled demonstration outputs.
struct Preset {
  std::string name;
  std::string command;  // decompose | entropy-curve | density
  std::string model;    // free | ring | ho
  double v0 = 0.0;
  double epsilon = 0.0;  // 0 = not used by the command
  StateSpec state;
  double t0 = 0.0, t1 = 0.0;
  int steps = 0;                // curve commands: steps+1 samples
  std::vector<double> times;    // density command
  double tau = 1e-4;            // decompose display threshold
  double e_max = 100.0;         // basis cutoff
};

const Preset* find_preset(const std::string& name);
std::vector<std::string> preset_names();

}  // namespace sdlab
