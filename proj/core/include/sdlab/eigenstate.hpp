#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sdlab/potential.hpp"

namespace sdlab {

enum class Parity { Symmetric, Antisymmetric, None };

char parity_char(Parity p);                    // '+', '-', '0'
std::string parity_label(Parity p);            // "+", "-", ""
std::optional<Parity> parity_from_label(const std::string&);

// One real, normalized stationary state. Evaluation is pure and
// thread-safe; max_frequency bounds the local wavenumber and drives
// quadrature refinement downstream.
class EigenState {
 public:
  EigenState(int n, Parity parity, double energy, double max_frequency,
             std::function<double(double)> eval)
      : n_(n),
        parity_(parity),
        energy_(energy),
        max_frequency_(max_frequency),
        eval_(std::move(eval)) {}

  int n() const { return n_; }
  Parity parity() const { return parity_; }
  double energy() const { return energy_; }
  double max_frequency() const { return max_frequency_; }
  double operator()(double x) const { return eval_(x); }

 private:
  int n_;
  Parity parity_;
  double energy_;
  double max_frequency_;
  std::function<double(double)> eval_;
};

// An ordered eigenbasis of one potential model. Ring bases are ordered by
// (n, parity) with "+" before "-"; oscillator bases by n.
class EigenBasis {
 public:
  EigenBasis(PotentialModel model, std::vector<EigenState> states)
      : model_(model), states_(std::move(states)) {}

  const PotentialModel& model() const { return model_; }
  std::span<const EigenState> states() const { return states_; }
  std::size_t size() const { return states_.size(); }
  const EigenState& operator[](std::size_t i) const { return states_[i]; }

  std::optional<std::size_t> index_of(int n, Parity parity) const;

 private:
  PotentialModel model_;
  std::vector<EigenState> states_;
};

using BasisPtr = std::shared_ptr<const EigenBasis>;

}  // namespace sdlab
