#pragma once

#include <optional>

#include "sdlab/potential.hpp"

namespace sdlab {

// Measurement precision structure: disjoint half-open bins
// [offset + y*eps, offset + (y+1)*eps), y = 0 .. B-1, covering the domain.
// Ring grids satisfy B*eps = 2*pi exactly; interval grids tile
// [offset, offset + B*eps] containing [-L, L].
class BinGrid {
 public:
  enum class Domain { Ring, Interval };

  // B = round(2*pi/eps); construction fails unless |B*eps - 2*pi| < 1e-12.
  static BinGrid ring(double epsilon, double offset = 0.0);
  // Bins covering [-half_width, half_width]. Default offset centers bin
  // edges at -eps/2 + integer multiples so one bin straddles x = 0
  // symmetrically; an explicit offset must still put the tiling over the
  // interval.
  static BinGrid interval(double epsilon, double half_width,
                          std::optional<double> offset = std::nullopt);
  // Grid matching a model's domain.
  static BinGrid for_model(const PotentialModel& model, double epsilon,
                           std::optional<double> offset = std::nullopt);

  Domain domain() const { return domain_; }
  double epsilon() const { return epsilon_; }
  double offset() const { return offset_; }
  int bins() const { return bins_; }
  double bin_left(int y) const { return offset_ + y * epsilon_; }

 private:
  BinGrid(Domain d, double eps, double offset, int bins)
      : domain_(d), epsilon_(eps), offset_(offset), bins_(bins) {}

  Domain domain_;
  double epsilon_;
  double offset_;
  int bins_;
};

}  // namespace sdlab
