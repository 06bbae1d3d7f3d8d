#pragma once

#include <array>
#include <complex>
#include <iosfwd>
#include <vector>

#include "sdlab/bin_grid.hpp"
#include "sdlab/evolution.hpp"

namespace sdlab {

// Scale-eps reduced density matrix on bin labels:
//   rho(y, y') = integral over z in [0, eps) of
//                psi(offset + y*eps + z) * conj(psi(offset + y'*eps + z)) dz.
// Hermitian by construction (upper triangle computed, mirrored), trace ~ 1
// for a normalized input state.
class ReducedDensityMatrix {
 public:
  ReducedDensityMatrix(BinGrid grid, std::vector<std::complex<double>> entries);

  const BinGrid& grid() const { return grid_; }
  int size() const { return grid_.bins(); }
  std::complex<double> operator()(int y, int yp) const {
    return entries_[(std::size_t)y * grid_.bins() + yp];
  }
  const std::vector<std::complex<double>>& entries() const { return entries_; }
  double trace() const;

  // {epsilon, offset, domain, B, entries: row-major [re, im]} JSON dump.
  void dump_json(std::ostream& out) const;

 private:
  BinGrid grid_;
  std::vector<std::complex<double>> entries_;
};

// Integrate out the sub-bin coordinate. Per-bin composite Gauss-Legendre
// sharing one set of z-nodes across bins, so the state is sampled once per
// (bin, node) and every matrix entry reuses the samples.
ReducedDensityMatrix reduce(const EvolvedState& state, const BinGrid& grid);

// Fine-scale interference factor I(dk) = integral_0^eps e^{i dk z} dz,
// = eps at dk = 0, with a series fallback for |dk*eps| < 1e-6.
std::complex<double> fine_overlap(double dk, double epsilon);

// Two-plane-wave effective reduced matrix
//   [ |a1|^2                    a1 conj(a2) I(k1-k2)/eps ]
//   [ a2 conj(a1) I(k2-k1)/eps  |a2|^2                   ]
// and its (real, trace-1) eigenvalue pair, descending.
struct TwoPlaneWaveRdm {
  std::array<std::complex<double>, 4> matrix;  // row-major 2x2
  std::array<double, 2> eigenvalues;
};
TwoPlaneWaveRdm two_plane_wave_rdm(std::complex<double> a1, std::complex<double> a2,
                                   int k1, int k2, double epsilon);

}  // namespace sdlab
