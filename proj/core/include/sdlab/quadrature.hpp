#pragma once

#include <complex>
#include <span>
#include <vector>

namespace sdlab::quad {

// 16-point Gauss-Legendre rule on [-1, 1], exact for polynomials of
// degree <= 31. Nodes are symmetric, weights positive.
std::span<const double> gl16_nodes();
std::span<const double> gl16_weights();

// Ascending subdivision of [a, b]. Interior breakpoints (integrand kinks,
// e.g. potential discontinuities) become piece edges; every piece is then
// split until no wider than max_width.
std::vector<double> partition(double a, double b,
                              std::span<const double> breakpoints,
                              double max_width);

// Flattened composite rule: node positions and weights for GL-16 applied
// to each piece of a partition.
struct NodeSet {
  std::vector<double> points;
  std::vector<double> weights;
};
NodeSet nodes(std::span<const double> edges);

template <typename F>
auto integrate(F&& f, std::span<const double> edges) {
  const auto xs = gl16_nodes();
  const auto ws = gl16_weights();
  using R = decltype(f(0.0));
  R total{};
  for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
    const double mid = 0.5 * (edges[p] + edges[p + 1]);
    const double half = 0.5 * (edges[p + 1] - edges[p]);
    R piece{};
    for (std::size_t i = 0; i < xs.size(); ++i) {
      piece += ws[i] * f(mid + half * xs[i]);
    }
    total += half * piece;
  }
  return total;
}

template <typename F>
auto integrate(F&& f, double a, double b, double max_width) {
  return integrate(static_cast<F&&>(f), partition(a, b, {}, max_width));
}

}  // namespace sdlab::quad
