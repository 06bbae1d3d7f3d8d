#include "sdlab/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace sdlab::quad {
namespace {

constexpr int kOrder = 16;

// Legendre P_n(x) and its derivative via the three-term recurrence.
std::pair<double, double> legendre(int n, double x) {
  double p0 = 1.0, p1 = x;
  for (int k = 2; k <= n; ++k) {
    const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  const double dp = n * (x * p1 - p0) / (x * x - 1.0);
  return {p1, dp};
}

struct Rule {
  std::array<double, kOrder> nodes;
  std::array<double, kOrder> weights;
};

// Newton iteration from the Chebyshev-like initial guess; converges to
// machine precision in a handful of steps.
Rule build_rule() {
  Rule r;
  for (int i = 0; i < kOrder; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (kOrder + 0.5));
    for (int iter = 0; iter < 64; ++iter) {
      const auto [p, dp] = legendre(kOrder, x);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const auto [p, dp] = legendre(kOrder, x);
    (void)p;
    r.nodes[i] = x;
    r.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  std::reverse(r.nodes.begin(), r.nodes.end());
  std::reverse(r.weights.begin(), r.weights.end());
  return r;
}

const Rule& rule() {
  static const Rule r = build_rule();
  return r;
}

}  // namespace

std::span<const double> gl16_nodes() { return rule().nodes; }
std::span<const double> gl16_weights() { return rule().weights; }

std::vector<double> partition(double a, double b,
                              std::span<const double> breakpoints,
                              double max_width) {
  std::vector<double> cuts{a, b};
  for (double c : breakpoints) {
    if (c > a && c < b) cuts.push_back(c);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<double> edges;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double lo = cuts[i], hi = cuts[i + 1];
    const int pieces = std::max(1, (int)std::ceil((hi - lo) / max_width));
    for (int j = 0; j < pieces; ++j) {
      edges.push_back(lo + (hi - lo) * j / pieces);
    }
  }
  edges.push_back(b);
  return edges;
}

NodeSet nodes(std::span<const double> edges) {
  const auto xs = gl16_nodes();
  const auto ws = gl16_weights();
  NodeSet out;
  out.points.reserve((edges.size() - 1) * kOrder);
  out.weights.reserve((edges.size() - 1) * kOrder);
  for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
    const double mid = 0.5 * (edges[p] + edges[p + 1]);
    const double half = 0.5 * (edges[p + 1] - edges[p]);
    for (int i = 0; i < kOrder; ++i) {
      out.points.push_back(mid + half * xs[i]);
      out.weights.push_back(half * ws[i]);
    }
  }
  return out;
}

}  // namespace sdlab::quad
