#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "oracles.hpp"
#include "sdlab/quadrature.hpp"

using namespace sdlab;

TEST_CASE("GL16 integrates high-degree polynomials exactly") {
  // integral of x^k over [0, 1] = 1/(k+1); degree 31 is the rule's limit.
  for (int k : {0, 1, 5, 17, 31}) {
    const auto edges = quad::partition(0.0, 1.0, {}, 1.0);
    const double got = quad::integrate([k](double x) { return std::pow(x, k); }, edges);
    CHECK(got == doctest::Approx(1.0 / (k + 1)).epsilon(1e-14));
  }
}

TEST_CASE("composite rule matches Simpson oracle on an oscillatory integrand") {
  auto f = [](double x) { return std::exp(-0.3 * x) * std::sin(7.0 * x); };
  const double expected = oracle::simpson(f, 0.0, 3.0, 200000);
  const double got = quad::integrate(f, 0.0, 3.0, 0.5);
  CHECK(got == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("complex integrands accumulate both parts") {
  auto f = [](double z) { return std::polar(1.0, 2.0 * z); };
  const std::complex<double> got = quad::integrate(f, 0.0, 1.0, 0.3);
  // integral of e^{2iz} over [0,1] = (e^{2i} - 1) / (2i)
  const std::complex<double> expected =
      (std::polar(1.0, 2.0) - 1.0) / std::complex<double>(0.0, 2.0);
  CHECK(std::abs(got - expected) < 1e-14);
}

TEST_CASE("partition honors breakpoints and width cap") {
  const auto edges =
      quad::partition(0.0, 2.0 * std::numbers::pi, std::array{1.5707963267948966},
                      std::numbers::pi / 8.0);
  REQUIRE(edges.size() >= 2);
  CHECK(edges.front() == 0.0);
  CHECK(edges.back() == 2.0 * std::numbers::pi);
  bool has_break = false;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    CHECK(edges[i + 1] - edges[i] <= std::numbers::pi / 8.0 + 1e-12);
    if (edges[i] == doctest::Approx(1.5707963267948966).epsilon(1e-15)) has_break = true;
  }
  CHECK(has_break);
}

TEST_CASE("node set reproduces the segmented integral") {
  auto f = [](double x) { return 1.0 / (1.0 + x * x); };
  const auto edges = quad::partition(-2.0, 2.0, std::array{0.3}, 0.4);
  const auto rule = quad::nodes(edges);
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.points.size(); ++i) {
    acc += rule.weights[i] * f(rule.points[i]);
  }
  CHECK(acc == doctest::Approx(2.0 * std::atan(2.0)).epsilon(1e-13));
}
