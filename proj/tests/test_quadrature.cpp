#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <vector>

#include "qot/quadrature.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("gauss_legendre rule structure") {
  for (int n : {3, 8, 33, 64}) {
    const auto& r = qot::gauss_legendre(n);
    REQUIRE(r.nodes.size() == static_cast<std::size_t>(n));
    REQUIRE(r.weights.size() == static_cast<std::size_t>(n));

    double wsum = 0.0;
    for (double w : r.weights) {
      CHECK(w > 0.0);
      wsum += w;
    }
    CHECK_THAT(wsum, WithinAbs(2.0, 1e-13));

    for (int i = 0; i < n; ++i) {
      CHECK(r.nodes[i] > -1.0);
      CHECK(r.nodes[i] < 1.0);
      if (i > 0) CHECK(r.nodes[i] > r.nodes[i - 1]);
      // symmetric rule: nodes mirror, weights repeat
      CHECK_THAT(r.nodes[i] + r.nodes[n - 1 - i], WithinAbs(0.0, 1e-15));
      CHECK_THAT(r.weights[i] - r.weights[n - 1 - i], WithinAbs(0.0, 1e-15));
    }
  }
}

TEST_CASE("gauss_legendre cache returns stable references") {
  const auto& a = qot::gauss_legendre(64);
  const auto& b = qot::gauss_legendre(64);
  CHECK(&a == &b);
}

TEST_CASE("gauss_legendre integrates polynomials up to degree 2n-1 exactly") {
  // n-point rule is exact through degree 2n-1; check n = 5 on degree 9
  auto moment = [](int k) {
    const auto& r = qot::gauss_legendre(5);
    double s = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i) {
      s += r.weights[i] * std::pow(r.nodes[i], k);
    }
    return s;
  };
  CHECK_THAT(moment(0), WithinAbs(2.0, 1e-14));
  CHECK_THAT(moment(1), WithinAbs(0.0, 1e-14));
  CHECK_THAT(moment(4), WithinAbs(2.0 / 5.0, 1e-14));
  CHECK_THAT(moment(8), WithinAbs(2.0 / 9.0, 1e-14));
  CHECK_THAT(moment(9), WithinAbs(0.0, 1e-14));
}

TEST_CASE("gl_integrate handles shifted intervals and smooth integrands") {
  double e1 = qot::gl_integrate([](double t) { return std::exp(t); }, 0.0, 1.0, 24);
  CHECK_THAT(e1, WithinRel(std::exp(1.0) - 1.0, 1e-14));

  double s = qot::gl_integrate([](double t) { return std::sin(t); }, 0.0, std::numbers::pi, 20);
  CHECK_THAT(s, WithinRel(2.0, 1e-13));

  double q = qot::gl_integrate([](double t) { return 3.0 * t * t; }, -2.0, 5.0, 8);
  CHECK_THAT(q, WithinRel(133.0, 1e-14));
}

TEST_CASE("poly_eval applies Horner's scheme") {
  std::vector<double> c{1.0, 2.0, 3.0};  // 1 + 2t + 3t^2
  CHECK(qot::poly_eval(c, 0.0) == 1.0);
  CHECK(qot::poly_eval(c, 2.0) == 17.0);
  CHECK(qot::poly_eval(c, -1.0) == 2.0);
  CHECK(qot::poly_eval(std::vector<double>{4.5}, 100.0) == 4.5);
}

TEST_CASE("chebyshev_fit_monomial reproduces smooth functions") {
  auto check_fit = [](auto f, double lo, double hi, int n, double tol) {
    std::vector<double> poly = qot::chebyshev_fit_monomial(f, lo, hi, n, 1e-15);
    double worst = 0.0;
    for (int i = 0; i <= 200; ++i) {
      double t = lo + (hi - lo) * i / 200.0;
      double want = f(t);
      double got = qot::poly_eval(poly, t);
      worst = std::max(worst, std::fabs(got - want) / std::max(1.0, std::fabs(want)));
    }
    CHECK(worst < tol);
  };

  check_fit([](double t) { return std::exp(t); }, 0.01, 1.0, 32, 1e-12);
  check_fit([](double t) { return std::cos(3.0 * t + 0.2); }, -0.3, 0.9, 32, 1e-12);
  // the shape the link kernel fits: a gentle reciprocal of an exponential mix
  check_fit([](double t) { return 1.0 / (0.7 + 0.3 * std::exp(-0.4 * (1.0 - t))); }, 0.01, 1.0,
            48, 1e-12);
}

TEST_CASE("chebyshev_fit_monomial truncates exact low-degree polynomials") {
  auto cubic = [](double t) { return 2.0 * t * t * t - t + 0.5; };
  std::vector<double> poly = qot::chebyshev_fit_monomial(cubic, -1.0, 2.0, 16, 1e-14);
  CHECK(poly.size() == 4);
  CHECK_THAT(qot::poly_eval(poly, 1.3), WithinRel(cubic(1.3), 1e-13));
  CHECK_THAT(qot::poly_eval(poly, -0.7), WithinRel(cubic(-0.7), 1e-13));
}
