#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include <ncphase/limits.hpp>

using namespace ncphase;

TEST_CASE("richardson reproduces a linear model exactly") {
  // v(s) = 3 + 2 s must extrapolate to exactly v0 = 3 from any two samples.
  const std::vector<double> scales{0.1, 0.05, 0.025};
  const std::vector<double> values{3.2, 3.1, 3.05};
  CHECK(richardson(scales, values) == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("richardson validates its input") {
  CHECK_THROWS(richardson({}, {}));
  CHECK_THROWS(richardson({0.1}, {1.0}));
  CHECK_THROWS(richardson({0.1, 0.2}, {1.0}));          // length mismatch
  CHECK_THROWS(richardson({0.1, 0.2}, {1.0, 2.0}));     // scales must decrease
  CHECK_THROWS(richardson({0.1, -0.05}, {1.0, 2.0}));   // scales must be positive
  CHECK_THROWS(richardson({0.1, 0.1}, {1.0, 2.0}));     // strictly decreasing
}

TEST_CASE("demo function evaluates to 4 at the origin") {
  const SepGaussFunction F = demo_function();
  CHECK(F(PhaseVector{}) == doctest::Approx(4.0).epsilon(1e-15));
  // (e^{-1}+1)^2 * e^{-1} * e^{-1} at (1,1,1,1).
  const double e1 = std::exp(-1.0);
  CHECK(F(PhaseVector{1, 1, 1, 1}) ==
        doctest::Approx((e1 + 1) * (e1 + 1) * e1 * e1).epsilon(1e-14));
}

TEST_CASE("theta-first ordering recovers the function value") {
  const std::vector<double> scales{1e-1, 1e-2, 1e-3, 1e-4};
  QuadratureSpec q;
  q.hermite_order = 40;
  const LimitPath path =
      limit_theta_first(demo_function(), PhaseVector{}, 1.0, 1.0, scales, q);
  REQUIRE(path.values.size() == scales.size());
  CHECK(path.scales == scales);
  // Values increase toward F(0) = 4 as the smearing shrinks.
  for (std::size_t i = 1; i < path.values.size(); ++i)
    CHECK(path.values[i] > path.values[i - 1]);
  CHECK(path.extrapolated == doctest::Approx(4.0).epsilon(1e-3));
}

TEST_CASE("hbar-first ordering keeps only the position offsets") {
  const std::vector<double> scales{1e-1, 1e-2, 1e-3, 1e-4};
  const LimitPath path =
      limit_hbar_first(demo_function(), PhaseVector{}, 1.0, 1.0, scales);
  REQUIRE(path.values.size() == scales.size());
  // Position factors collapse to their offsets (1 each); the momentum
  // Gaussians recover e^{0} = 1 as theta shrinks. Limit = 1, not 4.
  CHECK(path.extrapolated == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(std::abs(4.0 - path.extrapolated) > 2.5);
}

TEST_CASE("the two orderings disagree away from commutativity") {
  const std::vector<double> scales{1e-2, 1e-3, 1e-4};
  QuadratureSpec q;
  q.hermite_order = 40;
  const double theta_first =
      limit_theta_first(demo_function(), PhaseVector{}, 1.0, 1.0, scales, q).extrapolated;
  const double hbar_first =
      limit_hbar_first(demo_function(), PhaseVector{}, 1.0, 1.0, scales).extrapolated;
  CHECK(std::abs(theta_first - hbar_first) > 2.5);
}

TEST_CASE("diagonal path stays between the two orderings") {
  const std::vector<double> scales{1e-1, 1e-2, 1e-3};
  QuadratureSpec q;
  q.hermite_order = 40;
  const LimitPath path =
      limit_diagonal(demo_function(), PhaseVector{}, 1.0, 1.0, scales, q);
  REQUIRE(path.values.size() == scales.size());
  for (double v : path.values) {
    CHECK(v > 0.9);
    CHECK(v < 4.0);
  }
}
