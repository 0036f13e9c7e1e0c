#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include <ncphase/dynamics.hpp>
#include <ncphase/params.hpp>
#include <ncphase/smoothing.hpp>

using namespace ncphase;

namespace {

const PhysParams kDefaults{1.0, 1.0, 1.0, 1.0};

SepGaussFunction gauss_x1() {
  return SepGaussFunction::separable({GaussFactor{1.0, 0.0, 1.0, 0.0},
                                      GaussFactor{0.0, 0.0, 1.0, 1.0},
                                      GaussFactor{0.0, 0.0, 1.0, 1.0},
                                      GaussFactor{0.0, 0.0, 1.0, 1.0}});
}

}  // namespace

TEST_CASE("symplectic form pairs (x_i, y_i)") {
  const Eigen::Matrix4d O = omega_form();
  Eigen::Matrix4d expect = Eigen::Matrix4d::Zero();
  expect(0, 2) = 1;
  expect(1, 3) = 1;
  expect(2, 0) = -1;
  expect(3, 1) = -1;
  CHECK((O - expect).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("evolution matrix rotates the two blocks at the split frequencies") {
  const DerivedParams d = derive(kDefaults);
  const SymplecticMatrix4 m = evolution_matrix(0.7, d);
  CHECK(m.t == 0.7);
  CHECK(m.omega_plus == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(m.omega_minus == doctest::Approx(0.38196601125010515).epsilon(1e-15));
  // Golden trigonometric slots at t = 0.7 (50-digit arithmetic).
  CHECK(m.A(0, 0) == doctest::Approx(0.76484218728448843).epsilon(1e-14));
  CHECK(m.A(0, 2) == doctest::Approx(-0.64421768723769105).epsilon(1e-14));
  CHECK(m.A(2, 0) == doctest::Approx(0.64421768723769105).epsilon(1e-14));
  CHECK(m.A(2, 2) == doctest::Approx(0.76484218728448843).epsilon(1e-14));
  CHECK(m.A(1, 1) == doctest::Approx(0.96446742597103844).epsilon(1e-14));
  CHECK(m.A(1, 3) == doctest::Approx(-0.26420178697503068).epsilon(1e-14));
  CHECK(m.A(3, 1) == doctest::Approx(0.26420178697503068).epsilon(1e-14));
  CHECK(m.A(3, 3) == doctest::Approx(0.96446742597103844).epsilon(1e-14));
  // The (x1, x2) slots do not mix across blocks.
  CHECK(m.A(0, 1) == 0.0);
  CHECK(m.A(0, 3) == 0.0);
  CHECK(m.A(1, 0) == 0.0);
  CHECK(m.A(1, 2) == 0.0);
}

TEST_CASE("evolution matrices form a symplectic one-parameter group") {
  const DerivedParams d = derive(kDefaults);
  const Eigen::Matrix4d O = omega_form();
  CHECK((evolution_matrix(0.0, d).A - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff() ==
        0.0);
  std::mt19937_64 eng(99);
  std::uniform_real_distribution<double> ts(-8.0, 8.0);
  for (int i = 0; i < 50; ++i) {
    const double t = ts(eng), s = ts(eng);
    const Eigen::Matrix4d At = evolution_matrix(t, d).A;
    const Eigen::Matrix4d As = evolution_matrix(s, d).A;
    const Eigen::Matrix4d Ats = evolution_matrix(t + s, d).A;
    CHECK((At * As - Ats).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(std::abs(At.determinant() - 1.0) < 1e-12);
    const Eigen::Matrix4d Amt = evolution_matrix(-t, d).A;
    CHECK((O * At - Amt.transpose() * O).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((At * Amt - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("at theta = 0 both blocks rotate together with period 2 pi / omega") {
  const PhysParams p{0.7, 0.0, 1.3, 0.8};
  const DerivedParams d = derive(p);
  CHECK(std::abs(d.omega_plus - d.omega_minus) < 1e-14);
  const double period = 2.0 * M_PI / p.omega;
  CHECK((evolution_matrix(period, d).A - Eigen::Matrix4d::Identity())
            .cwiseAbs()
            .maxCoeff() < 1e-12);
}

TEST_CASE("evolved smoothing at t = 0 runs the identical code path as smooth") {
  QuadratureSpec q;
  const PhaseVector r{0.4, -0.3, 0.2, 0.1};
  const SmoothResult a = smooth(gauss_x1(), r, kDefaults, q);
  const SmoothResult b = smooth_evolved(gauss_x1(), r, 0.0, kDefaults, q);
  CHECK(a.value == b.value);  // bit for bit
  CHECK(a.error_estimate == b.error_estimate);
}

TEST_CASE("evolved single-axis Gaussian matches the golden closed form") {
  // At t = 0.7 the x1 row of A_{-t} rotates the base point to alpha and the
  // kernel row to squared norm kn2; the exact value is
  // exp(-alpha^2/(1+kn2))/sqrt(1+kn2).
  const PhaseVector r{0.4, -0.3, 0.2, 0.1};
  const double golden = 0.36658114891366767;
  const double alpha = 0.43478041236133358;
  const double kn2 = 6.0531029633397129;
  CHECK(std::exp(-alpha * alpha / (1.0 + kn2)) / std::sqrt(1.0 + kn2) ==
        doctest::Approx(golden).epsilon(1e-14));
  CHECK(smooth_evolved_closed_form(gauss_x1(), r, 0.7, kDefaults) ==
        doctest::Approx(golden).epsilon(1e-13));
  QuadratureSpec q;
  q.hermite_order = 32;
  CHECK(smooth_evolved(gauss_x1(), r, 0.7, kDefaults, q).value ==
        doctest::Approx(golden).epsilon(1e-9));
}

TEST_CASE("evolved closed form rejects callable-backed functions") {
  const SepGaussFunction c =
      SepGaussFunction::callable([](const PhaseVector&) { return 1.0; });
  CHECK_THROWS(smooth_evolved_closed_form(c, PhaseVector{}, 0.5, kDefaults));
}

TEST_CASE("hbar = 0 evolved map is independent of t and of x1, x2, y1") {
  const std::array<GaussFactor, 4> f{GaussFactor{1.0, 0.3, 1.0, 0.5},
                                     GaussFactor{0.7, -0.2, 1.3, 1.0},
                                     GaussFactor{1.0, 0.0, 1.0, 0.7},
                                     GaussFactor{1.0, 0.2, 1.1, 0.3}};
  const SepGaussFunction F = SepGaussFunction::separable(f);
  const PhysParams p{0.0, 1.0, 1.0, 1.0};
  const PhaseVector r{0.1, 0.2, 0.3, -0.3};
  const double v0 = evolved_hbar0(F, r, 0.3, 1.0, p);
  for (double t : {0.0, 1.7, -2.2, 100.0})
    CHECK(evolved_hbar0(F, r, t, 1.0, p) == v0);
  for (int axis : {0, 1, 2}) {
    PhaseVector moved = r;
    moved[axis] += 5.0;
    CHECK(evolved_hbar0(F, moved, 0.3, 1.0, p) == v0);
  }
  PhaseVector ymoved = r;
  ymoved.y2 += 0.5;
  CHECK(evolved_hbar0(F, ymoved, 0.3, 1.0, p) != v0);
}

TEST_CASE("hbar = 0 evolved map equals the static map of the y1-limit function") {
  const std::array<GaussFactor, 4> f{GaussFactor{1.0, 0.3, 1.0, 0.5},
                                     GaussFactor{0.7, -0.2, 1.3, 1.0},
                                     GaussFactor{1.0, 0.0, 1.0, 0.7},
                                     GaussFactor{1.0, 0.2, 1.1, 0.3}};
  const SepGaussFunction F = SepGaussFunction::separable(f);
  const PhysParams p{0.0, 1.0, 1.0, 1.0};
  const PhaseVector r{0.1, 0.2, 0.3, -0.3};
  // The frozen block keeps y2; the rotating block additionally washes y1 out.
  const SepGaussFunction G = F.f_infinity({false, false, true, false});
  CHECK(evolved_hbar0(F, r, 0.9, 1.0, p) ==
        doctest::Approx(smooth_hbar0(G, r, 1.0, p)).epsilon(1e-15));
}

TEST_CASE("hbar = 0 evolved map validates inputs") {
  const PhysParams p{0.0, 1.0, 1.0, 1.0};
  CHECK_THROWS(evolved_hbar0(SepGaussFunction::one(), PhaseVector{}, 0.1, 0.0, p));
  CHECK_THROWS(evolved_hbar0(
      SepGaussFunction::callable([](const PhaseVector&) { return 1.0; }),
      PhaseVector{}, 0.1, 1.0, p));
}
