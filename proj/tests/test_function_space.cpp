#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include <json.hpp>
#include <ncphase/function_space.hpp>

using namespace ncphase;

TEST_CASE("a factor evaluates offset plus Gaussian bump") {
  const GaussFactor f{2.0, 1.0, 0.5, 0.25};
  CHECK(f(1.0) == doctest::Approx(2.25).epsilon(1e-15));
  CHECK(f(0.0) == doctest::Approx(0.25 + 2.0 * std::exp(-4.0)).epsilon(1e-15));
  CHECK_FALSE(f.is_constant());
  const GaussFactor c{0.0, 3.0, 1.0, 0.7};
  CHECK(c(123.0) == 0.7);
  CHECK(c.is_constant());
}

TEST_CASE("separable product evaluates factor by factor") {
  const std::array<GaussFactor, 4> f{GaussFactor{1.0, 0.0, 1.0, 0.0},
                                     GaussFactor{0.0, 0.0, 1.0, 2.0},
                                     GaussFactor{1.0, -1.0, 2.0, 1.0},
                                     GaussFactor{0.0, 0.0, 1.0, 1.0}};
  const SepGaussFunction F = SepGaussFunction::separable(f);
  CHECK(F.is_separable());
  const PhaseVector r{0.5, 7.0, -1.0, 3.0};
  CHECK(F(r) == doctest::Approx(std::exp(-0.25) * 2.0 * 2.0 * 1.0).epsilon(1e-15));
  CHECK(F.factors()[1].offset == 2.0);
}

TEST_CASE("the constant-one function is exactly one everywhere") {
  const SepGaussFunction one = SepGaussFunction::one();
  CHECK(one(PhaseVector{0, 0, 0, 0}) == 1.0);
  CHECK(one(PhaseVector{5, -3, 2, 100}) == 1.0);
}

TEST_CASE("width must be positive") {
  std::array<GaussFactor, 4> f{};
  f[2].width = 0.0;
  CHECK_THROWS_AS(SepGaussFunction::separable(f), std::invalid_argument);
  f[2].width = -1.0;
  CHECK_THROWS_AS(SepGaussFunction::separable(f), std::invalid_argument);
}

TEST_CASE("f_infinity replaces selected factors by their offsets") {
  const std::array<GaussFactor, 4> f{GaussFactor{1.0, 0.0, 1.0, 0.5},
                                     GaussFactor{1.0, 0.0, 1.0, 0.0},
                                     GaussFactor{2.0, 1.0, 1.0, 3.0},
                                     GaussFactor{1.0, 0.0, 1.0, 1.0}};
  const SepGaussFunction F = SepGaussFunction::separable(f);
  const SepGaussFunction G = F.f_infinity({true, false, true, false});
  CHECK(G.factors()[0].is_constant());
  CHECK(G.factors()[0].offset == 0.5);
  CHECK_FALSE(G.factors()[1].is_constant());
  CHECK(G.factors()[2].is_constant());
  CHECK(G.factors()[2].offset == 3.0);
  // Idempotent, and commutes over disjoint direction sets.
  const SepGaussFunction G2 = G.f_infinity({true, false, true, false});
  CHECK(G2(PhaseVector{1, 2, 3, 4}) == G(PhaseVector{1, 2, 3, 4}));
  const SepGaussFunction ab = F.f_infinity({true, false, false, false})
                                  .f_infinity({false, false, true, false});
  CHECK(ab(PhaseVector{1, 2, 3, 4}) == G(PhaseVector{1, 2, 3, 4}));
}

TEST_CASE("callable escape hatch evaluates but rejects structure queries") {
  const SepGaussFunction F =
      SepGaussFunction::callable([](const PhaseVector& r) { return r.x1 + 2.0 * r.y2; });
  CHECK_FALSE(F.is_separable());
  CHECK(F(PhaseVector{1, 0, 0, 3}) == 7.0);
  CHECK_THROWS_AS(F.factors(), std::logic_error);
  CHECK_THROWS_AS(F.f_infinity({true, true, true, true}), std::logic_error);
  CHECK_THROWS_AS(SepGaussFunction::callable(nullptr), std::invalid_argument);
}

TEST_CASE("JSON round trip preserves every factor") {
  const std::array<GaussFactor, 4> f{GaussFactor{1.5, -0.25, 0.75, 0.125},
                                     GaussFactor{0.0, 0.0, 1.0, 1.0},
                                     GaussFactor{2.0, 1.0, 3.0, 0.0},
                                     GaussFactor{0.5, 0.5, 0.5, 0.5}};
  const SepGaussFunction F = SepGaussFunction::separable(f);
  const SepGaussFunction G = SepGaussFunction::from_json(F.to_json());
  for (int i = 0; i < 4; ++i) {
    CHECK(G.factors()[i].amplitude == f[i].amplitude);
    CHECK(G.factors()[i].center == f[i].center);
    CHECK(G.factors()[i].width == f[i].width);
    CHECK(G.factors()[i].offset == f[i].offset);
  }
}

TEST_CASE("JSON parsing applies per-key defaults and validates shape") {
  const auto j = nlohmann::json::parse(
      R"({"factors":[{"a":1},{},{"s":2,"c":1},{"b":-1}]})");
  const SepGaussFunction F = SepGaussFunction::from_json(j);
  CHECK(F.factors()[0].amplitude == 1.0);
  CHECK(F.factors()[0].width == 1.0);
  CHECK(F.factors()[0].offset == 0.0);
  CHECK(F.factors()[2].width == 2.0);
  CHECK(F.factors()[3].center == -1.0);
  CHECK_THROWS(SepGaussFunction::from_json(nlohmann::json::parse(R"({"factors":[{}]})")));
  CHECK_THROWS(SepGaussFunction::from_json(nlohmann::json::parse(R"({})")));
  CHECK_THROWS(SepGaussFunction::from_json(
      nlohmann::json::parse(R"({"factors":[{},{},{},{"s":-1}]})")));
}

TEST_CASE("phase vector indexing is (x1, x2, y1, y2)") {
  PhaseVector r{1, 2, 3, 4};
  CHECK(r[0] == 1.0);
  CHECK(r[1] == 2.0);
  CHECK(r[2] == 3.0);
  CHECK(r[3] == 4.0);
  r[2] = 9.0;
  CHECK(r.y1 == 9.0);
}
