#pragma once

#include <array>
#include <functional>
#include <stdexcept>

#include <json.hpp>

namespace ncphase {

/// A point r = (x1, x2, y1, y2) of the classical phase space R^4.
struct PhaseVector {
  double x1 = 0, x2 = 0, y1 = 0, y2 = 0;

  double operator[](int i) const {
    switch (i) {
      case 0: return x1;
      case 1: return x2;
      case 2: return y1;
      default: return y2;
    }
  }
  double& operator[](int i) {
    switch (i) {
      case 0: return x1;
      case 1: return x2;
      case 2: return y1;
      default: return y2;
    }
  }
};

/// One coordinate factor: value(u) = offset + amplitude * exp(-(u-center)^2/width^2).
/// amplitude == 0 degrades it to the constant offset; the limit at u -> +-inf
/// is always the offset.
struct GaussFactor {
  double amplitude = 0.0;
  double center = 0.0;
  double width = 1.0;
  double offset = 1.0;

  double operator()(double u) const;
  bool is_constant() const { return amplitude == 0.0; }
};

/// A bounded test observable on R^4. The primary family is the product of
/// four Gaussian-plus-constant factors (one per coordinate), which is closed
/// under the Gaussian smoothing maps and has exact limits at infinity. An
/// escape hatch wraps an arbitrary bounded pure callable for quadrature-only
/// evaluation; operations requiring limits or closed forms reject it.
class SepGaussFunction {
 public:
  using Callable = std::function<double(const PhaseVector&)>;

  /// Product-of-factors function. Throws invalid_argument if a width <= 0.
  static SepGaussFunction separable(const std::array<GaussFactor, 4>& f);
  /// Quadrature-only wrapper around an arbitrary bounded pure function.
  static SepGaussFunction callable(Callable f);
  /// The constant-one function (all factors amplitude 0, offset 1).
  static SepGaussFunction one();

  double operator()(const PhaseVector& r) const;
  bool is_separable() const { return !escape_; }

  /// Factor access; throws std::logic_error for callable-backed functions.
  const std::array<GaussFactor, 4>& factors() const;

  /// Replaces the factors selected by dirs (index order x1,x2,y1,y2) with
  /// their limits at infinity (their offsets). Idempotent; commutes over
  /// disjoint subsets. Throws std::logic_error for callable-backed functions.
  SepGaussFunction f_infinity(const std::array<bool, 4>& dirs) const;

  /// JSON form {"factors":[{"a":..,"b":..,"s":..,"c":..} x4]}.
  static SepGaussFunction from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

 private:
  SepGaussFunction() = default;
  std::array<GaussFactor, 4> factors_{};
  Callable escape_;
};

}  // namespace ncphase
