#pragma once

#include <vector>

#include "ncphase/function_space.hpp"
#include "ncphase/params.hpp"
#include "ncphase/quadrature.hpp"
#include "ncphase/smoothing.hpp"

namespace ncphase {

/// Values of the smoothing along a shrinking-scale path together with a
/// two-point Richardson extrapolation of the limit (first order in the scale).
struct LimitPath {
  std::vector<double> scales;
  std::vector<double> values;
  double extrapolated = 0;
};

/// Extrapolates v(s) -> v(0) from the last two samples assuming
/// v(s) = v0 + c s: v0 = (rho * v_last - v_prev) / (rho - 1), rho = s_prev/s_last.
double richardson(const std::vector<double>& scales, const std::vector<double>& values);

/// Path with theta pinned to exactly zero and hbar = s: the smoothing widths
/// shrink with s in every coordinate, so the limit is F(r).
LimitPath limit_theta_first(const SepGaussFunction& F, const PhaseVector& r, double mass,
                            double omega, const std::vector<double>& scales,
                            const QuadratureSpec& q);

/// Path with hbar pinned to exactly zero and theta = s: the position widths
/// are already infinite at every s, so the limit keeps only the position
/// offsets while the momentum smearing shrinks away. Exact (no quadrature).
LimitPath limit_hbar_first(const SepGaussFunction& F, const PhaseVector& r, double mass,
                           double omega, const std::vector<double>& scales);

/// Diagonal path hbar = theta = s through the generic-parameter smoothing.
LimitPath limit_diagonal(const SepGaussFunction& F, const PhaseVector& r, double mass,
                         double omega, const std::vector<double>& scales,
                         const QuadratureSpec& q);

/// Demonstration observable (e^{-x1^2}+1)(e^{-x2^2}+1) e^{-y1^2} e^{-y2^2}:
/// its two limit orderings differ by a factor 4 at the origin.
SepGaussFunction demo_function();

}  // namespace ncphase
