#pragma once

#include <Eigen/Dense>

#include "ncphase/function_space.hpp"
#include "ncphase/params.hpp"
#include "ncphase/quadrature.hpp"

namespace ncphase {

/// The two internally-consistent choices for the width constants of the
/// smoothing kernel (they differ in which radical enters the fourth root;
/// profile A is the one selected by the operator-oracle kernel fit and is
/// the default everywhere).
enum class KernelVariant { A, B };

/// Signed coefficients of the two linear forms that shift the coordinates:
///   f(u, v) = f_coeff_plus * u + f_coeff_minus * v
///   g(u, v) = g_coeff_plus * u + g_coeff_minus * v   (g_coeff_minus < 0)
/// The four coordinates are shifted by
///   (x1, x2, y1, y2) += (f(w1,w2), f(w3,w4), g(w3,w4), -g(w1,w2)).
struct KernelWidths {
  double f_coeff_plus = 0;
  double f_coeff_minus = 0;
  double g_coeff_plus = 0;
  double g_coeff_minus = 0;
};

/// Width constants for the given parameters. Requires hbar > 0 (the hbar = 0
/// branch has its own analytic map, smooth_hbar0). theta = 0 is regular:
/// f-coefficients become sqrt(hbar/(m*omega)), g-coefficients +-sqrt(hbar*m*omega).
KernelWidths kernel_widths(const DerivedParams& d, const PhysParams& p,
                           KernelVariant variant = KernelVariant::A);

/// 4x4 matrix T with the coordinate shift as rows: shift = T * w for the
/// standard-Gaussian vector w, row order (x1, x2, y1, y2).
Eigen::Matrix4d shift_matrix(const KernelWidths& k);

/// Result of a quadrature-backed evaluation. error_estimate is the difference
/// between the full-order and half-order tensor rules plus a rounding floor;
/// converged reports error_estimate <= rel_tol * max(|value|, 1e-300).
struct SmoothResult {
  double value = 0;
  double error_estimate = 0;
  bool converged = true;
};

/// The composed quantize/de-quantize Gaussian smoothing evaluated by
/// tensor-product Gauss-Hermite quadrature:
///   pi^-2 Integral d^4w e^{-|w|^2} F(r + T w).
/// Requires hbar > 0.
SmoothResult smooth(const SepGaussFunction& F, const PhaseVector& r, const PhysParams& p,
                    const QuadratureSpec& q, KernelVariant variant = KernelVariant::A);

/// Exact Gaussian-convolution value on the separable family (rejects
/// callable-backed F). Agrees with smooth() within its error estimate.
double smooth_closed_form(const SepGaussFunction& F, const PhaseVector& r, const PhysParams& p,
                          KernelVariant variant = KernelVariant::A);

/// The theta = 0 specialization (two independent oscillators: position
/// shift-coefficient norm^2 = 2*hbar/(m*omega), momentum shift-coefficient
/// norm^2 = 2*hbar*m*omega), evaluated through the same engine with theta
/// set exactly to zero.
SmoothResult smooth_theta0(const SepGaussFunction& F, const PhaseVector& r, double hbar,
                           double mass, double omega, const QuadratureSpec& q);

/// The hbar = 0 analytic branch: position dependence washes out to the factor
/// offsets (the limit at infinity) and each momentum coordinate is convolved
/// with a Gaussian of shift-coefficient norm^2 = 4 m^2 omega^2 theta.
/// Requires theta > 0 and a separable F. Exact; no quadrature.
double smooth_hbar0(const SepGaussFunction& F, const PhaseVector& r, double theta,
                    const PhysParams& p);

/// Monte Carlo estimate with standard error; bitwise deterministic for a
/// given seed independent of thread count (fixed-size blocks, pairwise
/// combination in block order).
struct MCEstimate {
  double value = 0;
  double std_error = 0;
};
MCEstimate smooth_mc(const SepGaussFunction& F, const PhaseVector& r, const PhysParams& p,
                     const QuadratureSpec& q, KernelVariant variant = KernelVariant::A);

namespace detail {
/// Shared quadrature engine: Gauss-Hermite value of
///   E[F(base + K w)] over the standard Gaussian w (weight e^{-|w|^2}/pi^2).
double gh_engine(const SepGaussFunction& F, const Eigen::Vector4d& base,
                 const Eigen::Matrix4d& K, int order);
/// Shared exact engine for separable F: subset-expansion Gaussian integral.
double closed_form_engine(const std::array<GaussFactor, 4>& factors, const Eigen::Vector4d& base,
                          const Eigen::Matrix4d& K);
/// Full result with error estimate from order halving.
SmoothResult gh_result(const SepGaussFunction& F, const Eigen::Vector4d& base,
                       const Eigen::Matrix4d& K, const QuadratureSpec& q);
Eigen::Vector4d to_vec(const PhaseVector& r);
}  // namespace detail

}  // namespace ncphase
