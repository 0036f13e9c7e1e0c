#pragma once

#include <Eigen/Dense>

#include "ncphase/function_space.hpp"
#include "ncphase/params.hpp"
#include "ncphase/smoothing.hpp"

namespace ncphase {

/// Linear phase-space flow at time t: block rotations of the (x1, y1) pair at
/// frequency omega_plus and the (x2, y2) pair at omega_minus.
struct SymplecticMatrix4 {
  Eigen::Matrix4d A;
  double t = 0;
  double omega_plus = 0;
  double omega_minus = 0;
};

/// The symplectic form: pairs (x_i, y_i), x-row block +I, y-row block -I.
Eigen::Matrix4d omega_form();

/// Evolution matrix A_t. Satisfies Omega*A_t = A_{-t}^T*Omega, det A_t = 1,
/// A_t*A_s = A_{t+s}; at theta = 0 both blocks rotate at omega and the flow is
/// 2*pi/omega periodic; at hbar = 0 the (x2, y2) block freezes (omega_minus = 0).
SymplecticMatrix4 evolution_matrix(double t, const DerivedParams& d);

/// Time-evolved smoothing:
///   pi^-2 Integral d^4w e^{-|w|^2} F(A_{-t} (r + T w)),
/// evaluated by the shared Gauss-Hermite engine. At t = 0 this runs the exact
/// same code path as smooth() (A_0 = identity), bit for bit.
SmoothResult smooth_evolved(const SepGaussFunction& F, const PhaseVector& r, double t,
                            const PhysParams& p, const QuadratureSpec& q,
                            KernelVariant variant = KernelVariant::A);

/// Exact closed form of smooth_evolved on the separable family.
double smooth_evolved_closed_form(const SepGaussFunction& F, const PhaseVector& r, double t,
                                  const PhysParams& p, KernelVariant variant = KernelVariant::A);

/// The hbar = 0 evolved map: every coordinate argument except y2 diverges
/// under the flow (the position shifts blow up as 1/hbar while the frozen
/// block keeps y2 finite), so the value is the {x1, x2, y1} limit of F times a
/// 1-D Gaussian convolution of the y2 factor with shift-coefficient
/// norm^2 = 4 m^2 omega^2 theta. Independent of t and of x1, x2, y1 by
/// construction. Requires theta > 0 and separable F. Exact; no quadrature.
double evolved_hbar0(const SepGaussFunction& F, const PhaseVector& r, double t, double theta,
                     const PhysParams& p);

}  // namespace ncphase
