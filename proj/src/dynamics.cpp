#include "ncphase/dynamics.hpp"

#include <cmath>

namespace ncphase {

Eigen::Matrix4d omega_form() {
  Eigen::Matrix4d O = Eigen::Matrix4d::Zero();
  O(0, 2) = 1.0;
  O(1, 3) = 1.0;
  O(2, 0) = -1.0;
  O(3, 1) = -1.0;
  return O;
}

SymplecticMatrix4 evolution_matrix(double t, const DerivedParams& d) {
  const double cp = std::cos(d.omega_plus * t), sp = std::sin(d.omega_plus * t);
  const double cm = std::cos(d.omega_minus * t), sm = std::sin(d.omega_minus * t);
  SymplecticMatrix4 m;
  m.t = t;
  m.omega_plus = d.omega_plus;
  m.omega_minus = d.omega_minus;
  m.A = Eigen::Matrix4d::Zero();
  m.A(0, 0) = cp;  m.A(0, 2) = -sp;   // x1 row
  m.A(2, 0) = sp;  m.A(2, 2) = cp;    // y1 row
  m.A(1, 1) = cm;  m.A(1, 3) = -sm;   // x2 row
  m.A(3, 1) = sm;  m.A(3, 3) = cm;    // y2 row
  return m;
}

SmoothResult smooth_evolved(const SepGaussFunction& F, const PhaseVector& r, double t,
                            const PhysParams& p, const QuadratureSpec& q, KernelVariant variant) {
  const DerivedParams d = derive(p);
  const Eigen::Matrix4d T = shift_matrix(kernel_widths(d, p, variant));
  const Eigen::Matrix4d Amt = evolution_matrix(-t, d).A;
  return detail::gh_result(F, Amt * detail::to_vec(r), Amt * T, q);
}

double smooth_evolved_closed_form(const SepGaussFunction& F, const PhaseVector& r, double t,
                                  const PhysParams& p, KernelVariant variant) {
  if (!F.is_separable())
    throw std::logic_error("smooth_evolved_closed_form requires a separable function");
  const DerivedParams d = derive(p);
  const Eigen::Matrix4d T = shift_matrix(kernel_widths(d, p, variant));
  const Eigen::Matrix4d Amt = evolution_matrix(-t, d).A;
  return detail::closed_form_engine(F.factors(), Amt * detail::to_vec(r), Amt * T);
}

double evolved_hbar0(const SepGaussFunction& F, const PhaseVector& r, double /*t*/, double theta,
                     const PhysParams& p) {
  if (!(theta > 0.0)) throw invalid_params("evolved_hbar0 requires theta > 0");
  if (!F.is_separable())
    throw std::logic_error("evolved_hbar0 requires a separable function (limit at infinity needed)");
  const double mw = p.mass * p.omega;
  const double k2 = 4.0 * mw * mw * theta;
  const auto& f = F.factors();
  double value = f[0].offset * f[1].offset * f[2].offset;  // {x1, x2, y1} -> limits
  const GaussFactor& fy2 = f[3];
  if (fy2.is_constant()) return value * fy2.offset;
  const double s2 = fy2.width * fy2.width + k2;
  const double dy = r.y2 - fy2.center;
  return value * (fy2.offset + fy2.amplitude * fy2.width / std::sqrt(s2) * std::exp(-dy * dy / s2));
}

}  // namespace ncphase
