#include "ncphase/limits.hpp"

#include <stdexcept>

namespace ncphase {

namespace {
void check_scales(const std::vector<double>& scales) {
  if (scales.size() < 2) throw std::invalid_argument("need at least two scales");
  for (double s : scales)
    if (!(s > 0.0)) throw std::invalid_argument("scales must be positive");
  for (std::size_t i = 1; i < scales.size(); ++i)
    if (!(scales[i] < scales[i - 1]))
      throw std::invalid_argument("scales must be strictly decreasing");
}
}  // namespace

double richardson(const std::vector<double>& scales, const std::vector<double>& values) {
  if (scales.size() != values.size()) throw std::invalid_argument("size mismatch");
  check_scales(scales);
  const std::size_t n = scales.size();
  const double rho = scales[n - 2] / scales[n - 1];
  return (rho * values[n - 1] - values[n - 2]) / (rho - 1.0);
}

LimitPath limit_theta_first(const SepGaussFunction& F, const PhaseVector& r, double mass,
                            double omega, const std::vector<double>& scales,
                            const QuadratureSpec& q) {
  check_scales(scales);
  LimitPath out;
  out.scales = scales;
  for (double s : scales) out.values.push_back(smooth_theta0(F, r, s, mass, omega, q).value);
  out.extrapolated = richardson(out.scales, out.values);
  return out;
}

LimitPath limit_hbar_first(const SepGaussFunction& F, const PhaseVector& r, double mass,
                           double omega, const std::vector<double>& scales) {
  check_scales(scales);
  LimitPath out;
  out.scales = scales;
  PhysParams p;
  p.mass = mass;
  p.omega = omega;
  for (double s : scales) out.values.push_back(smooth_hbar0(F, r, s, p));
  out.extrapolated = richardson(out.scales, out.values);
  return out;
}

LimitPath limit_diagonal(const SepGaussFunction& F, const PhaseVector& r, double mass,
                         double omega, const std::vector<double>& scales,
                         const QuadratureSpec& q) {
  check_scales(scales);
  LimitPath out;
  out.scales = scales;
  for (double s : scales)
    out.values.push_back(smooth(F, r, PhysParams{s, s, mass, omega}, q).value);
  out.extrapolated = richardson(out.scales, out.values);
  return out;
}

SepGaussFunction demo_function() {
  return SepGaussFunction::separable({GaussFactor{1.0, 0.0, 1.0, 1.0},
                                      GaussFactor{1.0, 0.0, 1.0, 1.0},
                                      GaussFactor{1.0, 0.0, 1.0, 0.0},
                                      GaussFactor{1.0, 0.0, 1.0, 0.0}});
}

}  // namespace ncphase
