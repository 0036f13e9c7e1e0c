#include "ncphase/params.hpp"

#include <cmath>
#include <limits>

namespace ncphase {

void PhysParams::validate(bool for_oracle) const {
  if (!(mass > 0.0) || !std::isfinite(mass))
    throw invalid_params("mass must be positive and finite");
  if (!(omega > 0.0) || !std::isfinite(omega))
    throw invalid_params("omega must be positive and finite");
  if (!(hbar >= 0.0) || !std::isfinite(hbar))
    throw invalid_params("hbar must be non-negative and finite");
  if (!(theta >= 0.0) || !std::isfinite(theta))
    throw invalid_params("theta must be non-negative and finite");
  if (hbar == 0.0 && theta == 0.0)
    throw invalid_params("hbar and theta cannot both be zero");
  if (for_oracle && (hbar == 0.0 || theta == 0.0))
    throw invalid_params("the Hilbert-Schmidt oracle requires hbar > 0 and theta > 0");
}

DerivedParams derive(const PhysParams& p) {
  p.validate();
  const double m = p.mass, om = p.omega, hb = p.hbar, th = p.theta;
  const double mw = m * om;

  DerivedParams d;
  d.rad1 = std::hypot(2.0 * hb, mw * th);
  d.rad2 = std::hypot(2.0 * hb, std::sqrt(2.0) * mw * th);
  d.lambda_plus = 0.5 * (mw * d.rad1 + mw * mw * th);
  // lambda_minus = (mw*rad1 - mw^2*theta)/2 suffers cancellation when
  // theta >> hbar; the product identity lambda_plus*lambda_minus = m^2 w^2 hbar^2
  // gives the stable equivalent (exactly zero at hbar = 0).
  d.lambda_minus = (mw * hb) * (mw * hb) / d.lambda_plus;
  d.lambda_sum = mw * d.rad1;
  d.mu = d.lambda_plus / mw;
  d.gamma_plus = 0.5 * (1.0 + mw * th / d.rad2);
  d.gamma_minus = 0.5 * (1.0 - mw * th / d.rad2);
  d.omega_plus = d.lambda_plus / (m * d.mu);
  d.omega_minus = d.lambda_minus / (m * d.mu);

  // theta*lambda_minus/hbar^2 = theta*m^2*w^2/lambda_plus stays finite as
  // hbar -> 0 (limit 1, so beta -> -inf, the exact degenerate value).
  const double ratio_minus = th * mw * mw / d.lambda_plus;
  if (hb > 0.0) {
    const double u = th * d.lambda_plus / (hb * hb);
    d.beta = u == 0.0 ? 0.0 : -std::log1p(u);
    // Cross-check against ln(1 - theta*lambda_minus/hbar^2) in its factored
    // form 1 - ratio = 2 m w hbar^2 / (lambda_plus (rad1 + m w theta)): pure
    // products, so both forms stay well conditioned everywhere. (Forming
    // 1 - ratio by subtraction instead loses every digit once
    // m*w*theta >> hbar.) beta is an exponent, so the comparison carries an
    // absolute floor at unit scale: a 1e-12 absolute shift in beta moves the
    // weights e^{beta n} by 1e-12 relative.
    const double beta2 =
        std::log(2.0 * mw * hb * hb) - std::log(d.lambda_plus * (d.rad1 + mw * th));
    const double scale = std::max({std::abs(d.beta), std::abs(beta2), 1.0});
    if (std::abs(d.beta - beta2) > 1e-12 * scale)
      throw std::runtime_error("derive: the two analytic forms of beta disagree beyond 1e-12");
  } else {
    d.beta = -std::numeric_limits<double>::infinity();
  }

  d.norm_N = d.mu * d.mu / (mw * d.rad1);
  d.J_det = hb * hb / (4.0 * d.mu * d.mu * d.mu * d.mu);

  if (hb > 0.0) {
    d.K_plus = d.lambda_plus * (4.0 + 2.0 * d.lambda_plus * th / (hb * hb));
    // 2*lambda_minus*theta/hbar^2 = 2*theta*m^2*w^2/lambda_plus, stable at small hbar.
    d.K_minus = d.lambda_minus * (4.0 - 2.0 * ratio_minus);
  } else {
    d.K_plus = std::numeric_limits<double>::infinity();
    d.K_minus = 0.0;
  }
  return d;
}

const char* to_string(LimitRegime r) {
  switch (r) {
    case LimitRegime::generic: return "generic";
    case LimitRegime::near_commutative_config: return "near-commutative-config";
    case LimitRegime::near_classical: return "near-classical";
    case LimitRegime::fully_degenerate: return "fully-degenerate";
  }
  return "unknown";
}

LimitRegime limit_regime(const PhysParams& p, double eps) {
  p.validate();
  if (!(eps > 0.0)) throw invalid_params("limit_regime: eps must be positive");
  const DerivedParams d = derive(p);
  if (d.mu < eps) return LimitRegime::fully_degenerate;
  const double mwt = p.mass * p.omega * p.theta;
  if (p.hbar > 0.0 && mwt / p.hbar < eps) return LimitRegime::near_commutative_config;
  if (mwt > 0.0 && p.hbar / mwt < eps) return LimitRegime::near_classical;
  return LimitRegime::generic;
}

}  // namespace ncphase
