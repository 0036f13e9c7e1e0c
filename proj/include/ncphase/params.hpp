#pragma once

#include <stdexcept>
#include <string>

namespace ncphase {

/// Error thrown when physical inputs violate the model's domain.
class invalid_params : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// The four physical inputs of the model: two deformation parameters and the
/// oscillator constants. hbar >= 0 (quantum deformation, units of action),
/// theta >= 0 (configuration-space deformation, units of length^2),
/// mass > 0, omega > 0. hbar and theta may be exactly zero individually but
/// not both; the Hilbert-Schmidt oracle additionally needs both > 0.
struct PhysParams {
  double hbar = 1.0;
  double theta = 1.0;
  double mass = 1.0;
  double omega = 1.0;

  /// Throws invalid_params if the invariants fail. With for_oracle=true,
  /// additionally requires hbar > 0 and theta > 0.
  void validate(bool for_oracle = false) const;
};

/// Every derived scalar of the model, computed once from PhysParams.
/// All fields carry working-unit numeric values.
struct DerivedParams {
  double lambda_plus = 0;   ///< (m*omega*rad1 + m^2*omega^2*theta)/2
  double lambda_minus = 0;  ///< m^2*omega^2*hbar^2/lambda_plus (stable form)
  double K_plus = 0;        ///< lambda_plus*(4 + 2*lambda_plus*theta/hbar^2); +inf at hbar=0
  double K_minus = 0;       ///< lambda_minus*(4 - 2*lambda_minus*theta/hbar^2)
  double mu = 0;            ///< lambda_plus/(m*omega), the model's action scale
  double gamma_plus = 0;    ///< (1 + m*omega*theta/rad2)/2
  double gamma_minus = 0;   ///< (1 - m*omega*theta/rad2)/2
  double omega_plus = 0;    ///< lambda_plus/(m*mu)
  double omega_minus = 0;   ///< lambda_minus/(m*mu)
  double beta = 0;          ///< ln(1 - theta*lambda_minus/hbar^2) <= 0; -inf at hbar=0
  double norm_N = 0;        ///< mu^2/(m*omega*rad1); equals hbar^4/(2 hbar^2 lambda_minus - theta lambda_minus^2) for hbar>0
  double J_det = 0;         ///< hbar^2/(4 mu^4)
  double lambda_sum = 0;    ///< lambda_plus + lambda_minus = m*omega*rad1
  double rad1 = 0;          ///< sqrt(4 hbar^2 + m^2 omega^2 theta^2), frequency-splitting scale
  double rad2 = 0;          ///< sqrt(4 hbar^2 + 2 m^2 omega^2 theta^2), anisotropy scale
};

/// Computes all derived scalars. Throws invalid_params on invalid inputs
/// (negative entries, hbar = theta = 0). beta is evaluated as
/// -log1p(theta*lambda_plus/hbar^2) and cross-checked against the factored
/// form of ln(1 - theta*lambda_minus/hbar^2) to 1e-12 (with an absolute
/// floor at unit scale, beta being an exponent); disagreement throws
/// std::runtime_error.
DerivedParams derive(const PhysParams& p);

/// Which limit branch a parameter point probes.
enum class LimitRegime {
  generic,
  near_commutative_config,  ///< theta*m*omega/hbar < eps: quantum mechanics on commutative plane
  near_classical,           ///< hbar/(theta*m*omega) < eps: non-quantum non-commutative plane
  fully_degenerate,         ///< mu < eps: both deformations removed
};

const char* to_string(LimitRegime r);

/// Classifies the point by comparing mu and the deformation ratio against eps
/// (eps > 0, working units). The mu test runs first: if both deformations are
/// small the point is degenerate regardless of their ratio.
LimitRegime limit_regime(const PhysParams& p, double eps);

}  // namespace ncphase
