#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ncphase/function_space.hpp"
#include "ncphase/params.hpp"
#include "ncphase/quadrature.hpp"
#include "ncphase/smoothing.hpp"

namespace ncphase::fock {

/// Thrown when the requested truncation cannot represent the ground state to
/// the required tail mass.
class truncation_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Finite truncation of the configuration-space Fock ladder. States of the
/// quantum Hilbert space are n_max x n_max complex matrices (Hilbert-Schmidt
/// vectors); linear maps on them ("superoperators") are hs_dim x hs_dim
/// matrices acting on the column-major vectorization.
struct FockTruncation {
  int n_max = 12;
  int hs_dim() const { return n_max * n_max; }
  void validate() const {
    if (n_max < 4 || n_max > 64)
      throw std::invalid_argument("n_max must lie in [4, 64]");
  }
};

using HSVector = Eigen::VectorXcd;   ///< vectorized n_max x n_max state
using HSSuperOp = Eigen::MatrixXcd;  ///< hs_dim x hs_dim linear map
using CMat = Eigen::MatrixXcd;

/// Column-major vectorization helpers.
HSVector vec_state(const CMat& m);
CMat mat_state(const HSVector& v, int n_max);

/// Ladder matrices on the configuration Fock space: <n-1|b|n> = sqrt(n).
struct LadderOps {
  CMat b, b_dag;
};
LadderOps build_ladder(const FockTruncation& t);

/// Configuration-space coordinate matrices:
///   x1 = sqrt(theta/2) (b + b_dag),  x2 = i sqrt(theta/2) (b_dag - b).
CMat position_matrix(const FockTruncation& t, double theta, int which);

/// Position (left multiplication) and momentum (scaled adjoint action)
/// superoperators: X_i psi = x_i psi, P1 psi = (hbar/theta)[x2, psi],
/// P2 psi = -(hbar/theta)[x1, psi]. Requires hbar > 0 and theta > 0.
struct PhaseSpaceOps {
  HSSuperOp X1, X2, P1, P2;
};
PhaseSpaceOps build_phase_space_ops(const FockTruncation& t, const PhysParams& p);

/// Annihilation/creation superoperators assembled from the phase-space ops:
///   A1 = (-(l+/h)X1 - iP1 - i(l+/h)X2 + P2)/sqrt(K+)
///   A2 = ( (l-/h)X1 + iP1 - i(l-/h)X2 + P2)/sqrt(K-)
/// and their adjoints.
struct AOps {
  HSSuperOp A1, A2, A1_dag, A2_dag;
};
AOps build_A_ops(const FockTruncation& t, const DerivedParams& d, const PhysParams& p);

/// Normalized ground state: diagonal matrix with entries e^{beta(n+1/2)},
/// unit Hilbert-Schmidt norm. Throws truncation_error unless the relative
/// norm^2 tail satisfies e^{2 beta n_max} < 1e-8.
HSVector ground_state(const FockTruncation& t, const DerivedParams& d, const PhysParams& p);

/// The 4x4 map from phase-space points to coherent labels
/// (Re z1, Re z2, Im z1, Im z2) = xz_map * r.
Eigen::Matrix4d xz_map(const DerivedParams& d, const PhysParams& p);

/// Complex labels (z1, z2) of the point r.
std::array<std::complex<double>, 2> z_label(const PhaseVector& r, const DerivedParams& d,
                                            const PhysParams& p);

/// Unitary Weyl superoperator exp((i/mu)(x1 P1 + x2 P2 - y1 X1 - y2 X2)) via
/// scaling-and-squaring matrix exponential. Guarded to n_max <= 16.
HSSuperOp weyl_op(const PhaseVector& r, const FockTruncation& t, const DerivedParams& d,
                  const PhysParams& p);

/// Action of the same exponential on one state without materializing the
/// exponential (scaled Taylor application); used for batched coherent states.
HSVector weyl_apply(const PhaseVector& r, const HSVector& state, const FockTruncation& t,
                    const DerivedParams& d, const PhysParams& p);

/// Normalized coherent state W(r) psi0.
HSVector coherent_state(const PhaseVector& r, const FockTruncation& t, const DerivedParams& d,
                        const PhysParams& p);

/// Coherent-state overlap <z_r | z_r'> (unit norm at r = r').
std::complex<double> overlap(const PhaseVector& r, const PhaseVector& r_prime,
                             const FockTruncation& t, const DerivedParams& d,
                             const PhysParams& p);

/// Normalized two-mode excitation state (A1_dag)^{n1} (A2_dag)^{n2} psi0,
/// normalized by its computed norm.
HSVector number_state(int n1, int n2, const FockTruncation& t, const DerivedParams& d,
                      const PhysParams& p);

/// Column indices (into the vectorization) of matrix units E_{ij} with
/// i, j <= max_level: the boundary-free subspace used for assertions.
std::vector<int> low_level_columns(const FockTruncation& t, int max_level);

/// Overlap-resolution matrix element:
///   (J/pi^2) Integral d^4r <n1,n2|z_r><z_r|m1,m2>  ~  delta_{n1,m1} delta_{n2,m2}.
/// Evaluated in the label variables w = xz_map * r, where the measure becomes
/// the Gauss-Hermite weight and each coherent overlap is the normally-ordered
/// label polynomial of the truncated realization, cut at the trusted
/// excitation degree n_max / 2 (deeper terms vanish identically for low-lying
/// states and would contribute only factorially amplified boundary noise).
struct ResolutionResult {
  std::complex<double> value;
  double error_estimate;  ///< difference between Gauss-Hermite orders g and g-1
};
ResolutionResult resolution_check(int n1, int n2, int m1, int m2, const FockTruncation& t,
                                  const DerivedParams& d, const PhysParams& p, int gh_order = 6);

/// All resolution matrix elements with excitation labels n1, n2, m1, m2 <=
/// max_level, sharing one excitation table across the whole block. Row/column
/// index is (n1, n2) -> n1 * (max_level + 1) + n2; the exact answer is the
/// identity matrix. error_estimate is the largest entrywise difference
/// between Gauss-Hermite orders gh_order and gh_order - 1.
struct ResolutionMatrix {
  Eigen::MatrixXcd values;
  double error_estimate = 0;
};
ResolutionMatrix resolution_matrix(int max_level, const FockTruncation& t,
                                   const DerivedParams& d, const PhysParams& p,
                                   int gh_order = 6);

/// Compares the quadratic-form Hamiltonian (P^2/2m + m w^2 X^2/2 summed over
/// both degrees) with its normal-ordered form (l+/m) A1+A1 + (l-/m) A2+A2 +
/// (l+ + l-)/2m on the boundary-free subspace, plus spectral diagnostics.
struct HamiltonianCheck {
  double rel_residual;        ///< |(H_quad - H_normal) S|_F / |H_normal S|_F on low levels
  double ground_energy_error; ///< |<psi0|H_quad|psi0> - (l+ + l-)/2m| (relative)
  double gap1_error;          ///< |gap(1,0) - l+/m| (relative)
  double gap2_error;          ///< |gap(0,1) - l-/m| (relative)
};
HamiltonianCheck hamiltonian_check(const FockTruncation& t, const DerivedParams& d,
                                   const PhysParams& p);

/// Heisenberg-picture check of the label flow. U_t is generated by the
/// normal-ordered Hamiltonian with 1/mu as the action scale. The label map
/// asserted against is the exact one induced on (z1, z2) (phase rotations
/// e^{i omega_pm t}, pulled back through xz_map); the deviation of the
/// block-rotation display matrix from that exact map is reported alongside.
struct EvolveCheck {
  double residual_true_flow;      ///< |P(U+ W U - W(L_t r))P|_F, boundary-free P
  double display_flow_deviation;  ///< |L_t - A_{-t}|_F between the two label maps
  double ground_invariance;       ///< | U psi0 - e^{i phi} psi0 |
};
EvolveCheck evolve_check(const PhaseVector& r, double t, const FockTruncation& tr,
                         const DerivedParams& d, const PhysParams& p);

/// Composition phase of two Weyl operators: W(r) W(r') = e^{i phi} W(r + r').
struct WeylCompose {
  double measured_phase;           ///< ground-state expectation of W(r)W(r')W(r+r')^+
  double displacement_phase;       ///< Im(z1 conj(z1') + z2 conj(z2')), the two-mode prediction
  double scaled_symplectic_phase;  ///< -(hbar+theta) mu^2 / 2 * (r, Omega r'), diagnostic only
};
WeylCompose weyl_compose(const PhaseVector& r, const PhaseVector& r_prime,
                         const FockTruncation& t, const DerivedParams& d, const PhysParams& p);

/// Least-squares adjudication of the kernel-width variants against the
/// oracle overlap kernel |<z_r|z_r'>|^2 = exp(-E(r, r')).
struct KernelFitRow {
  PhaseVector r, r_prime;
  double oracle;     ///< |<z_r|z_r'>|^2
  double variant_A;  ///< exp(-|T_A^{-1}(r-r')|^2)
  double variant_B;  ///< exp(-|T_B^{-1}(r-r')|^2)
};
struct KernelFitReport {
  std::vector<KernelFitRow> rows;
  double rss_A, rss_B;
  double max_rel_err_A, max_rel_err_B;
  KernelVariant selected;
};
KernelFitReport kernel_fit(const FockTruncation& t, const DerivedParams& d, const PhysParams& p,
                           int n_pairs, std::uint64_t seed);

/// One named residual check of the aggregated oracle suite.
struct CheckResult {
  std::string name;
  double residual;
  double tolerance;
  bool pass;
};
/// Runs the full battery of oracle residual checks (commutators, ground
/// state, kernel agreement, resolution, Hamiltonian forms, evolution,
/// composition phase). Ordered deterministically; first failure is first
/// in-order entry with pass == false.
std::vector<CheckResult> run_oracle_suite(const FockTruncation& t, const PhysParams& p);

}  // namespace ncphase::fock
