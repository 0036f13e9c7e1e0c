#include "ncphase/fock.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include "ncphase/dynamics.hpp"

namespace ncphase::fock {

namespace {

using complexd = std::complex<double>;
constexpr complexd I_unit{0.0, 1.0};

PhaseVector add(const PhaseVector& a, const PhaseVector& b) {
  return {a.x1 + b.x1, a.x2 + b.x2, a.y1 + b.y1, a.y2 + b.y2};
}

Eigen::Vector4d to_vec4(const PhaseVector& r) {
  return Eigen::Vector4d(r.x1, r.x2, r.y1, r.y2);
}

PhaseVector from_vec4(const Eigen::Vector4d& v) { return {v[0], v[1], v[2], v[3]}; }

/// Left and right multiplication superoperators on column-major
/// vectorizations: vec(M psi) = (I (x) M) vec(psi), vec(psi M) = (M^T (x) I) vec(psi).
HSSuperOp left_mult(const CMat& m) {
  const auto n = m.rows();
  return Eigen::kroneckerProduct(CMat::Identity(n, n), m);
}

HSSuperOp right_mult(const CMat& m) {
  const auto n = m.rows();
  return Eigen::kroneckerProduct(m.transpose(), CMat::Identity(n, n));
}

/// Generator of the Weyl superoperator at phase-space point r.
HSSuperOp weyl_generator(const PhaseVector& r, const FockTruncation& t, const DerivedParams& d,
                         const PhysParams& p) {
  const PhaseSpaceOps ops = build_phase_space_ops(t, p);
  return (I_unit / d.mu) *
         (r.x1 * ops.P1 + r.x2 * ops.P2 - r.y1 * ops.X1 - r.y2 * ops.X2);
}

/// Frobenius norm of the sub-block of m on the given rows and columns.
double restricted_norm(const HSSuperOp& m, const std::vector<int>& rows,
                       const std::vector<int>& cols) {
  double s = 0.0;
  for (int c : cols)
    for (int r : rows) s += std::norm(m(r, c));
  return std::sqrt(s);
}

/// Frobenius norm of the selected columns of m.
double column_norm(const HSSuperOp& m, const std::vector<int>& cols) {
  double s = 0.0;
  for (int c : cols) s += m.col(c).squaredNorm();
  return std::sqrt(s);
}

/// Energy expectation Re <psi, H psi> for a unit HS vector.
double energy(const HSSuperOp& h, const HSVector& psi) {
  return std::real(psi.dot(h * psi));
}

/// Applies exp(g) to a vector by scaling-and-squaring on the vector: g is
/// halved until its 1-norm is at most one, the Taylor series is summed to
/// machine precision, and the application is repeated 2^s times.
HSVector apply_exp(const HSSuperOp& g, const HSVector& state) {
  const double norm1 = g.cwiseAbs().colwise().sum().maxCoeff();
  int s = 0;
  while ((norm1 / std::exp2(s)) > 1.0 && s < 60) ++s;
  const HSSuperOp gs = g / std::exp2(s);
  HSVector v = state;
  const long reps = 1L << s;
  for (long rep = 0; rep < reps; ++rep) {
    HSVector acc = v;
    HSVector term = v;
    for (int k = 1; k <= 40; ++k) {
      term = (gs * term) / static_cast<double>(k);
      acc += term;
      if (term.norm() <= 1e-18 * acc.norm()) break;
    }
    v = acc;
  }
  return v;
}

/// Unnormalized excitation vectors B[j][k] = (A1+)^j (A2+)^k psi0 for
/// j + k <= j_max.
std::vector<std::vector<HSVector>> excitation_table(const AOps& a, const HSVector& psi0,
                                                    int j_max) {
  std::vector<std::vector<HSVector>> b(j_max + 1);
  b[0].resize(j_max + 1);
  b[0][0] = psi0;
  for (int k = 1; k <= j_max; ++k) b[0][k] = a.A2_dag * b[0][k - 1];
  for (int j = 1; j <= j_max; ++j) {
    const int kmax = j_max - j;
    b[j].resize(kmax + 1);
    b[j][0] = a.A1_dag * b[j - 1][0];
    for (int k = 1; k <= kmax; ++k) b[j][k] = a.A2_dag * b[j][k - 1];
  }
  return b;
}

/// Coefficients c[j][k] = <state, B[j][k]> / (j! k!), so that
/// <state | ztilde> = sum c[j][k] z1^j z2^k for the unnormalized coherent
/// vector ztilde = exp(z1 A1+ + z2 A2+) psi0. For an excitation state of
/// level (n1, n2) the only nonvanishing exact coefficient is (j, k) =
/// (n1, n2); every other entry measures residual non-orthogonality of the
/// truncated realization.
std::vector<std::vector<complexd>> bra_coefficients(
    const HSVector& state, const std::vector<std::vector<HSVector>>& table) {
  std::vector<std::vector<complexd>> c(table.size());
  for (std::size_t j = 0; j < table.size(); ++j) {
    c[j].resize(table[j].size());
    double jk_fact = 1.0;
    for (int q = 2; q <= static_cast<int>(j); ++q) jk_fact *= q;
    double running = jk_fact;  // j! * k!
    for (std::size_t k = 0; k < table[j].size(); ++k) {
      if (k > 0) running *= static_cast<double>(k);
      c[j][k] = state.dot(table[j][k]) / running;
    }
  }
  return c;
}

/// Gram block of the label-space resolution integral at one tensor
/// Gauss-Hermite order. After the substitution w = J r the node coordinates
/// are exactly the coherent labels, w = (Re z1, Re z2, Im z1, Im z2), the
/// measure (det J / pi^2) d^4 r becomes the standard Gaussian absorbed by the
/// quadrature weights, and the integrand is the product of two label
/// polynomials. Entry (i, j) integrates <bras[i] | ztilde><ztilde | bras[j]>;
/// the exact answer is the identity.
Eigen::MatrixXcd resolution_block_at_order(
    const std::vector<std::vector<std::vector<complexd>>>& coefs, int order, int j_max) {
  const GaussHermite& gh = GaussHermite::get(order);
  const int m = static_cast<int>(coefs.size());
  Eigen::MatrixXcd total = Eigen::MatrixXcd::Zero(m, m);
  std::vector<complexd> z1_pow(j_max + 1), z2_pow(j_max + 1);
  Eigen::VectorXcd vals(m);
  for (int i0 = 0; i0 < order; ++i0)
    for (int i1 = 0; i1 < order; ++i1)
      for (int i2 = 0; i2 < order; ++i2)
        for (int i3 = 0; i3 < order; ++i3) {
          const complexd z1{gh.nodes[i0], gh.nodes[i2]};
          const complexd z2{gh.nodes[i1], gh.nodes[i3]};
          z1_pow[0] = 1.0;
          z2_pow[0] = 1.0;
          for (int q = 1; q <= j_max; ++q) {
            z1_pow[q] = z1_pow[q - 1] * z1;
            z2_pow[q] = z2_pow[q - 1] * z2;
          }
          const double w =
              gh.weights[i0] * gh.weights[i1] * gh.weights[i2] * gh.weights[i3];
          for (int s = 0; s < m; ++s) {
            complexd acc{0.0, 0.0};
            for (std::size_t j = 0; j < coefs[s].size(); ++j)
              for (std::size_t k = 0; k < coefs[s][j].size(); ++k)
                acc += coefs[s][j][k] * z1_pow[j] * z2_pow[k];
            vals[static_cast<Eigen::Index>(s)] = acc;
          }
          total.noalias() += w * vals * vals.adjoint();
        }
  return total;
}

/// Series depth for the resolution integrand. The coherent expansion is cut
/// at the trusted excitation degree n_max / 2 (extended to cover the
/// requested levels): for low-lying bras every exact coefficient beyond the
/// bra's own level vanishes identically, so deeper terms contribute nothing
/// but truncation-boundary noise, which the Gaussian label moments amplify
/// factorially. Stopping at the trusted degree keeps the exact content and
/// drops only that noise.
int resolution_series_depth(const FockTruncation& t, int needed_level) {
  return std::max(t.n_max / 2, needed_level);
}

/// Deterministic uniform draw in [-1, 1] from a 64-bit engine.
double uniform_pm1(std::mt19937_64& eng) {
  const double u = static_cast<double>((eng() >> 11) + 1) * 0x1.0p-53;
  return 2.0 * u - 1.0;
}

PhaseVector random_in_ball(std::mt19937_64& eng) {
  while (true) {
    const PhaseVector r{uniform_pm1(eng), uniform_pm1(eng), uniform_pm1(eng), uniform_pm1(eng)};
    if (r.x1 * r.x1 + r.x2 * r.x2 + r.y1 * r.y1 + r.y2 * r.y2 <= 1.0) return r;
  }
}

}  // namespace

HSVector vec_state(const CMat& m) {
  return Eigen::Map<const HSVector>(m.data(), m.size());
}

CMat mat_state(const HSVector& v, int n_max) {
  if (v.size() != static_cast<Eigen::Index>(n_max) * n_max)
    throw std::invalid_argument("state size does not match truncation");
  return Eigen::Map<const CMat>(v.data(), n_max, n_max);
}

LadderOps build_ladder(const FockTruncation& t) {
  t.validate();
  CMat b = CMat::Zero(t.n_max, t.n_max);
  for (int n = 1; n < t.n_max; ++n) b(n - 1, n) = std::sqrt(static_cast<double>(n));
  return {b, b.adjoint()};
}

CMat position_matrix(const FockTruncation& t, double theta, int which) {
  if (theta <= 0.0) throw std::invalid_argument("position_matrix requires theta > 0");
  const LadderOps l = build_ladder(t);
  const double s = std::sqrt(theta / 2.0);
  if (which == 1) return s * (l.b + l.b_dag);
  if (which == 2) return I_unit * s * (l.b_dag - l.b);
  throw std::invalid_argument("which must be 1 or 2");
}

PhaseSpaceOps build_phase_space_ops(const FockTruncation& t, const PhysParams& p) {
  p.validate(true);
  const CMat x1 = position_matrix(t, p.theta, 1);
  const CMat x2 = position_matrix(t, p.theta, 2);
  const double c = p.hbar / p.theta;
  PhaseSpaceOps ops;
  ops.X1 = left_mult(x1);
  ops.X2 = left_mult(x2);
  ops.P1 = c * (left_mult(x2) - right_mult(x2));
  ops.P2 = -c * (left_mult(x1) - right_mult(x1));
  return ops;
}

AOps build_A_ops(const FockTruncation& t, const DerivedParams& d, const PhysParams& p) {
  const PhaseSpaceOps ops = build_phase_space_ops(t, p);
  if (!(d.K_plus > 0.0) || !std::isfinite(d.K_plus) || !(d.K_minus > 0.0))
    throw std::invalid_argument("annihilation operators need finite positive K_plus, K_minus");
  const double lp = d.lambda_plus / p.hbar;
  const double lm = d.lambda_minus / p.hbar;
  AOps a;
  a.A1 = (-lp * ops.X1 - I_unit * ops.P1 - I_unit * lp * ops.X2 + ops.P2) / std::sqrt(d.K_plus);
  a.A2 = (lm * ops.X1 + I_unit * ops.P1 - I_unit * lm * ops.X2 + ops.P2) / std::sqrt(d.K_minus);
  a.A1_dag = a.A1.adjoint();
  a.A2_dag = a.A2.adjoint();
  return a;
}

HSVector ground_state(const FockTruncation& t, const DerivedParams& d, const PhysParams& p) {
  t.validate();
  p.validate(true);
  const double tail = std::exp(2.0 * d.beta * t.n_max);
  if (!(tail < 1e-8)) {
    const int needed = static_cast<int>(std::ceil(std::log(1e-8) / (2.0 * d.beta)));
    throw truncation_error(
        "ground-state norm tail " + std::to_string(tail) +
        " exceeds 1e-8 at n_max=" + std::to_string(t.n_max) +
        "; increase n_max to at least " + std::to_string(needed));
  }
  CMat m = CMat::Zero(t.n_max, t.n_max);
  for (int n = 0; n < t.n_max; ++n) m(n, n) = std::exp(d.beta * (n + 0.5));
  HSVector v = vec_state(m);
  return v / v.norm();
}

Eigen::Matrix4d xz_map(const DerivedParams& d, const PhysParams& p) {
  p.validate(true);
  const double sp = std::sqrt(d.K_plus);
  const double sm = std::sqrt(d.K_minus);
  const double c = 1.0 / (2.0 * d.mu * d.lambda_sum);
  Eigen::Matrix4d j;
  j << d.lambda_minus * sp, 0.0, 0.0, -p.hbar * sp,
      -d.lambda_plus * sm, 0.0, 0.0, -p.hbar * sm,
      0.0, d.lambda_minus * sp, p.hbar * sp, 0.0,
      0.0, d.lambda_plus * sm, -p.hbar * sm, 0.0;
  return c * j;
}

std::array<complexd, 2> z_label(const PhaseVector& r, const DerivedParams& d,
                                const PhysParams& p) {
  const Eigen::Vector4d w = xz_map(d, p) * to_vec4(r);
  return {complexd{w[0], w[2]}, complexd{w[1], w[3]}};
}

HSSuperOp weyl_op(const PhaseVector& r, const FockTruncation& t, const DerivedParams& d,
                  const PhysParams& p) {
  if (t.n_max > 16)
    throw std::invalid_argument("weyl_op limited to n_max <= 16; use weyl_apply for actions");
  return weyl_generator(r, t, d, p).exp();
}

HSVector weyl_apply(const PhaseVector& r, const HSVector& state, const FockTruncation& t,
                    const DerivedParams& d, const PhysParams& p) {
  return apply_exp(weyl_generator(r, t, d, p), state);
}

HSVector coherent_state(const PhaseVector& r, const FockTruncation& t, const DerivedParams& d,
                        const PhysParams& p) {
  return weyl_apply(r, ground_state(t, d, p), t, d, p);
}

std::complex<double> overlap(const PhaseVector& r, const PhaseVector& r_prime,
                             const FockTruncation& t, const DerivedParams& d,
                             const PhysParams& p) {
  const HSVector psi0 = ground_state(t, d, p);
  const HSVector a = weyl_apply(r, psi0, t, d, p);
  const HSVector b = weyl_apply(r_prime, psi0, t, d, p);
  return a.dot(b);
}

HSVector number_state(int n1, int n2, const FockTruncation& t, const DerivedParams& d,
                      const PhysParams& p) {
  if (n1 < 0 || n2 < 0 || n1 + n2 > 2 * (t.n_max - 1))
    throw std::invalid_argument("excitation level outside the truncation");
  const AOps a = build_A_ops(t, d, p);
  HSVector v = ground_state(t, d, p);
  for (int q = 0; q < n1; ++q) v = a.A1_dag * v;
  for (int q = 0; q < n2; ++q) v = a.A2_dag * v;
  const double n = v.norm();
  if (!(n > 0.0)) throw truncation_error("excitation state vanished in the truncation");
  return v / n;
}

std::vector<int> low_level_columns(const FockTruncation& t, int max_level) {
  if (max_level < 0 || max_level >= t.n_max)
    throw std::invalid_argument("max_level outside the truncation");
  std::vector<int> cols;
  cols.reserve(static_cast<std::size_t>(max_level + 1) * (max_level + 1));
  for (int j = 0; j <= max_level; ++j)
    for (int i = 0; i <= max_level; ++i) cols.push_back(i + t.n_max * j);
  return cols;
}

ResolutionResult resolution_check(int n1, int n2, int m1, int m2, const FockTruncation& t,
                                  const DerivedParams& d, const PhysParams& p, int gh_order) {
  if (gh_order < 3 || gh_order > 64)
    throw std::invalid_argument("gh_order must lie in [3, 64]");
  const AOps a = build_A_ops(t, d, p);
  const HSVector psi0 = ground_state(t, d, p);
  const int j_max = resolution_series_depth(t, std::max(n1 + n2, m1 + m2));
  const auto table = excitation_table(a, psi0, j_max);
  std::vector<std::vector<std::vector<complexd>>> coefs;
  coefs.push_back(bra_coefficients(number_state(n1, n2, t, d, p), table));
  const bool same = (n1 == m1 && n2 == m2);
  if (!same) coefs.push_back(bra_coefficients(number_state(m1, m2, t, d, p), table));
  const int col = same ? 0 : 1;
  const Eigen::MatrixXcd hi = resolution_block_at_order(coefs, gh_order, j_max);
  const Eigen::MatrixXcd lo = resolution_block_at_order(coefs, gh_order - 1, j_max);
  return {hi(0, col), std::abs(hi(0, col) - lo(0, col))};
}

ResolutionMatrix resolution_matrix(int max_level, const FockTruncation& t,
                                   const DerivedParams& d, const PhysParams& p,
                                   int gh_order) {
  if (gh_order < 3 || gh_order > 64)
    throw std::invalid_argument("gh_order must lie in [3, 64]");
  if (max_level < 0 || 2 * max_level > t.n_max)
    throw std::invalid_argument("max_level must lie in [0, n_max / 2]");
  const AOps a = build_A_ops(t, d, p);
  const HSVector psi0 = ground_state(t, d, p);
  const int j_max = resolution_series_depth(t, 2 * max_level);
  const auto table = excitation_table(a, psi0, j_max);
  std::vector<std::vector<std::vector<complexd>>> coefs;
  coefs.reserve(static_cast<std::size_t>(max_level + 1) * (max_level + 1));
  for (int n1 = 0; n1 <= max_level; ++n1)
    for (int n2 = 0; n2 <= max_level; ++n2)
      coefs.push_back(bra_coefficients(number_state(n1, n2, t, d, p), table));
  const Eigen::MatrixXcd hi = resolution_block_at_order(coefs, gh_order, j_max);
  const Eigen::MatrixXcd lo = resolution_block_at_order(coefs, gh_order - 1, j_max);
  return {hi, (hi - lo).cwiseAbs().maxCoeff()};
}

HamiltonianCheck hamiltonian_check(const FockTruncation& t, const DerivedParams& d,
                                   const PhysParams& p) {
  const PhaseSpaceOps ops = build_phase_space_ops(t, p);
  const AOps a = build_A_ops(t, d, p);
  const int dim = t.hs_dim();
  const HSSuperOp h_quad =
      (ops.P1 * ops.P1 + ops.P2 * ops.P2) / (2.0 * p.mass) +
      0.5 * p.mass * p.omega * p.omega * (ops.X1 * ops.X1 + ops.X2 * ops.X2);
  const HSSuperOp h_normal = (d.lambda_plus / p.mass) * (a.A1_dag * a.A1) +
                             (d.lambda_minus / p.mass) * (a.A2_dag * a.A2) +
                             (d.lambda_sum / (2.0 * p.mass)) * HSSuperOp::Identity(dim, dim);
  const auto cols = low_level_columns(t, t.n_max / 2);
  const HSSuperOp diff = h_quad - h_normal;
  HamiltonianCheck out;
  out.rel_residual = column_norm(diff, cols) / column_norm(h_normal, cols);

  const double e0 = d.lambda_sum / (2.0 * p.mass);
  const HSVector psi0 = ground_state(t, d, p);
  const HSVector n10 = number_state(1, 0, t, d, p);
  const HSVector n01 = number_state(0, 1, t, d, p);
  const double e_psi0 = energy(h_quad, psi0);
  out.ground_energy_error = std::abs(e_psi0 - e0) / e0;
  out.gap1_error =
      std::abs((energy(h_quad, n10) - e_psi0) - d.lambda_plus / p.mass) / (d.lambda_plus / p.mass);
  out.gap2_error = std::abs((energy(h_quad, n01) - e_psi0) - d.lambda_minus / p.mass) /
                   (d.lambda_minus / p.mass);
  return out;
}

EvolveCheck evolve_check(const PhaseVector& r, double t, const FockTruncation& tr,
                         const DerivedParams& d, const PhysParams& p) {
  const AOps a = build_A_ops(tr, d, p);
  const int dim = tr.hs_dim();
  const HSSuperOp h_normal = (d.lambda_plus / p.mass) * (a.A1_dag * a.A1) +
                             (d.lambda_minus / p.mass) * (a.A2_dag * a.A2) +
                             (d.lambda_sum / (2.0 * p.mass)) * HSSuperOp::Identity(dim, dim);
  const HSSuperOp u = ((-I_unit * t / d.mu) * h_normal).exp();
  const HSSuperOp w = weyl_op(r, tr, d, p);
  const HSSuperOp heis = u.adjoint() * w * u;

  // Exact label flow: z1 -> e^{i w+ t} z1, z2 -> e^{i w- t} z2 pulled back
  // through the label map.
  const double cp = std::cos(d.omega_plus * t), sp = std::sin(d.omega_plus * t);
  const double cm = std::cos(d.omega_minus * t), sm = std::sin(d.omega_minus * t);
  Eigen::Matrix4d rot = Eigen::Matrix4d::Zero();
  rot(0, 0) = cp;
  rot(0, 2) = -sp;
  rot(2, 0) = sp;
  rot(2, 2) = cp;
  rot(1, 1) = cm;
  rot(1, 3) = -sm;
  rot(3, 1) = sm;
  rot(3, 3) = cm;
  const Eigen::Matrix4d j = xz_map(d, p);
  const Eigen::Matrix4d label_flow = j.inverse() * rot * j;
  const HSSuperOp w_flow = weyl_op(from_vec4(label_flow * to_vec4(r)), tr, d, p);

  const auto idx = low_level_columns(tr, tr.n_max / 2);
  EvolveCheck out;
  out.residual_true_flow = restricted_norm(heis - w_flow, idx, idx);
  out.display_flow_deviation =
      (label_flow - evolution_matrix(-t, d).A).norm();
  const HSVector psi0 = ground_state(tr, d, p);
  const HSVector u_psi0 = u * psi0;
  const complexd phase = psi0.dot(u_psi0);
  out.ground_invariance = (u_psi0 - (phase / std::abs(phase)) * psi0).norm();
  return out;
}

WeylCompose weyl_compose(const PhaseVector& r, const PhaseVector& r_prime,
                         const FockTruncation& t, const DerivedParams& d, const PhysParams& p) {
  const HSSuperOp m = weyl_op(r, t, d, p) * weyl_op(r_prime, t, d, p) *
                      weyl_op(add(r, r_prime), t, d, p).adjoint();
  const HSVector psi0 = ground_state(t, d, p);
  WeylCompose out;
  out.measured_phase = std::arg(psi0.dot(m * psi0));
  const auto z = z_label(r, d, p);
  const auto zp = z_label(r_prime, d, p);
  out.displacement_phase = std::imag(z[0] * std::conj(zp[0]) + z[1] * std::conj(zp[1]));
  const Eigen::Matrix4d omega = omega_form();
  out.scaled_symplectic_phase = -0.5 * (p.hbar + p.theta) * d.mu * d.mu *
                                to_vec4(r).dot(omega * to_vec4(r_prime));
  return out;
}

KernelFitReport kernel_fit(const FockTruncation& t, const DerivedParams& d, const PhysParams& p,
                           int n_pairs, std::uint64_t seed) {
  if (n_pairs < 1) throw std::invalid_argument("n_pairs must be positive");
  const HSVector psi0 = ground_state(t, d, p);
  const Eigen::Matrix4d t_a = shift_matrix(kernel_widths(d, p, KernelVariant::A));
  const Eigen::Matrix4d t_b = shift_matrix(kernel_widths(d, p, KernelVariant::B));
  const Eigen::PartialPivLU<Eigen::Matrix4d> lu_a(t_a), lu_b(t_b);
  std::mt19937_64 eng(seed);
  KernelFitReport rep;
  rep.rows.reserve(n_pairs);
  rep.rss_A = rep.rss_B = rep.max_rel_err_A = rep.max_rel_err_B = 0.0;
  for (int q = 0; q < n_pairs; ++q) {
    KernelFitRow row;
    row.r = random_in_ball(eng);
    row.r_prime = random_in_ball(eng);
    const HSVector a = weyl_apply(row.r, psi0, t, d, p);
    const HSVector b = weyl_apply(row.r_prime, psi0, t, d, p);
    row.oracle = std::norm(a.dot(b));
    const Eigen::Vector4d delta = to_vec4(row.r) - to_vec4(row.r_prime);
    row.variant_A = std::exp(-lu_a.solve(delta).squaredNorm());
    row.variant_B = std::exp(-lu_b.solve(delta).squaredNorm());
    rep.rss_A += (row.variant_A - row.oracle) * (row.variant_A - row.oracle);
    rep.rss_B += (row.variant_B - row.oracle) * (row.variant_B - row.oracle);
    rep.max_rel_err_A =
        std::max(rep.max_rel_err_A, std::abs(row.variant_A - row.oracle) / row.oracle);
    rep.max_rel_err_B =
        std::max(rep.max_rel_err_B, std::abs(row.variant_B - row.oracle) / row.oracle);
    rep.rows.push_back(row);
  }
  rep.selected = rep.rss_A <= rep.rss_B ? KernelVariant::A : KernelVariant::B;
  return rep;
}

std::vector<CheckResult> run_oracle_suite(const FockTruncation& t, const PhysParams& p) {
  t.validate();
  p.validate(true);
  const DerivedParams d = derive(p);
  std::vector<CheckResult> out;
  auto push = [&out](const std::string& name, double residual, double tol) {
    out.push_back({name, residual, tol, residual < tol});
  };

  // Ladder commutator away from the truncation boundary.
  {
    const LadderOps l = build_ladder(t);
    const CMat c = l.b * l.b_dag - l.b_dag * l.b;
    double worst = 0.0;
    for (int n = 0; n < t.n_max - 1; ++n) worst = std::max(worst, std::abs(c(n, n) - 1.0));
    push("ladder_commutator", worst, 1e-12);
  }

  const PhaseSpaceOps ops = build_phase_space_ops(t, p);
  const auto cols = low_level_columns(t, t.n_max / 2);
  const int dim = t.hs_dim();
  const HSSuperOp id = HSSuperOp::Identity(dim, dim);
  const double scale = std::max({p.hbar, p.theta, 1.0});
  auto comm = [](const HSSuperOp& a, const HSSuperOp& b) { return a * b - b * a; };

  // Canonical commutation relations on boundary-free columns.
  {
    double worst = 0.0;
    worst = std::max(worst, column_norm(comm(ops.X1, ops.X2) - I_unit * p.theta * id, cols));
    worst = std::max(worst, column_norm(comm(ops.X1, ops.P1) - I_unit * p.hbar * id, cols));
    worst = std::max(worst, column_norm(comm(ops.X2, ops.P2) - I_unit * p.hbar * id, cols));
    worst = std::max(worst, column_norm(comm(ops.X1, ops.P2), cols));
    worst = std::max(worst, column_norm(comm(ops.X2, ops.P1), cols));
    worst = std::max(worst, column_norm(comm(ops.P1, ops.P2), cols));
    push("canonical_commutators", worst / scale, 1e-10);
  }

  const AOps a = build_A_ops(t, d, p);

  // Two-mode oscillator algebra on boundary-free columns.
  {
    double worst = 0.0;
    worst = std::max(worst, column_norm(comm(a.A1, a.A1_dag) - id, cols));
    worst = std::max(worst, column_norm(comm(a.A2, a.A2_dag) - id, cols));
    worst = std::max(worst, column_norm(comm(a.A1, a.A2), cols));
    worst = std::max(worst, column_norm(comm(a.A1, a.A2_dag), cols));
    push("mode_algebra", worst, 1e-10);
  }

  const HSVector psi0 = ground_state(t, d, p);

  // The ground state is annihilated by both modes.
  push("ground_annihilation", std::max((a.A1 * psi0).norm(), (a.A2 * psi0).norm()), 1e-10);

  // Raw squared norm of the unnormalized ground state matches the geometric
  // closed form e^beta / (1 - e^{2 beta}).
  {
    double raw = 0.0;
    for (int n = 0; n < t.n_max; ++n) raw += std::exp(d.beta * (2 * n + 1));
    const double closed = std::exp(d.beta) / (1.0 - std::exp(2.0 * d.beta));
    push("ground_norm_geometric", std::abs(raw - closed) / closed, 1e-7);
  }

  const PhaseVector r_probe{0.3, -0.1, 0.2, 0.5};
  const PhaseVector r_probe2{-0.2, 0.4, 0.1, -0.3};

  // The Weyl generator expressed through the mode operators and labels.
  {
    const auto z = z_label(r_probe, d, p);
    const HSSuperOp g = weyl_generator(r_probe, t, d, p);
    const HSSuperOp label_form = z[0] * a.A1_dag + z[1] * a.A2_dag -
                                 std::conj(z[0]) * a.A1 - std::conj(z[1]) * a.A2;
    push("generator_label_match", column_norm(g - label_form, cols) / column_norm(g, cols),
         1e-10);
  }

  // Unitarity of the exponentiated Weyl operator.
  if (t.n_max <= 16) {
    const HSSuperOp w = weyl_op(r_probe, t, d, p);
    push("weyl_unitarity", (w.adjoint() * w - id).norm() / std::sqrt(dim), 1e-11);
    const HSVector via_taylor = weyl_apply(r_probe, psi0, t, d, p);
    push("weyl_action_consistency", (w * psi0 - via_taylor).norm(), 1e-12);
  }

  // Overlap kernel against the Gaussian in the shifted separation.
  {
    const Eigen::Matrix4d t_a = shift_matrix(kernel_widths(d, p, KernelVariant::A));
    const Eigen::PartialPivLU<Eigen::Matrix4d> lu(t_a);
    const std::array<std::pair<PhaseVector, PhaseVector>, 3> pairs{
        std::pair<PhaseVector, PhaseVector>{r_probe, r_probe2},
        {{0.1, 0.1, -0.4, 0.2}, {0.5, -0.2, 0.3, 0.1}},
        {{-0.6, 0.2, 0.1, 0.05}, {0.2, 0.3, -0.2, 0.4}}};
    double worst = 0.0;
    for (const auto& [ra, rb] : pairs) {
      const double o = std::norm(overlap(ra, rb, t, d, p));
      const Eigen::Vector4d delta = to_vec4(ra) - to_vec4(rb);
      const double pred = std::exp(-lu.solve(delta).squaredNorm());
      worst = std::max(worst, std::abs(o - pred) / pred);
    }
    push("overlap_kernel", worst, 1e-5);
  }

  // Coherent resolution of identity: diagonal and off-diagonal elements.
  {
    const auto diag = resolution_check(0, 0, 0, 0, t, d, p);
    const auto off = resolution_check(0, 0, 1, 0, t, d, p);
    push("resolution_diagonal", std::abs(diag.value - 1.0), 1e-3);
    push("resolution_offdiagonal", std::abs(off.value), 1e-3);
  }

  // Hamiltonian forms and spectrum.
  {
    const HamiltonianCheck h = hamiltonian_check(t, d, p);
    push("hamiltonian_forms", h.rel_residual, 1e-8);
    push("ground_energy", h.ground_energy_error, 1e-6);
    push("spectral_gaps", std::max(h.gap1_error, h.gap2_error), 1e-6);
  }

  // Heisenberg evolution of Weyl operators follows the exact label flow. The
  // probe time sits inside the truncation's trust window: boundary corruption
  // propagates inward at a finite rate, so large t requires larger n_max.
  if (t.n_max <= 16) {
    const EvolveCheck e = evolve_check(r_probe, 0.1, t, d, p);
    push("evolution_flow", e.residual_true_flow, 1e-6);
    push("ground_invariance", e.ground_invariance, 1e-9);

    const WeylCompose c = weyl_compose(r_probe, r_probe2, t, d, p);
    push("composition_phase",
         std::abs(std::remainder(c.measured_phase - c.displacement_phase,
                                 2.0 * std::numbers::pi)),
         1e-8);
  }

  return out;
}

}  // namespace ncphase::fock
