#include "ncphase/smoothing.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace ncphase {

KernelWidths kernel_widths(const DerivedParams& d, const PhysParams& p, KernelVariant variant) {
  p.validate();
  if (!(p.hbar > 0.0))
    throw invalid_params("kernel_widths requires hbar > 0; use smooth_hbar0 for the hbar = 0 branch");
  const double mw = p.mass * p.omega;
  // Fourth root of the selected radical: rad1/rad2 already hold square roots.
  const double quartic = std::sqrt(variant == KernelVariant::A ? d.rad1 : d.rad2);
  const double pf = d.mu * quartic / (2.0 * std::sqrt(mw) * p.hbar);
  const double qg = d.mu * std::sqrt(mw) * quartic / d.rad2;
  KernelWidths k;
  k.f_coeff_plus = pf / std::sqrt(d.gamma_plus);
  k.f_coeff_minus = pf / std::sqrt(d.gamma_minus);
  k.g_coeff_plus = qg / std::sqrt(d.gamma_plus);
  k.g_coeff_minus = -qg / std::sqrt(d.gamma_minus);
  return k;
}

Eigen::Matrix4d shift_matrix(const KernelWidths& k) {
  Eigen::Matrix4d T = Eigen::Matrix4d::Zero();
  T(0, 0) = k.f_coeff_plus;  T(0, 1) = k.f_coeff_minus;   // x1 <- f(w1, w2)
  T(1, 2) = k.f_coeff_plus;  T(1, 3) = k.f_coeff_minus;   // x2 <- f(w3, w4)
  T(2, 2) = k.g_coeff_plus;  T(2, 3) = k.g_coeff_minus;   // y1 <- g(w3, w4)
  T(3, 0) = -k.g_coeff_plus; T(3, 1) = -k.g_coeff_minus;  // y2 <- -g(w1, w2)
  return T;
}

namespace detail {

Eigen::Vector4d to_vec(const PhaseVector& r) { return {r.x1, r.x2, r.y1, r.y2}; }

double gh_engine(const SepGaussFunction& F, const Eigen::Vector4d& base, const Eigen::Matrix4d& K,
                 int order) {
  const GaussHermite& rule = GaussHermite::get(order);
  const int n = order;
  std::vector<double> outer(n);
  parallel_for(n, [&](long i1) {
    std::vector<double> inner;
    inner.reserve(static_cast<std::size_t>(n) * n * n);
    const Eigen::Vector4d a1 = base + K.col(0) * rule.nodes[i1];
    for (int i2 = 0; i2 < n; ++i2) {
      const Eigen::Vector4d a2 = a1 + K.col(1) * rule.nodes[i2];
      const double w2 = rule.weights[i2];
      for (int i3 = 0; i3 < n; ++i3) {
        const Eigen::Vector4d a3 = a2 + K.col(2) * rule.nodes[i3];
        const double w23 = w2 * rule.weights[i3];
        for (int i4 = 0; i4 < n; ++i4) {
          const Eigen::Vector4d a4 = a3 + K.col(3) * rule.nodes[i4];
          PhaseVector arg{a4[0], a4[1], a4[2], a4[3]};
          inner.push_back(w23 * rule.weights[i4] * F(arg));
        }
      }
    }
    outer[i1] = rule.weights[i1] * pairwise_sum(inner);
  });
  return pairwise_sum(outer);
}

SmoothResult gh_result(const SepGaussFunction& F, const Eigen::Vector4d& base,
                       const Eigen::Matrix4d& K, const QuadratureSpec& q) {
  q.validate();
  const double value = gh_engine(F, base, K, q.hermite_order);
  const int half = std::max(2, q.hermite_order / 2);
  const double coarse = gh_engine(F, base, K, half);
  SmoothResult res;
  res.value = value;
  res.error_estimate = std::abs(value - coarse) + 16.0 * std::numeric_limits<double>::epsilon() *
                                                      std::max(std::abs(value), 1.0);
  res.converged = res.error_estimate <= q.rel_tol * std::max(std::abs(value), 1e-300);
  return res;
}

double closed_form_engine(const std::array<GaussFactor, 4>& factors, const Eigen::Vector4d& base,
                          const Eigen::Matrix4d& K) {
  // Expand the product of (offset + amplitude*exp(...)) factors over subsets S
  // of the Gaussian-active coordinates; every term is a Gaussian integral
  //   (det M)^{-1/2} exp(b^T M^{-1} b - C),
  // with M = I + sum k_i k_i^T / s_i^2, b = sum (alpha_i/s_i^2) k_i,
  // C = sum alpha_i^2/s_i^2 over i in S, alpha_i = base_i - center_i and
  // k_i the i-th row of K.
  int active[4], n_active = 0;
  double const_part = 1.0;
  for (int i = 0; i < 4; ++i) {
    if (factors[i].is_constant())
      const_part *= factors[i].offset;
    else
      active[n_active++] = i;
  }

  double total = 0.0;
  for (int mask = 0; mask < (1 << n_active); ++mask) {
    double coeff = const_part;
    Eigen::Matrix4d M = Eigen::Matrix4d::Identity();
    Eigen::Vector4d b = Eigen::Vector4d::Zero();
    double C = 0.0;
    for (int j = 0; j < n_active; ++j) {
      const int i = active[j];
      const GaussFactor& f = factors[i];
      if (mask & (1 << j)) {
        coeff *= f.amplitude;
        const double inv_s2 = 1.0 / (f.width * f.width);
        const Eigen::Vector4d k = K.row(i).transpose();
        const double alpha = base[i] - f.center;
        M += inv_s2 * k * k.transpose();
        b += (alpha * inv_s2) * k;
        C += alpha * alpha * inv_s2;
      } else {
        coeff *= f.offset;
      }
    }
    if (coeff == 0.0) continue;
    if (mask == 0) {
      total += coeff;
      continue;
    }
    const Eigen::LLT<Eigen::Matrix4d> llt(M);
    const Eigen::Matrix4d L = llt.matrixL();
    const double sqrt_det = L(0, 0) * L(1, 1) * L(2, 2) * L(3, 3);
    const double quad = b.dot(llt.solve(b));
    total += coeff * std::exp(quad - C) / sqrt_det;
  }
  return total;
}

}  // namespace detail

SmoothResult smooth(const SepGaussFunction& F, const PhaseVector& r, const PhysParams& p,
                    const QuadratureSpec& q, KernelVariant variant) {
  const DerivedParams d = derive(p);
  const Eigen::Matrix4d T = shift_matrix(kernel_widths(d, p, variant));
  return detail::gh_result(F, detail::to_vec(r), T, q);
}

double smooth_closed_form(const SepGaussFunction& F, const PhaseVector& r, const PhysParams& p,
                          KernelVariant variant) {
  if (!F.is_separable())
    throw std::logic_error("smooth_closed_form requires a separable function");
  const DerivedParams d = derive(p);
  const Eigen::Matrix4d T = shift_matrix(kernel_widths(d, p, variant));
  return detail::closed_form_engine(F.factors(), detail::to_vec(r), T);
}

SmoothResult smooth_theta0(const SepGaussFunction& F, const PhaseVector& r, double hbar,
                           double mass, double omega, const QuadratureSpec& q) {
  return smooth(F, r, PhysParams{hbar, 0.0, mass, omega}, q);
}

double smooth_hbar0(const SepGaussFunction& F, const PhaseVector& r, double theta,
                    const PhysParams& p) {
  if (!(theta > 0.0)) throw invalid_params("smooth_hbar0 requires theta > 0");
  if (!F.is_separable())
    throw std::logic_error("smooth_hbar0 requires a separable function (limit at infinity needed)");
  const double mw = p.mass * p.omega;
  const double k2 = 4.0 * mw * mw * theta;  // shift-coefficient norm^2 per momentum coordinate
  const auto& f = F.factors();
  double value = f[0].offset * f[1].offset;  // position factors -> limits at infinity
  const double ys[2] = {r.y1, r.y2};
  for (int i = 0; i < 2; ++i) {
    const GaussFactor& fac = f[2 + i];
    if (fac.is_constant()) {
      value *= fac.offset;
    } else {
      const double s2 = fac.width * fac.width + k2;
      const double dy = ys[i] - fac.center;
      value *= fac.offset + fac.amplitude * fac.width / std::sqrt(s2) * std::exp(-dy * dy / s2);
    }
  }
  return value;
}

MCEstimate smooth_mc(const SepGaussFunction& F, const PhaseVector& r, const PhysParams& p,
                     const QuadratureSpec& q, KernelVariant variant) {
  q.validate();
  if (q.mc_samples < 1000) throw std::invalid_argument("smooth_mc requires mc_samples >= 1000");
  const DerivedParams d = derive(p);
  const Eigen::Matrix4d T = shift_matrix(kernel_widths(d, p, variant));
  const Eigen::Vector4d base = detail::to_vec(r);

  constexpr long kBlock = 8192;
  const long n_blocks = (q.mc_samples + kBlock - 1) / kBlock;
  std::vector<double> block_sums(n_blocks), block_sumsq(n_blocks);
  parallel_for(n_blocks, [&](long b) {
    // Per-block generator seeded from (seed, block index): deterministic for
    // any thread count; blocks are combined in index order afterwards.
    NormalStream rng(q.rng_seed + 0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(b + 1));
    const long lo = b * kBlock;
    const long hi = std::min(q.mc_samples, lo + kBlock);
    std::vector<double> vals(static_cast<std::size_t>(hi - lo));
    for (auto& v : vals) {
      Eigen::Vector4d w{rng.next(), rng.next(), rng.next(), rng.next()};
      // The e^{-|w|^2} weight has per-axis variance 1/2: w/sqrt(2) is standard.
      const Eigen::Vector4d arg = base + T * (w / std::numbers::sqrt2);
      v = F(PhaseVector{arg[0], arg[1], arg[2], arg[3]});
    }
    block_sums[b] = pairwise_sum(vals);
    for (auto& v : vals) v *= v;
    block_sumsq[b] = pairwise_sum(vals);
  });
  const double n = static_cast<double>(q.mc_samples);
  const double sum = pairwise_sum(block_sums);
  const double sumsq = pairwise_sum(block_sumsq);
  MCEstimate est;
  est.value = sum / n;
  const double var = std::max(0.0, (sumsq - n * est.value * est.value) / std::max(1.0, n - 1.0));
  est.std_error = std::sqrt(var / n);
  return est;
}

}  // namespace ncphase
