#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

namespace ncphase {

/// Numerical-evaluation knobs shared by the smoothing maps.
struct QuadratureSpec {
  int hermite_order = 20;      ///< per-axis tensor Gauss-Hermite order, in [2, 128]
  long mc_samples = 100000;    ///< Monte Carlo cross-check sample count
  std::uint64_t rng_seed = 12345;
  /// Convergence target for the order-halving error estimate. The estimate is
  /// conservative (it approximates the half-order rule's error, typically two
  /// to three decades above the full rule's), so the default matches what the
  /// default order certifies on unit-width observables; tighten it together
  /// with hermite_order.
  double rel_tol = 5e-3;

  void validate() const;
};

/// Gauss-Hermite rule for the weight e^{-x^2}, normalized so that the weights
/// sum to 1 (i.e. they integrate f against e^{-x^2}/sqrt(pi)). Nodes ascend.
/// Rules are computed once per order and cached (thread-safe).
struct GaussHermite {
  std::vector<double> nodes;
  std::vector<double> weights;

  static const GaussHermite& get(int order);
};

/// Deterministic pairwise (tree) summation; the result is independent of any
/// parallel partitioning applied upstream because callers sum fixed-index
/// blocks. Returns 0 for empty input.
double pairwise_sum(std::span<const double> v);

/// Number of worker threads: NCPHASE_THREADS if set (clamped to [1, 256]),
/// otherwise the hardware concurrency (at least 1).
int worker_threads();

/// Runs fn(i) for i in [0, n) on the worker pool in fixed-size chunks.
/// fn must write results only to caller-owned per-index slots so that the
/// combination order stays deterministic.
void parallel_for(long n, const std::function<void(long)>& fn);

/// Deterministic standard-normal generator: mt19937_64 (whose raw output is
/// pinned by the C++ standard) with a hand-rolled Box-Muller transform over
/// ((x >> 11) + 1) * 2^-53 uniforms, so streams are bitwise reproducible
/// across platforms and stdlib versions (std::normal_distribution is not).
class NormalStream {
 public:
  explicit NormalStream(std::uint64_t seed);
  double next();

 private:
  std::mt19937_64 eng_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace ncphase
