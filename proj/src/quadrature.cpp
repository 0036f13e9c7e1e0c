#include "ncphase/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <future>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <thread>

#include <Eigen/Dense>

namespace ncphase {

void QuadratureSpec::validate() const {
  if (hermite_order < 2 || hermite_order > 128)
    throw std::invalid_argument("hermite_order must lie in [2, 128]");
  if (!(rel_tol > 0.0)) throw std::invalid_argument("rel_tol must be positive");
  if (mc_samples < 0) throw std::invalid_argument("mc_samples must be non-negative");
}

namespace {

GaussHermite compute_rule(int order) {
  // Golub-Welsch: the Jacobi matrix of the (physicists') Hermite polynomials
  // is tridiagonal with zero diagonal and off-diagonal sqrt(k/2); its
  // eigenvalues are the nodes, and the squared first eigenvector components
  // are the weights normalized to sum 1 (the e^{-x^2}/sqrt(pi) measure).
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(order);
  Eigen::VectorXd sub(order - 1);
  for (int k = 1; k < order; ++k) sub[k - 1] = std::sqrt(0.5 * k);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  GaussHermite rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  for (int i = 0; i < order; ++i) {
    rule.nodes[i] = es.eigenvalues()[i];
    const double v0 = es.eigenvectors()(0, i);
    rule.weights[i] = v0 * v0;
  }
  return rule;
}

}  // namespace

const GaussHermite& GaussHermite::get(int order) {
  if (order < 1 || order > 256) throw std::invalid_argument("Gauss-Hermite order out of range");
  static std::mutex mtx;
  static std::map<int, GaussHermite> cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, compute_rule(order)).first;
  return it->second;
}

double pairwise_sum(std::span<const double> v) {
  const std::size_t n = v.size();
  if (n == 0) return 0.0;
  if (n <= 8) {
    double s = 0.0;
    for (double x : v) s += x;
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

int worker_threads() {
  if (const char* env = std::getenv("NCPHASE_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v >= 1) return static_cast<int>(std::min(v, 256L));
    return 1;
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? static_cast<int>(hc) : 1;
}

void parallel_for(long n, const std::function<void(long)>& fn) {
  if (n <= 0) return;
  const int workers = std::min<long>(worker_threads(), n);
  if (workers <= 1) {
    for (long i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::future<void>> futs;
  futs.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    futs.push_back(std::async(std::launch::async, [&, w] {
      for (long i = w; i < n; i += workers) fn(i);
    }));
  }
  for (auto& f : futs) f.get();  // propagates exceptions
}

NormalStream::NormalStream(std::uint64_t seed) : eng_(seed) {}

double NormalStream::next() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // 53-bit uniforms in (0, 1]; the +1 keeps log() finite.
  const double u1 = static_cast<double>((eng_() >> 11) + 1) * 0x1.0p-53;
  const double u2 = static_cast<double>((eng_() >> 11) + 1) * 0x1.0p-53;
  const double rad = std::sqrt(-2.0 * std::log(u1));
  const double ang = 2.0 * std::numbers::pi * u2;
  spare_ = rad * std::sin(ang);
  has_spare_ = true;
  return rad * std::cos(ang);
}

}  // namespace ncphase
