#include "ncphase/function_space.hpp"

#include <cmath>

#include <json.hpp>

namespace ncphase {

double GaussFactor::operator()(double u) const {
  if (amplitude == 0.0) return offset;
  const double t = (u - center) / width;
  return offset + amplitude * std::exp(-t * t);
}

SepGaussFunction SepGaussFunction::separable(const std::array<GaussFactor, 4>& f) {
  for (const auto& fac : f)
    if (!(fac.width > 0.0))
      throw std::invalid_argument("GaussFactor width must be positive");
  SepGaussFunction s;
  s.factors_ = f;
  return s;
}

SepGaussFunction SepGaussFunction::callable(Callable f) {
  if (!f) throw std::invalid_argument("callable function must be non-empty");
  SepGaussFunction s;
  s.escape_ = std::move(f);
  return s;
}

SepGaussFunction SepGaussFunction::one() {
  return separable({GaussFactor{}, GaussFactor{}, GaussFactor{}, GaussFactor{}});
}

double SepGaussFunction::operator()(const PhaseVector& r) const {
  if (escape_) return escape_(r);
  return factors_[0](r[0]) * factors_[1](r[1]) * factors_[2](r[2]) * factors_[3](r[3]);
}

const std::array<GaussFactor, 4>& SepGaussFunction::factors() const {
  if (escape_) throw std::logic_error("factors(): function is callable-backed, not separable");
  return factors_;
}

SepGaussFunction SepGaussFunction::f_infinity(const std::array<bool, 4>& dirs) const {
  if (escape_)
    throw std::logic_error("f_infinity: limit not computable for callable-backed functions");
  std::array<GaussFactor, 4> out = factors_;
  for (int i = 0; i < 4; ++i)
    if (dirs[i]) out[i] = GaussFactor{0.0, 0.0, 1.0, factors_[i].offset};
  return separable(out);
}

SepGaussFunction SepGaussFunction::from_json(const nlohmann::json& j) {
  const auto& arr = j.at("factors");
  if (!arr.is_array() || arr.size() != 4)
    throw std::invalid_argument("function JSON must contain exactly 4 factors");
  std::array<GaussFactor, 4> f;
  for (int i = 0; i < 4; ++i) {
    const auto& e = arr.at(i);
    f[i].amplitude = e.value("a", 0.0);
    f[i].center = e.value("b", 0.0);
    f[i].width = e.value("s", 1.0);
    f[i].offset = e.value("c", 0.0);
  }
  return separable(f);
}

nlohmann::json SepGaussFunction::to_json() const {
  const auto& f = factors();  // throws for callable
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& e : f)
    arr.push_back({{"a", e.amplitude}, {"b", e.center}, {"s", e.width}, {"c", e.offset}});
  return nlohmann::json{{"factors", arr}};
}

}  // namespace ncphase
