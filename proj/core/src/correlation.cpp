#include "palmdiff/correlation.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace palmdiff {

CorrelationSequence::CorrelationSequence(int dim) : dim_(dim) {
  if (dim <= 0) throw std::invalid_argument("CorrelationSequence: dim must be positive");
}

void CorrelationSequence::set(const std::vector<int>& k, double value) {
  if (static_cast<int>(k.size()) != dim_)
    throw std::invalid_argument("CorrelationSequence::set: dimension mismatch");
  values_[k] = value;
  std::vector<int> neg(k);
  for (auto& v : neg) v = -v;
  values_[neg] = value;
}

bool CorrelationSequence::has(const std::vector<int>& k) const {
  return values_.count(k) != 0;
}

double CorrelationSequence::at(const std::vector<int>& k) const {
  auto it = values_.find(k);
  if (it == values_.end())
    throw std::out_of_range("CorrelationSequence::at: lag not stored");
  return it->second;
}

double CorrelationSequence::value_or(const std::vector<int>& k, double fallback) const {
  auto it = values_.find(k);
  return it == values_.end() ? fallback : it->second;
}

int CorrelationSequence::support_radius() const {
  int r = 0;
  for (const auto& [k, v] : values_)
    for (int c : k) r = std::max(r, std::abs(c));
  return r;
}

double arcsine_orthant(double x) {
  if (std::abs(x) > 1.0)
    throw std::invalid_argument("arcsine_orthant: argument outside [-1, 1]");
  return 0.25 + std::asin(x) / (2.0 * std::numbers::pi);
}

std::vector<double> arcsine_coefficients(int K) {
  if (K < 0) throw std::invalid_argument("arcsine_coefficients: K must be >= 0");
  std::vector<double> a(K + 1, 0.0);
  a[0] = 0.25;
  // central binomial ratio c_m = (2m)! / (4^m (m!)^2), built iteratively
  double c = 1.0;
  for (int m = 0; 2 * m + 1 <= K; ++m) {
    a[2 * m + 1] = c / (2.0 * std::numbers::pi * (2 * m + 1));
    c *= (2.0 * m + 1.0) / (2.0 * m + 2.0);
  }
  return a;
}

CorrelationSequence arcsine_transform(const CorrelationSequence& rho) {
  CorrelationSequence out(rho.dim());
  for (const auto& [k, v] : rho.values()) {
    if (std::abs(v) > 1.0)
      throw std::invalid_argument("arcsine_transform: correlation outside [-1, 1]");
    out.set(k, arcsine_orthant(v));
  }
  return out;
}

}  // namespace palmdiff
