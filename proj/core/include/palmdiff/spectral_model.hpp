#pragma once

#include <functional>
#include <string>

#include "palmdiff/atomic_measure.hpp"
#include "palmdiff/binary_field.hpp"

namespace palmdiff {

/// A spectral measure split into a pure-point part and an absolutely
/// continuous part kept as an evaluable density (grids are produced only at
/// comparison time).
struct SpectralModel {
  AtomicMeasure pure_point;
  std::function<double(const std::vector<double>&)> ac_density;  // >= 0
  std::string label;

  int dim() const { return pure_point.dim(); }
};

/// Periodization over the lattice translates listed in `reps`:
/// atoms replicated at location + k, density t -> Σ_k density(t - k).
SpectralModel periodize(const SpectralModel& m, const IntBox& reps);

/// Spectral measure of the i.i.d. Bernoulli(p) field on Z^d:
/// p^2 δ_0 + p(1-p) Lebesgue on the unit cell [0,1)^d.
SpectralModel bernoulli_spectral_model(double p, int dim);

/// Spectral measure of the constant field X ≡ 1: δ_0.
SpectralModel ones_spectral_model(int dim);

}  // namespace palmdiff
