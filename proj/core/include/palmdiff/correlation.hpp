#pragma once

#include <map>
#include <vector>

namespace palmdiff {

/// Lattice correlation values k -> E X_0 X_k on a bounded support box of Z^d.
/// Values are stored symmetrically: set() records both k and -k.
class CorrelationSequence {
 public:
  explicit CorrelationSequence(int dim);

  int dim() const { return dim_; }
  void set(const std::vector<int>& k, double value);
  bool has(const std::vector<int>& k) const;
  double at(const std::vector<int>& k) const;  // throws if absent
  double value_or(const std::vector<int>& k, double fallback) const;
  const std::map<std::vector<int>, double>& values() const { return values_; }
  /// Largest |k_i| over the stored support.
  int support_radius() const;

 private:
  int dim_;
  std::map<std::vector<int>, double> values_;
};

/// f(x) = 1/4 + arcsin(x)/(2π), the orthant probability of a standard
/// bivariate normal with correlation x.
double arcsine_orthant(double x);

/// Power-series coefficients a_0..a_K of f: a_0 = 1/4,
/// a_{2m+1} = (2m)! / (2π 4^m (m!)^2 (2m+1)), even-index terms (k >= 2) zero.
std::vector<double> arcsine_coefficients(int K);

/// Apply f valuewise: k -> f(rho(k)). Rejects |rho(k)| > 1.
CorrelationSequence arcsine_transform(const CorrelationSequence& rho);

}  // namespace palmdiff
