#pragma once

#include <complex>
#include <vector>

#include "palmdiff/window.hpp"

namespace palmdiff {

struct Atom {
  std::vector<double> loc;
  double weight;
};

/// A finite positive measure made of weighted Dirac atoms.
///
/// Atoms are kept sorted lexicographically by location and merged whenever
/// two locations fall within merge_tol of each other (L-inf). Merging is a
/// deterministic sorted sweep, so the result is independent of the order in
/// which raw atoms were produced.
class AtomicMeasure {
 public:
  static constexpr double kDefaultMergeTol = 1e-9;

  explicit AtomicMeasure(int dim, double merge_tol = kDefaultMergeTol);
  static AtomicMeasure from_atoms(int dim, std::vector<Atom> raw,
                                  double merge_tol = kDefaultMergeTol);
  static AtomicMeasure dirac(std::vector<double> loc, double weight = 1.0,
                             double merge_tol = kDefaultMergeTol);

  int dim() const { return dim_; }
  double merge_tol() const { return merge_tol_; }
  const std::vector<Atom>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }

  double total_mass() const;
  /// Sum of weights of atoms inside `region`.
  double mass_in(const Window& region) const;
  /// Weight of the atom within merge_tol of loc, or 0 if there is none.
  double weight_at(const std::vector<double>& loc) const;

  AtomicMeasure scaled(double factor) const;
  AtomicMeasure translated(const std::vector<double>& t) const;

 private:
  int dim_;
  double merge_tol_;
  std::vector<Atom> atoms_;  // sorted lexicographically by location
};

/// m̂(t) = Σ_j w_j exp(-2πi <t, x_j>), one value per requested frequency.
std::vector<std::complex<double>> fourier_at(const AtomicMeasure& m,
                                             const std::vector<std::vector<double>>& freqs,
                                             int threads = 1);

/// Convolution: atoms at all pairwise sums with product weights.
AtomicMeasure convolve(const AtomicMeasure& m1, const AtomicMeasure& m2);

/// Pushforward under x -> -x.
AtomicMeasure reflect(const AtomicMeasure& m);

}  // namespace palmdiff
