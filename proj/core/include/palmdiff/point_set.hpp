#pragma once

#include <cstddef>
#include <vector>

#include "palmdiff/window.hpp"

namespace palmdiff {

/// A finite point configuration together with the window over which it was
/// fully observed. Coordinates are stored flat, row-major (size() * dim()).
///
/// Invariants: every point lies in the window; points are pairwise distinct
/// within 1e-12 (checked at construction).
class PointSet {
 public:
  PointSet(std::vector<std::vector<double>> points, Window window);
  PointSet(std::vector<double> flat_coords, int dim, Window window);

  int dim() const { return dim_; }
  std::size_t size() const { return coords_.size() / dim_; }
  const std::vector<double>& coords() const { return coords_; }
  double coord(std::size_t i, int j) const { return coords_[i * dim_ + j]; }
  std::vector<double> point(std::size_t i) const;
  const Window& window() const { return window_; }

 private:
  void validate() const;
  std::vector<double> coords_;
  int dim_;
  Window window_;
};

/// card(A ∩ ps): number of points inside A (box half-open, ball closed).
long count_in(const PointSet& ps, const Window& A);

/// Shift every point (and the window) by -t.
PointSet translate(const PointSet& ps, const std::vector<double>& t);

/// Keep exactly the points inside A; the window becomes A.
PointSet restrict_to(const PointSet& ps, const Window& A);

}  // namespace palmdiff
