#pragma once

#include <string>
#include <vector>

namespace palmdiff {

/// Observation region in R^d: an axis-aligned box or a euclidean ball.
///
/// Boundary convention: boxes are half-open, [lo, hi) componentwise, so
/// lattice restrictions have unambiguous counts; balls are closed.
class Window {
 public:
  enum class Kind { box, ball };

  static Window box(std::vector<double> lo, std::vector<double> hi);
  static Window ball(std::vector<double> center, double radius);
  // [-h, h)^d
  static Window centered_box(int dim, double halfwidth);
  // 1-d interval [lo, hi)
  static Window interval(double lo, double hi);

  Kind kind() const { return kind_; }
  int dim() const { return dim_; }
  double volume() const;
  bool contains(const std::vector<double>& x) const;
  Window translated(const std::vector<double>& t) const;

  // Closed bounding interval hull, per coordinate.
  std::vector<double> bound_lo() const;
  std::vector<double> bound_hi() const;

  // box accessors (throw on kind mismatch)
  const std::vector<double>& lo() const;
  const std::vector<double>& hi() const;
  // ball accessors
  const std::vector<double>& center() const;
  double radius() const;

  std::string describe() const;

 private:
  Window() = default;
  Kind kind_ = Kind::box;
  int dim_ = 0;
  std::vector<double> a_, b_;  // box: lo/hi; ball: center in a_, radius in r_
  double r_ = 0.0;
};

/// Volume of the unit euclidean ball in dimension d.
double unit_ball_volume(int dim);

/// True iff `inner` is a subset of `outer` (exact for every kind pair).
bool window_covers(const Window& outer, const Window& inner);

}  // namespace palmdiff
