#include "palmdiff/point_set.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace palmdiff {

namespace {
constexpr double kDistinctTol = 1e-12;
}

PointSet::PointSet(std::vector<std::vector<double>> points, Window window)
    : dim_(window.dim()), window_(std::move(window)) {
  coords_.reserve(points.size() * dim_);
  for (const auto& p : points) {
    if (static_cast<int>(p.size()) != dim_)
      throw std::invalid_argument("PointSet: point dimension does not match window");
    coords_.insert(coords_.end(), p.begin(), p.end());
  }
  validate();
}

PointSet::PointSet(std::vector<double> flat_coords, int dim, Window window)
    : coords_(std::move(flat_coords)), dim_(dim), window_(std::move(window)) {
  if (dim_ <= 0 || dim_ != window_.dim() || coords_.size() % dim_ != 0)
    throw std::invalid_argument("PointSet: bad flat coordinate array");
  validate();
}

void PointSet::validate() const {
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> p(coords_.begin() + i * dim_, coords_.begin() + (i + 1) * dim_);
    if (!window_.contains(p))
      throw std::invalid_argument("PointSet: point outside its window");
  }
  // pairwise-distinct check via lexicographic sort
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    for (int j = 0; j < dim_; ++j) {
      const double x = coords_[a * dim_ + j], y = coords_[b * dim_ + j];
      if (x != y) return x < y;
    }
    return false;
  });
  for (std::size_t r = 1; r < n; ++r) {
    const std::size_t a = order[r - 1], b = order[r];
    double maxabs = 0.0;
    for (int j = 0; j < dim_; ++j)
      maxabs = std::max(maxabs, std::abs(coords_[a * dim_ + j] - coords_[b * dim_ + j]));
    if (maxabs <= kDistinctTol)
      throw std::invalid_argument("PointSet: duplicate points (within 1e-12)");
  }
}

std::vector<double> PointSet::point(std::size_t i) const {
  return {coords_.begin() + i * dim_, coords_.begin() + (i + 1) * dim_};
}

long count_in(const PointSet& ps, const Window& A) {
  if (A.dim() != ps.dim()) throw std::invalid_argument("count_in: dimension mismatch");
  long n = 0;
  std::vector<double> p(ps.dim());
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (int j = 0; j < ps.dim(); ++j) p[j] = ps.coord(i, j);
    if (A.contains(p)) ++n;
  }
  return n;
}

PointSet translate(const PointSet& ps, const std::vector<double>& t) {
  if (static_cast<int>(t.size()) != ps.dim())
    throw std::invalid_argument("translate: dimension mismatch");
  std::vector<double> c = ps.coords();
  const int d = ps.dim();
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= t[i % d];
  std::vector<double> neg(t);
  for (auto& v : neg) v = -v;
  return PointSet(std::move(c), d, ps.window().translated(neg));
}

PointSet restrict_to(const PointSet& ps, const Window& A) {
  if (A.dim() != ps.dim()) throw std::invalid_argument("restrict_to: dimension mismatch");
  const int d = ps.dim();
  std::vector<double> kept;
  std::vector<double> p(d);
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (int j = 0; j < d; ++j) p[j] = ps.coord(i, j);
    if (A.contains(p)) kept.insert(kept.end(), p.begin(), p.end());
  }
  return PointSet(std::move(kept), d, A);
}

}  // namespace palmdiff
