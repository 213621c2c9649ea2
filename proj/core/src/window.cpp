#include "palmdiff/window.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace palmdiff {

Window Window::box(std::vector<double> lo, std::vector<double> hi) {
  if (lo.empty() || lo.size() != hi.size())
    throw std::invalid_argument("Window::box: empty or mismatched corners");
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (!(lo[i] < hi[i]))
      throw std::invalid_argument("Window::box: lower corner must be below upper corner");
  Window w;
  w.kind_ = Kind::box;
  w.dim_ = static_cast<int>(lo.size());
  w.a_ = std::move(lo);
  w.b_ = std::move(hi);
  return w;
}

Window Window::ball(std::vector<double> center, double radius) {
  if (center.empty()) throw std::invalid_argument("Window::ball: empty center");
  if (!(radius > 0.0)) throw std::invalid_argument("Window::ball: radius must be positive");
  Window w;
  w.kind_ = Kind::ball;
  w.dim_ = static_cast<int>(center.size());
  w.a_ = std::move(center);
  w.r_ = radius;
  return w;
}

Window Window::centered_box(int dim, double halfwidth) {
  return box(std::vector<double>(dim, -halfwidth), std::vector<double>(dim, halfwidth));
}

Window Window::interval(double lo, double hi) { return box({lo}, {hi}); }

double unit_ball_volume(int dim) {
  return std::pow(std::numbers::pi, dim / 2.0) / std::tgamma(dim / 2.0 + 1.0);
}

double Window::volume() const {
  if (kind_ == Kind::box) {
    double v = 1.0;
    for (int i = 0; i < dim_; ++i) v *= b_[i] - a_[i];
    return v;
  }
  return unit_ball_volume(dim_) * std::pow(r_, dim_);
}

bool Window::contains(const std::vector<double>& x) const {
  if (static_cast<int>(x.size()) != dim_)
    throw std::invalid_argument("Window::contains: dimension mismatch");
  if (kind_ == Kind::box) {
    for (int i = 0; i < dim_; ++i)
      if (x[i] < a_[i] || x[i] >= b_[i]) return false;
    return true;
  }
  double d2 = 0.0;
  for (int i = 0; i < dim_; ++i) {
    const double dx = x[i] - a_[i];
    d2 += dx * dx;
  }
  return d2 <= r_ * r_;
}

Window Window::translated(const std::vector<double>& t) const {
  if (static_cast<int>(t.size()) != dim_)
    throw std::invalid_argument("Window::translated: dimension mismatch");
  Window w = *this;
  for (int i = 0; i < dim_; ++i) w.a_[i] += t[i];
  if (kind_ == Kind::box)
    for (int i = 0; i < dim_; ++i) w.b_[i] += t[i];
  return w;
}

std::vector<double> Window::bound_lo() const {
  if (kind_ == Kind::box) return a_;
  std::vector<double> lo(a_);
  for (auto& v : lo) v -= r_;
  return lo;
}

std::vector<double> Window::bound_hi() const {
  if (kind_ == Kind::box) return b_;
  std::vector<double> hi(a_);
  for (auto& v : hi) v += r_;
  return hi;
}

const std::vector<double>& Window::lo() const {
  if (kind_ != Kind::box) throw std::logic_error("Window::lo: not a box");
  return a_;
}

const std::vector<double>& Window::hi() const {
  if (kind_ != Kind::box) throw std::logic_error("Window::hi: not a box");
  return b_;
}

const std::vector<double>& Window::center() const {
  if (kind_ != Kind::ball) throw std::logic_error("Window::center: not a ball");
  return a_;
}

double Window::radius() const {
  if (kind_ != Kind::ball) throw std::logic_error("Window::radius: not a ball");
  return r_;
}

std::string Window::describe() const {
  std::ostringstream os;
  if (kind_ == Kind::box) {
    os << "box[";
    for (int i = 0; i < dim_; ++i) os << (i ? "x" : "") << "[" << a_[i] << "," << b_[i] << ")";
    os << "]";
  } else {
    os << "ball(c=(";
    for (int i = 0; i < dim_; ++i) os << (i ? "," : "") << a_[i];
    os << "),r=" << r_ << ")";
  }
  return os.str();
}

bool window_covers(const Window& outer, const Window& inner) {
  if (outer.dim() != inner.dim())
    throw std::invalid_argument("window_covers: dimension mismatch");
  const int d = outer.dim();
  if (outer.kind() == Window::Kind::box) {
    // box contains box / ball: compare coordinate hulls.
    const auto ilo = inner.bound_lo();
    const auto ihi = inner.bound_hi();
    for (int i = 0; i < d; ++i)
      if (ilo[i] < outer.lo()[i] || ihi[i] > outer.hi()[i]) return false;
    return true;
  }
  if (inner.kind() == Window::Kind::ball) {
    // ball in ball: |c1 - c2| + r1 <= r2
    double d2 = 0.0;
    for (int i = 0; i < d; ++i) {
      const double dx = inner.center()[i] - outer.center()[i];
      d2 += dx * dx;
    }
    return std::sqrt(d2) + inner.radius() <= outer.radius();
  }
  // box in ball: every corner inside.
  const auto& lo = inner.lo();
  const auto& hi = inner.hi();
  for (unsigned long mask = 0; mask < (1ul << d); ++mask) {
    double d2 = 0.0;
    for (int i = 0; i < d; ++i) {
      const double c = (mask >> i) & 1 ? hi[i] : lo[i];
      const double dx = c - outer.center()[i];
      d2 += dx * dx;
    }
    if (d2 > outer.radius() * outer.radius()) return false;
  }
  return true;
}

}  // namespace palmdiff
